// Copyright 2026 The nmrsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA kernels. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the CPUID check in kernels.cpp.
//
// A __m256d holds two complex numbers laid out as [re0, im0, re1, im1].

#include <immintrin.h>

#include "nmrsep/kernels/kernels.hpp"

namespace nmrsep::kernels::detail {
namespace {

inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

// Lane-wise complex product a * b.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

// Lane-wise conj(a) * b.
inline __m256d cmul_conj(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmsubadd_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

// Sum of the two complex lanes.
inline Complex hsum_complex(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  alignas(16) double out[2];
  _mm_store_pd(out, _mm_add_pd(lo, hi));
  return {out[0], out[1]};
}

}  // namespace

void gemm_avx2(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = Complex(0.0, 0.0);
  const std::size_t paired = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    Complex* c_row = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      const __m256d a_re = _mm256_set1_pd(aik.real());
      const __m256d a_im = _mm256_set1_pd(aik.imag());
      const Complex* b_row = b + k * n;
      std::size_t j = 0;
      for (; j < paired; j += 2) {
        const __m256d bv = _mm256_loadu_pd(as_doubles(b_row + j));
        const __m256d b_swap = _mm256_permute_pd(bv, 0b0101);
        const __m256d prod = _mm256_fmaddsub_pd(a_re, bv, _mm256_mul_pd(a_im, b_swap));
        double* dst = as_doubles(c_row + j);
        _mm256_storeu_pd(dst, _mm256_add_pd(_mm256_loadu_pd(dst), prod));
      }
      for (; j < n; ++j) {
        const double br = b_row[j].real();
        const double bi = b_row[j].imag();
        c_row[j] = Complex(c_row[j].real() + (aik.real() * br - aik.imag() * bi),
                           c_row[j].imag() + (aik.real() * bi + aik.imag() * br));
      }
    }
  }
}

void gemv_avx2(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
               std::size_t cols) {
  const std::size_t paired = cols & ~std::size_t{1};
  for (std::size_t i = 0; i < rows; ++i) {
    const Complex* a_row = a + i * cols;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j < paired; j += 2) {
      acc = _mm256_add_pd(acc, cmul(_mm256_loadu_pd(as_doubles(a_row + j)),
                                    _mm256_loadu_pd(as_doubles(x + j))));
    }
    Complex sum = hsum_complex(acc);
    for (; j < cols; ++j) {
      sum = Complex(sum.real() + (a_row[j].real() * x[j].real() - a_row[j].imag() * x[j].imag()),
                    sum.imag() + (a_row[j].real() * x[j].imag() + a_row[j].imag() * x[j].real()));
    }
    y[i] = sum;
  }
}

Complex dotc_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const std::size_t paired = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < paired; i += 2) {
    acc = _mm256_add_pd(
        acc, cmul_conj(_mm256_loadu_pd(as_doubles(x + i)), _mm256_loadu_pd(as_doubles(y + i))));
  }
  Complex sum = hsum_complex(acc);
  for (; i < n; ++i) {
    sum = Complex(sum.real() + (x[i].real() * y[i].real() + x[i].imag() * y[i].imag()),
                  sum.imag() + (x[i].real() * y[i].imag() - x[i].imag() * y[i].real()));
  }
  return sum;
}

double sum_sq_diff_avx2(const Complex* x, const Complex* y, std::size_t n) {
  const std::size_t paired = n & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < paired; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(as_doubles(x + i)), _mm256_loadu_pd(as_doubles(y + i)));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  const Complex lanes = hsum_complex(acc);
  double sum = lanes.real() + lanes.imag();
  for (; i < n; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    sum += dr * dr + di * di;
  }
  return sum;
}

}  // namespace nmrsep::kernels::detail
