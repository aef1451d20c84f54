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

// Reference kernels. Complex products are written out in real arithmetic so
// the results do not depend on the library's Annex G handling of inf/nan.

#include "nmrsep/kernels/kernels.hpp"

namespace nmrsep::kernels::detail {

void gemm_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Complex* c_row = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = a[i * n + k].real();
      const double ai = a[i * n + k].imag();
      const Complex* b_row = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = b_row[j].real();
        const double bi = b_row[j].imag();
        c_row[j] = Complex(c_row[j].real() + (ar * br - ai * bi),
                           c_row[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

void gemv_scalar(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
                 std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    double re = 0.0;
    double im = 0.0;
    const Complex* a_row = a + i * cols;
    for (std::size_t j = 0; j < cols; ++j) {
      const double ar = a_row[j].real();
      const double ai = a_row[j].imag();
      re += ar * x[j].real() - ai * x[j].imag();
      im += ar * x[j].imag() + ai * x[j].real();
    }
    y[i] = Complex(re, im);
  }
}

Complex dotc_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double sum_sq_diff_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = x[i].real() - y[i].real();
    const double di = x[i].imag() - y[i].imag();
    acc += dr * dr + di * di;
  }
  return acc;
}

}  // namespace nmrsep::kernels::detail
