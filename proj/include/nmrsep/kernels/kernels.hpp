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

// Complex double-precision inner loops used by the dense linear algebra.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2+FMA variant. The variant is chosen once at startup from CPUID; the
// environment variable NMRSEP_ISA=scalar forces the reference path. All
// buffers are row-major arrays of std::complex<double> (interleaved re/im).

#ifndef NMRSEP_KERNELS_KERNELS_HPP
#define NMRSEP_KERNELS_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace nmrsep::kernels {

using Complex = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  // c = a * b for square n x n matrices. c must not alias a or b.
  void (*gemm)(const Complex* a, const Complex* b, Complex* c, std::size_t n);
  // y = a * x, a is rows x cols.
  void (*gemv)(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
               std::size_t cols);
  // sum_i conj(x_i) * y_i
  Complex (*dotc)(const Complex* x, const Complex* y, std::size_t n);
  // sum_i |x_i - y_i|^2
  double (*sum_sq_diff)(const Complex* x, const Complex* y, std::size_t n);
};

const KernelTable& scalar_table();

/// nullptr when the AVX2 variant was not compiled or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

/// The table all library code dispatches through.
const KernelTable& active();

/// Overrides the active table; returns the previous ISA. Throws
/// InvalidArgument if the ISA is unavailable. Intended for tests and
/// benchmarks; not synchronized with concurrent kernel calls.
Isa set_active_isa(Isa isa);

class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(set_active_isa(isa)) {}
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

// Span front-ends with size checks.

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t n);
void gemv(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y);
Complex dotc(std::span<const Complex> x, std::span<const Complex> y);
double sum_sq_diff(std::span<const Complex> x, std::span<const Complex> y);

namespace detail {

void gemm_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void gemv_scalar(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
                 std::size_t cols);
Complex dotc_scalar(const Complex* x, const Complex* y, std::size_t n);
double sum_sq_diff_scalar(const Complex* x, const Complex* y, std::size_t n);

#if defined(NMRSEP_HAVE_AVX2)
void gemm_avx2(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void gemv_avx2(const Complex* a, const Complex* x, Complex* y, std::size_t rows,
               std::size_t cols);
Complex dotc_avx2(const Complex* x, const Complex* y, std::size_t n);
double sum_sq_diff_avx2(const Complex* x, const Complex* y, std::size_t n);
#endif

}  // namespace detail

}  // namespace nmrsep::kernels

#endif  // NMRSEP_KERNELS_KERNELS_HPP
