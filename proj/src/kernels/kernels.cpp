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

#include "nmrsep/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "nmrsep/errors.hpp"

namespace nmrsep::kernels {
namespace {

constexpr KernelTable kScalar{Isa::kScalar, &detail::gemm_scalar, &detail::gemv_scalar,
                              &detail::dotc_scalar, &detail::sum_sq_diff_scalar};

#if defined(NMRSEP_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::kAvx2, &detail::gemm_avx2, &detail::gemv_avx2,
                            &detail::dotc_avx2, &detail::sum_sq_diff_avx2};
#endif

bool cpu_supports_avx2() {
#if defined(NMRSEP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const char* forced = std::getenv("NMRSEP_ISA");
  if (forced != nullptr && std::string(forced) == "scalar") return &kScalar;
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(NMRSEP_HAVE_AVX2)
  static const bool supported = cpu_supports_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

Isa set_active_isa(Isa isa) {
  const KernelTable* next = nullptr;
  if (isa == Isa::kScalar) {
    next = &kScalar;
  } else {
    next = avx2_table();
  }
  if (next == nullptr) {
    throw InvalidArgument("kernel ISA '" + std::string(isa_name(isa)) + "' is not available");
  }
  return active_slot().exchange(next, std::memory_order_acq_rel)->isa;
}

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t n) {
  if (a.size() != n * n || b.size() != n * n || c.size() != n * n) {
    throw InvalidArgument("gemm: buffer sizes do not match n*n");
  }
  active().gemm(a.data(), b.data(), c.data(), n);
}

void gemv(std::span<const Complex> a, std::span<const Complex> x, std::span<Complex> y) {
  if (a.size() != y.size() * x.size()) {
    throw InvalidArgument("gemv: matrix size does not match rows*cols");
  }
  active().gemv(a.data(), x.data(), y.data(), y.size(), x.size());
}

Complex dotc(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw InvalidArgument("dotc: length mismatch");
  return active().dotc(x.data(), y.data(), x.size());
}

double sum_sq_diff(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw InvalidArgument("sum_sq_diff: length mismatch");
  return active().sum_sq_diff(x.data(), y.data(), x.size());
}

}  // namespace nmrsep::kernels
