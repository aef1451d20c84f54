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

#include "nmrsep/qlinalg/ops.hpp"

#include <cmath>
#include <string>

#include "nmrsep/errors.hpp"
#include "nmrsep/kernels/kernels.hpp"

namespace nmrsep {
namespace {

void require_matching(const ComplexMatrix& rho, const Bipartition& part, const char* op) {
  if (rho.dim() != part.full_dim()) {
    throw InvalidArgument(std::string(op) + ": matrix dim " + std::to_string(rho.dim()) +
                          " does not match bipartition " + part.to_string() + " (dim " +
                          std::to_string(part.full_dim()) + ")");
  }
}

}  // namespace

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da * db > tol::kMaxDim) throw InvalidArgument("tensor_product: result exceeds size cap");
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const Bipartition& part, Side keep) {
  require_matching(rho, part, "partial_trace");
  const bool keep_left = keep == Side::kLeft;
  const std::size_t kept_dim = part.dim(keep);
  const std::size_t traced_dim = part.dim(keep_left ? Side::kRight : Side::kLeft);
  auto full = [&](std::size_t kept, std::size_t traced) {
    return keep_left ? part.compose(kept, traced) : part.compose(traced, kept);
  };
  ComplexMatrix out(kept_dim);
  for (std::size_t a = 0; a < kept_dim; ++a) {
    for (std::size_t b = 0; b < kept_dim; ++b) {
      Complex sum(0.0, 0.0);
      for (std::size_t t = 0; t < traced_dim; ++t) sum += rho(full(a, t), full(b, t));
      out(a, b) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const Bipartition& part) {
  require_matching(rho, part, "partial_transpose");
  const std::size_t dl = part.dim(Side::kLeft);
  const std::size_t dr = part.dim(Side::kRight);
  ComplexMatrix out(rho.dim());
  for (std::size_t l1 = 0; l1 < dl; ++l1) {
    for (std::size_t r1 = 0; r1 < dr; ++r1) {
      for (std::size_t l2 = 0; l2 < dl; ++l2) {
        for (std::size_t r2 = 0; r2 < dr; ++r2) {
          out(part.compose(l1, r1), part.compose(l2, r2)) =
              rho(part.compose(l1, r2), part.compose(l2, r1));
        }
      }
    }
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("frobenius_distance: dimension mismatch " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
  }
  return std::sqrt(kernels::sum_sq_diff(a.data(), b.data()));
}

}  // namespace nmrsep
