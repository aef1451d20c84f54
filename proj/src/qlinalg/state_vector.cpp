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

#include "nmrsep/qlinalg/state_vector.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "nmrsep/errors.hpp"
#include "nmrsep/kernels/kernels.hpp"

namespace nmrsep {

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || amplitudes_.size() > tol::kMaxDim) {
    throw InvalidArgument("state dimension " + std::to_string(amplitudes_.size()) +
                          " outside 1.." + std::to_string(tol::kMaxDim));
  }
  const double n2 = norm_squared();
  if (!(std::abs(n2 - 1.0) <= tol::kValidation)) {
    std::ostringstream os;
    os << "state vector is not normalized: sum |a_k|^2 = " << n2;
    throw ValidationError(os.str());
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) {
    throw InvalidArgument("basis index " + std::to_string(k) + " out of range for dim " +
                          std::to_string(dim));
  }
  std::vector<Complex> a(dim, Complex(0.0, 0.0));
  a[k] = 1.0;
  return StateVector(std::move(a));
}

double StateVector::norm_squared() const {
  return kernels::dotc(amplitudes_, amplitudes_).real();
}

ComplexMatrix StateVector::projector() const {
  const std::size_t n = dim();
  ComplexMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  }
  return p;
}

StateVector apply(const ComplexMatrix& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) throw InvalidArgument("apply: dimension mismatch");
  std::vector<Complex> out(psi.dim());
  kernels::gemv(u.data(), psi.amplitudes(), out);
  return StateVector(std::move(out));
}

Complex expectation(const ComplexMatrix& a, const StateVector& psi) {
  if (a.dim() != psi.dim()) throw InvalidArgument("expectation: dimension mismatch");
  std::vector<Complex> a_psi(psi.dim());
  kernels::gemv(a.data(), psi.amplitudes(), a_psi);
  return kernels::dotc(psi.amplitudes(), a_psi);
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (const Complex& x : a.amplitudes()) {
    for (const Complex& y : b.amplitudes()) out.push_back(x * y);
  }
  return StateVector(std::move(out));
}

}  // namespace nmrsep
