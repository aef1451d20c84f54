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

#ifndef NMRSEP_QLINALG_STATE_VECTOR_HPP
#define NMRSEP_QLINALG_STATE_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nmrsep/qlinalg/complex_matrix.hpp"

namespace nmrsep {

/// Normalized pure state: |sum_k |a_k|^2 - 1| <= tol::kValidation.
class StateVector {
 public:
  /// Throws ValidationError if the amplitudes are not normalized.
  explicit StateVector(std::vector<Complex> amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes)
      : StateVector(std::vector<Complex>(amplitudes)) {}

  /// Computational basis state |k> in dimension `dim`.
  static StateVector basis(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm_squared() const;

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::vector<Complex> amplitudes_;
};

/// U|psi>. The result is re-validated, so a non-unitary U throws ValidationError.
StateVector apply(const ComplexMatrix& u, const StateVector& psi);

/// <psi|A|psi>
Complex expectation(const ComplexMatrix& a, const StateVector& psi);

/// |a> (x) |b>, first factor most significant.
StateVector tensor_product(const StateVector& a, const StateVector& b);

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_STATE_VECTOR_HPP
