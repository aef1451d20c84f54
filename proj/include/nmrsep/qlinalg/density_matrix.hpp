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

#ifndef NMRSEP_QLINALG_DENSITY_MATRIX_HPP
#define NMRSEP_QLINALG_DENSITY_MATRIX_HPP

#include <cstddef>

#include "nmrsep/qlinalg/complex_matrix.hpp"
#include "nmrsep/qlinalg/state_vector.hpp"

namespace nmrsep {

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityMatrix {
 public:
  /// Validates Hermiticity (tol::kEquality), |Tr - 1| <= tol::kValidation and
  /// lambda_min >= -tol::kValidation. Throws ValidationError.
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return rho_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return rho_; }

  double purity() const;

  /// U rho U^dagger
  DensityMatrix conjugated_by(const ComplexMatrix& u) const;

 private:
  ComplexMatrix rho_;
};

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_DENSITY_MATRIX_HPP
