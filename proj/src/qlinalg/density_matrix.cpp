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

#include "nmrsep/qlinalg/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "nmrsep/errors.hpp"
#include "nmrsep/kernels/kernels.hpp"
#include "nmrsep/qlinalg/spectral.hpp"

namespace nmrsep {

DensityMatrix::DensityMatrix(ComplexMatrix rho)
    : rho_(ComplexMatrix::hermitian(std::move(rho), "density matrix")) {
  const Complex tr = rho_.trace();
  if (!(std::abs(tr - 1.0) <= tol::kValidation)) {
    std::ostringstream os;
    os << "density matrix trace is " << tr.real() << ", expected 1";
    throw ValidationError(os.str());
  }
  const double lambda_min = hermitian_eigenvalues(rho_).front();
  if (!(lambda_min >= -tol::kValidation)) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite: lambda_min = " << lambda_min;
    throw ValidationError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) { return DensityMatrix(psi.projector()); }

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return kernels::dotc(rho_.data(), rho_.data()).real();
}

DensityMatrix DensityMatrix::conjugated_by(const ComplexMatrix& u) const {
  return DensityMatrix(u * rho_ * u.adjoint());
}

}  // namespace nmrsep
