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

#ifndef NMRSEP_QLINALG_SPECTRAL_HPP
#define NMRSEP_QLINALG_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nmrsep/qlinalg/complex_matrix.hpp"

namespace nmrsep {

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic complex Jacobi with a fixed (p, q) sweep order, so the output is a
/// deterministic function of the input. Throws ValidationError when
/// ||A - A^dagger||_max > tol::kEquality.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Singular values of a rows x cols row-major complex matrix, descending,
/// min(rows, cols) of them. One-sided Jacobi, which keeps small singular
/// values accurate relative to their own size.
std::vector<double> singular_values(std::span<const Complex> entries, std::size_t rows,
                                    std::size_t cols);

}  // namespace nmrsep

#endif  // NMRSEP_QLINALG_SPECTRAL_HPP
