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

#ifndef NMRSEP_TOLERANCES_HPP
#define NMRSEP_TOLERANCES_HPP

#include <cstddef>

namespace nmrsep::tol {

// Normalization, unitarity, trace, PSD and imaginary-residual checks.
inline constexpr double kValidation = 1e-10;
// Hermiticity check and exact-equality assertions.
inline constexpr double kEquality = 1e-12;
// Eigenvalue sums and spectral residuals.
inline constexpr double kSpectral = 1e-9;
// Schmidt coefficients at or below this do not count towards the rank.
inline constexpr double kSchmidtCutoff = 1e-8;
// Relative tolerance on sum_k C_k = M.
inline constexpr double kPopulationSum = 1e-9;

// Dense storage only; K = 2^12 at most.
inline constexpr std::size_t kMaxSpins = 12;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxSpins;

}  // namespace nmrsep::tol

#endif  // NMRSEP_TOLERANCES_HPP
