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

// Ensemble readout computed two independent ways.
//
// Sum pathway: each molecule starts in one level eigenstate |k>, evolves as a
// pure state U|k>, and contributes <k|U^dagger O U|k>. The sample signal is
// sum_k C_k <k|U^dagger O U|k>. A per-molecule value depends only on the level
// index k, so the M-molecule product state is never built; there is no
// molecule index anywhere in this module.
//
// Trace pathway: M * Tr(U rho U^dagger O) with rho = sum_k (C_k/M) |k><k|.
//
// The two share nothing beyond U. Their agreement is the check.

#ifndef NMRSEP_ENSEMBLE_ENGINE_HPP
#define NMRSEP_ENSEMBLE_ENGINE_HPP

#include <cstddef>
#include <vector>

#include "nmrsep/circuit.hpp"
#include "nmrsep/qlinalg/complex_matrix.hpp"
#include "nmrsep/qlinalg/state_vector.hpp"
#include "nmrsep/spin_system.hpp"

namespace nmrsep {

struct PathwayResult {
  double expectation_sum;    // sum_k C_k per_state_values[k]
  double expectation_trace;  // M Tr(U rho U^dagger O)
  double abs_difference;
  std::vector<double> per_state_values;  // <k|U^dagger O U|k>
};

/// Column k of U. Throws InvalidArgument if k >= dim, ValidationError if the
/// column is not normalized.
StateVector evolve_eigenstate(const ComplexMatrix& u, std::size_t k);

/// <k|U^dagger O U|k>. Throws ValidationError if O is not Hermitian or the
/// imaginary residual exceeds tol::kValidation.
double expectation_per_initial_state(const ComplexMatrix& u, std::size_t k,
                                     const ComplexMatrix& obs);

/// Per-level values <k|U^dagger O U|k> for k = 0..K-1.
std::vector<double> per_state_values(const ComplexMatrix& u, const ComplexMatrix& obs);

double ensemble_expectation_sum(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                                const ComplexMatrix& obs);

double ensemble_expectation_trace(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                                  const ComplexMatrix& obs);

PathwayResult compare_pathways(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                               const ComplexMatrix& obs);
PathwayResult compare_pathways(const Circuit& circuit, const ThermalEnsemble& ensemble,
                               const ComplexMatrix& obs);

}  // namespace nmrsep

#endif  // NMRSEP_ENSEMBLE_ENGINE_HPP
