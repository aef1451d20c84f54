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

#include "nmrsep/ensemble_engine.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "nmrsep/errors.hpp"

namespace nmrsep {
namespace {

void require_dims(const ComplexMatrix& u, const ComplexMatrix& obs, std::size_t dim) {
  if (u.dim() != dim || obs.dim() != dim) {
    throw InvalidArgument("propagator, observable and ensemble dimensions differ: " +
                          std::to_string(u.dim()) + ", " + std::to_string(obs.dim()) + ", " +
                          std::to_string(dim));
  }
}

void require_hermitian(const ComplexMatrix& obs) {
  static_cast<void>(ComplexMatrix::hermitian(obs, "observable"));
}

double real_part_checked(Complex value, const char* what) {
  if (!(std::abs(value.imag()) <= tol::kValidation)) {
    std::ostringstream os;
    os << what << " has imaginary residual " << value.imag();
    throw ValidationError(os.str());
  }
  return value.real();
}

}  // namespace

StateVector evolve_eigenstate(const ComplexMatrix& u, std::size_t k) {
  const std::size_t dim = u.dim();
  if (k >= dim) {
    throw InvalidArgument("level index " + std::to_string(k) + " out of range for dim " +
                          std::to_string(dim));
  }
  std::vector<Complex> column(dim);
  for (std::size_t i = 0; i < dim; ++i) column[i] = u(i, k);
  return StateVector(std::move(column));
}

double expectation_per_initial_state(const ComplexMatrix& u, std::size_t k,
                                     const ComplexMatrix& obs) {
  require_hermitian(obs);
  if (obs.dim() != u.dim()) throw InvalidArgument("observable and propagator dimensions differ");
  return real_part_checked(expectation(obs, evolve_eigenstate(u, k)), "<k|U^dagger O U|k>");
}

std::vector<double> per_state_values(const ComplexMatrix& u, const ComplexMatrix& obs) {
  require_hermitian(obs);
  if (obs.dim() != u.dim()) throw InvalidArgument("observable and propagator dimensions differ");
  std::vector<double> values(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    values[k] = real_part_checked(expectation(obs, evolve_eigenstate(u, k)), "<k|U^dagger O U|k>");
  }
  return values;
}

double ensemble_expectation_sum(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                                const ComplexMatrix& obs) {
  require_dims(u, obs, ensemble.dim());
  const std::vector<double> values = per_state_values(u, obs);
  const auto counts = ensemble.populations();
  double total = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) total += counts[k] * values[k];
  return total;
}

double ensemble_expectation_trace(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                                  const ComplexMatrix& obs) {
  require_dims(u, obs, ensemble.dim());
  require_hermitian(obs);
  const DensityMatrix rho = equilibrium_density_matrix(ensemble);
  const ComplexMatrix evolved = u * rho.matrix() * u.adjoint();
  const Complex tr = trace_of_product(evolved, obs);
  return ensemble.molecule_count() * real_part_checked(tr, "Tr(U rho U^dagger O)");
}

PathwayResult compare_pathways(const ComplexMatrix& u, const ThermalEnsemble& ensemble,
                               const ComplexMatrix& obs) {
  require_dims(u, obs, ensemble.dim());
  PathwayResult r;
  r.per_state_values = per_state_values(u, obs);
  const auto counts = ensemble.populations();
  double total = 0.0;
  for (std::size_t k = 0; k < r.per_state_values.size(); ++k) {
    total += counts[k] * r.per_state_values[k];
  }
  r.expectation_sum = total;
  r.expectation_trace = ensemble_expectation_trace(u, ensemble, obs);
  r.abs_difference = std::abs(r.expectation_sum - r.expectation_trace);
  return r;
}

PathwayResult compare_pathways(const Circuit& circuit, const ThermalEnsemble& ensemble,
                               const ComplexMatrix& obs) {
  if (circuit.n_spins() != ensemble.system().n_spins()) {
    throw InvalidArgument("circuit has " + std::to_string(circuit.n_spins()) +
                          " spins, ensemble has " + std::to_string(ensemble.system().n_spins()));
  }
  return compare_pathways(compose_propagator(circuit), ensemble, obs);
}

}  // namespace nmrsep
