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

#include "nmrsep/spin_system.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "nmrsep/errors.hpp"

namespace nmrsep {

Axis parse_axis(std::string_view text) {
  if (text == "x") return Axis::kX;
  if (text == "y") return Axis::kY;
  if (text == "z") return Axis::kZ;
  throw InvalidArgument("invalid axis '" + std::string(text) + "', expected x, y or z");
}

char axis_char(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return 'x';
    case Axis::kY:
      return 'y';
    case Axis::kZ:
      return 'z';
  }
  return '?';
}

SpinSystem::SpinSystem(std::size_t n_spins, std::vector<double> level_energies)
    : n_spins_(n_spins), energies_(std::move(level_energies)) {
  if (n_spins_ < 1 || n_spins_ > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins) + ", got " +
                          std::to_string(n_spins_));
  }
  if (energies_.size() != (std::size_t{1} << n_spins_)) {
    throw InvalidArgument("expected " + std::to_string(std::size_t{1} << n_spins_) +
                          " level energies, got " + std::to_string(energies_.size()));
  }
  for (double e : energies_) {
    if (!std::isfinite(e)) throw InvalidArgument("level energies must be finite");
  }
}

SpinSystem SpinSystem::zeeman(std::span<const double> larmor) {
  return SpinSystem(larmor.size(), default_energies(larmor.size(), larmor));
}

double SpinSystem::delta_e() const {
  const auto [lo, hi] = std::minmax_element(energies_.begin(), energies_.end());
  return *hi - *lo;
}

std::vector<double> default_energies(std::size_t n_spins, std::span<const double> larmor) {
  if (n_spins < 1 || n_spins > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins));
  }
  if (larmor.size() != n_spins) {
    throw InvalidArgument("expected " + std::to_string(n_spins) + " Larmor frequencies, got " +
                          std::to_string(larmor.size()));
  }
  for (double w : larmor) {
    if (!std::isfinite(w)) throw InvalidArgument("Larmor frequencies must be finite");
  }
  const std::size_t dim = std::size_t{1} << n_spins;
  std::vector<double> energies(dim, 0.0);
  for (std::size_t k = 0; k < dim; ++k) {
    double e = 0.0;
    for (std::size_t j = 0; j < n_spins; ++j) {
      const bool set = (k >> (n_spins - 1 - j)) & 1U;
      e += (set ? 0.5 : -0.5) * larmor[j];
    }
    energies[k] = e;
  }
  return energies;
}

std::vector<double> boltzmann_populations(std::span<const double> energies, double temperature,
                                          double molecule_count) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw InvalidArgument("temperature must be positive and finite");
  }
  if (!(molecule_count > 0.0) || !std::isfinite(molecule_count)) {
    throw InvalidArgument("molecule_count must be positive and finite");
  }
  if (energies.empty()) throw InvalidArgument("no energy levels");
  const double e_min = *std::min_element(energies.begin(), energies.end());
  std::vector<double> weights(energies.size());
  for (std::size_t k = 0; k < energies.size(); ++k) {
    weights[k] = std::exp(-(energies[k] - e_min) / temperature);
  }
  const double z = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w = molecule_count * (w / z);
  return weights;
}

ThermalEnsemble::ThermalEnsemble(SpinSystem system, double temperature, double molecule_count,
                                 std::vector<double> populations)
    : system_(std::move(system)),
      temperature_(temperature),
      molecule_count_(molecule_count),
      populations_(std::move(populations)) {
  if (!(temperature_ > 0.0) || !std::isfinite(temperature_)) {
    throw InvalidArgument("temperature must be positive and finite");
  }
  if (!(molecule_count_ > 0.0) || !std::isfinite(molecule_count_)) {
    throw InvalidArgument("molecule_count must be positive and finite");
  }
  if (populations_.size() != system_.dim()) {
    throw InvalidArgument("expected " + std::to_string(system_.dim()) + " populations, got " +
                          std::to_string(populations_.size()));
  }
  double sum = 0.0;
  for (double c : populations_) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw InvalidArgument("populations must be finite and nonnegative");
    }
    sum += c;
  }
  if (!(std::abs(sum - molecule_count_) <= tol::kPopulationSum * molecule_count_)) {
    std::ostringstream os;
    os << "populations sum to " << sum << ", expected molecule_count " << molecule_count_;
    throw InvalidArgument(os.str());
  }
}

ThermalEnsemble ThermalEnsemble::boltzmann(SpinSystem system, double temperature,
                                           double molecule_count) {
  std::vector<double> c =
      boltzmann_populations(system.level_energies(), temperature, molecule_count);
  return ThermalEnsemble(std::move(system), temperature, molecule_count, std::move(c));
}

std::vector<double> ThermalEnsemble::probabilities() const {
  std::vector<double> p(populations_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = populations_[k] / molecule_count_;
  return p;
}

DensityMatrix equilibrium_density_matrix(const ThermalEnsemble& ensemble) {
  const std::vector<double> p = ensemble.probabilities();
  return DensityMatrix(ComplexMatrix::diagonal(p));
}

EpsilonReport epsilon_report(const ThermalEnsemble& ensemble) {
  const double delta_e = ensemble.system().delta_e();
  const std::vector<double> p = ensemble.probabilities();
  const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return {delta_e, delta_e / ensemble.temperature(), *hi - *lo};
}

ComplexMatrix spin_observable(std::size_t n_spins, std::size_t spin, Axis axis) {
  if (n_spins < 1 || n_spins > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins));
  }
  if (spin < 1 || spin > n_spins) {
    throw InvalidArgument("spin " + std::to_string(spin) + " outside 1.." +
                          std::to_string(n_spins));
  }
  // sigma/2 in the single-spin basis {|0>, |1>}
  Complex s[2][2];
  switch (axis) {
    case Axis::kX:
      s[0][0] = 0.0, s[0][1] = 0.5, s[1][0] = 0.5, s[1][1] = 0.0;
      break;
    case Axis::kY:
      s[0][0] = 0.0, s[0][1] = Complex(0.0, -0.5), s[1][0] = Complex(0.0, 0.5), s[1][1] = 0.0;
      break;
    case Axis::kZ:
      s[0][0] = 0.5, s[0][1] = 0.0, s[1][0] = 0.0, s[1][1] = -0.5;
      break;
  }
  const std::size_t dim = std::size_t{1} << n_spins;
  const std::size_t shift = n_spins - spin;
  const std::size_t mask = std::size_t{1} << shift;
  ComplexMatrix op(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t b_in = (col >> shift) & 1U;
    for (std::size_t b_out = 0; b_out < 2; ++b_out) {
      const std::size_t row = (col & ~mask) | (b_out << shift);
      op(row, col) = s[b_out][b_in];
    }
  }
  return op;
}

ComplexMatrix collective_observable(std::size_t n_spins, Axis axis) {
  ComplexMatrix total = spin_observable(n_spins, 1, axis);
  for (std::size_t j = 2; j <= n_spins; ++j) total += spin_observable(n_spins, j, axis);
  return total;
}

}  // namespace nmrsep
