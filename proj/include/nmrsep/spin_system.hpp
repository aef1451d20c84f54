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

// The N-spin molecule and the thermal ensemble of M copies.
//
// Units: k_B = hbar = 1, energies and temperature share one unit. The level
// eigenbasis is the computational basis (the Zeeman Hamiltonian is diagonal),
// with spin 1 as the most significant bit of a level index.

#ifndef NMRSEP_SPIN_SYSTEM_HPP
#define NMRSEP_SPIN_SYSTEM_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "nmrsep/qlinalg/complex_matrix.hpp"
#include "nmrsep/qlinalg/density_matrix.hpp"

namespace nmrsep {

enum class Axis { kX, kY, kZ };

/// Accepts "x", "y", "z". Throws InvalidArgument otherwise.
Axis parse_axis(std::string_view text);
char axis_char(Axis axis);

class SpinSystem {
 public:
  /// Throws InvalidArgument unless energies.size() == 2^n_spins and all are finite.
  SpinSystem(std::size_t n_spins, std::vector<double> level_energies);

  /// Zeeman levels from per-spin Larmor frequencies (see default_energies).
  static SpinSystem zeeman(std::span<const double> larmor);

  std::size_t n_spins() const noexcept { return n_spins_; }
  std::size_t dim() const noexcept { return energies_.size(); }
  std::span<const double> level_energies() const noexcept { return energies_; }

  /// Full spectral width max E_k - min E_k.
  double delta_e() const;

 private:
  std::size_t n_spins_;
  std::vector<double> energies_;
};

/// E_k = sum_j s_j(k) * omega_j / 2, s_j(k) = +1 when the bit of spin j is set in k,
/// else -1. Level |0...0> is the lowest for positive omega. Throws
/// InvalidArgument if larmor.size() != n_spins or a value is not finite.
std::vector<double> default_energies(std::size_t n_spins, std::span<const double> larmor);

/// C_k = M exp(-E_k/T) / Z, evaluated relative to the lowest level so that
/// large E/T does not overflow. Throws InvalidArgument if T <= 0 or M <= 0.
std::vector<double> boltzmann_populations(std::span<const double> energies, double temperature,
                                          double molecule_count);

class ThermalEnsemble {
 public:
  /// Explicit level counts. Throws InvalidArgument unless every C_k >= 0 and
  /// |sum C_k - M| <= tol::kPopulationSum * M.
  ThermalEnsemble(SpinSystem system, double temperature, double molecule_count,
                  std::vector<double> populations);

  static ThermalEnsemble boltzmann(SpinSystem system, double temperature, double molecule_count);

  const SpinSystem& system() const noexcept { return system_; }
  double temperature() const noexcept { return temperature_; }
  double molecule_count() const noexcept { return molecule_count_; }
  /// Level counts C_k; non-integer in general.
  std::span<const double> populations() const noexcept { return populations_; }
  /// P_k = C_k / M
  std::vector<double> probabilities() const;
  std::size_t dim() const noexcept { return system_.dim(); }

 private:
  SpinSystem system_;
  double temperature_;
  double molecule_count_;
  std::vector<double> populations_;
};

/// rho = sum_k (C_k / M) |k><k|
DensityMatrix equilibrium_density_matrix(const ThermalEnsemble& ensemble);

struct EpsilonReport {
  double delta_e;
  double epsilon;                // delta_e / T
  double max_population_spread;  // max P_k - min P_k
};

EpsilonReport epsilon_report(const ThermalEnsemble& ensemble);

/// I^axis_spin = sigma^axis / 2 on one spin (1-based), identity elsewhere.
ComplexMatrix spin_observable(std::size_t n_spins, std::size_t spin, Axis axis);

/// Total spin component sum_j I^axis_j.
ComplexMatrix collective_observable(std::size_t n_spins, Axis axis);

}  // namespace nmrsep

#endif  // NMRSEP_SPIN_SYSTEM_HPP
