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

// Entanglement of single-molecule pure states and separability indicators of
// ensemble density matrices.
//
// A pure state is a product across a cut iff it has one Schmidt coefficient.
// Entropy (bits) and negativity are the quantitative measures reported on top
// of that yes/no criterion. For mixed states the partial-transpose test is
// used; it decides separability exactly for two qubits and is only a
// necessary condition for larger registers.

#ifndef NMRSEP_ENTANGLEMENT_HPP
#define NMRSEP_ENTANGLEMENT_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "nmrsep/qlinalg/bipartition.hpp"
#include "nmrsep/qlinalg/density_matrix.hpp"
#include "nmrsep/qlinalg/state_vector.hpp"

namespace nmrsep {

struct EntanglementReport {
  Bipartition bipartition;
  std::vector<double> schmidt_coefficients;  // descending, each > tol::kSchmidtCutoff
  double entropy_bits;
  std::size_t schmidt_rank;
  bool is_product;
};

/// Singular values of the amplitude matrix psi[left_index][right_index] that
/// exceed tol::kSchmidtCutoff, descending. Throws InvalidArgument if the
/// bipartition does not match psi.dim().
std::vector<double> schmidt_coefficients(const StateVector& psi, const Bipartition& part);

/// -sum lambda^2 log2 lambda^2 over the Schmidt coefficients.
double entanglement_entropy(const StateVector& psi, const Bipartition& part);

EntanglementReport entanglement_report(const StateVector& psi, const Bipartition& part);

/// True iff psi is a product across every cut of its spins. A single spin is
/// trivially a product.
bool is_fully_product(const StateVector& psi);

enum class PptStrength { kNecessaryAndSufficient, kNecessaryOnly };

std::string_view ppt_strength_name(PptStrength strength);

struct PptReport {
  double min_pt_eigenvalue;
  double negativity;  // sum of |negative eigenvalues| of rho^{T_B} = (||rho^{T_B}||_1 - 1)/2
  bool ppt_holds;     // min_pt_eigenvalue >= -tol::kValidation
  PptStrength criterion;
};

struct MixednessReport {
  double frobenius_to_mixed;  // ||rho - I/K||_F
  double purity;              // Tr rho^2
  std::optional<double> ball_radius_used;
  std::optional<bool> within_ball;  // frobenius_to_mixed <= radius
};

struct SeparabilityReport {
  std::optional<Bipartition> bipartition;
  std::optional<PptReport> ppt;  // absent for a single spin
  MixednessReport mixedness;
};

PptReport ppt_report(const DensityMatrix& rho, const Bipartition& part);

/// No radius is assumed; within_ball is set only when `ball_radius` is given.
/// Throws InvalidArgument if the radius is not positive.
MixednessReport mixedness_report(const DensityMatrix& rho, std::optional<double> ball_radius);

SeparabilityReport separability_report(const DensityMatrix& rho,
                                       const std::optional<Bipartition>& part,
                                       std::optional<double> ball_radius);

}  // namespace nmrsep

#endif  // NMRSEP_ENTANGLEMENT_HPP
