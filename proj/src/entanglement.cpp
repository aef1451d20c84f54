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

#include "nmrsep/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "nmrsep/errors.hpp"
#include "nmrsep/qlinalg/ops.hpp"
#include "nmrsep/qlinalg/spectral.hpp"

namespace nmrsep {
namespace {

double entropy_of(const std::vector<double>& coefficients) {
  // Rank one is exactly zero; -p log p of p = 1 - 1e-16 would otherwise leak through.
  if (coefficients.size() <= 1) return 0.0;
  double s = 0.0;
  for (double c : coefficients) {
    const double p = c * c;
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

}  // namespace

std::vector<double> schmidt_coefficients(const StateVector& psi, const Bipartition& part) {
  if (psi.dim() != part.full_dim()) {
    throw InvalidArgument("state dim " + std::to_string(psi.dim()) +
                          " does not match bipartition " + part.to_string());
  }
  const std::size_t rows = part.dim(Side::kLeft);
  const std::size_t cols = part.dim(Side::kRight);
  std::vector<Complex> amp(rows * cols);
  for (std::size_t l = 0; l < rows; ++l) {
    for (std::size_t r = 0; r < cols; ++r) amp[l * cols + r] = psi[part.compose(l, r)];
  }
  std::vector<double> sv = singular_values(amp, rows, cols);
  std::erase_if(sv, [](double s) { return s <= tol::kSchmidtCutoff; });
  return sv;
}

double entanglement_entropy(const StateVector& psi, const Bipartition& part) {
  return entropy_of(schmidt_coefficients(psi, part));
}

EntanglementReport entanglement_report(const StateVector& psi, const Bipartition& part) {
  std::vector<double> coefficients = schmidt_coefficients(psi, part);
  const double entropy = entropy_of(coefficients);
  const std::size_t rank = coefficients.size();
  return {part, std::move(coefficients), entropy, rank, rank == 1};
}

bool is_fully_product(const StateVector& psi) {
  if (!std::has_single_bit(psi.dim())) {
    throw InvalidArgument("state dim " + std::to_string(psi.dim()) + " is not a power of two");
  }
  const auto n_spins = static_cast<std::size_t>(std::countr_zero(psi.dim()));
  for (const Bipartition& cut : Bipartition::all_cuts(n_spins)) {
    if (schmidt_coefficients(psi, cut).size() != 1) return false;
  }
  return true;
}

std::string_view ppt_strength_name(PptStrength strength) {
  switch (strength) {
    case PptStrength::kNecessaryAndSufficient:
      return "necessary_and_sufficient";
    case PptStrength::kNecessaryOnly:
      return "necessary_only";
  }
  return "unknown";
}

PptReport ppt_report(const DensityMatrix& rho, const Bipartition& part) {
  const std::vector<double> eig = hermitian_eigenvalues(partial_transpose(rho.matrix(), part));
  double negativity = 0.0;
  for (double l : eig) {
    if (l < 0.0) negativity -= l;
  }
  const double lambda_min = eig.front();
  // 2x2 and 2x3 are the only exact cases; with qubits that is N = 2.
  const bool exact = part.dim(Side::kLeft) * part.dim(Side::kRight) <= 6;
  return {lambda_min, negativity, lambda_min >= -tol::kValidation,
          exact ? PptStrength::kNecessaryAndSufficient : PptStrength::kNecessaryOnly};
}

MixednessReport mixedness_report(const DensityMatrix& rho, std::optional<double> ball_radius) {
  if (ball_radius && !(*ball_radius > 0.0)) {
    throw InvalidArgument("ball radius must be positive");
  }
  MixednessReport r;
  r.frobenius_to_mixed =
      frobenius_distance(rho.matrix(), DensityMatrix::maximally_mixed(rho.dim()).matrix());
  r.purity = rho.purity();
  if (ball_radius) {
    r.ball_radius_used = *ball_radius;
    r.within_ball = r.frobenius_to_mixed <= *ball_radius;
  }
  return r;
}

SeparabilityReport separability_report(const DensityMatrix& rho,
                                       const std::optional<Bipartition>& part,
                                       std::optional<double> ball_radius) {
  SeparabilityReport r{part, std::nullopt, mixedness_report(rho, ball_radius)};
  if (part) r.ppt = ppt_report(rho, *part);
  return r;
}

}  // namespace nmrsep
