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

// Gate sequences and their propagators.
//
// Circuit text format, one gate per line:
//
//   # comment to end of line
//   H 1
//   CNOT 1 2        # control, target
//   RZ 2 1.5707963267948966
//
// Gate names are case-sensitive: H X Y Z S T take one spin; RX RY RZ take one
// spin and an angle in radians; CNOT CZ SWAP take two distinct spins. Spins
// are 1-based, spin 1 being the most significant bit of a basis index.
//
// Order: gates are applied in the order they are written. The propagator of
// "G1; G2; ...; GL" is the matrix product U_L ... U_2 U_1.

#ifndef NMRSEP_CIRCUIT_HPP
#define NMRSEP_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmrsep/qlinalg/complex_matrix.hpp"

namespace nmrsep {

enum class GateKind { kH, kX, kY, kZ, kS, kT, kRX, kRY, kRZ, kCNOT, kCZ, kSWAP };

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::kH,  GateKind::kX,  GateKind::kY,  GateKind::kZ,    GateKind::kS,  GateKind::kT,
    GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kCNOT, GateKind::kCZ, GateKind::kSWAP};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool is_rotation(GateKind kind);

struct Gate {
  GateKind kind;
  /// 1-based spin indices; targets[1] is used only by two-spin gates.
  std::array<std::size_t, 2> targets{};
  /// Radians; used only by rotations.
  double angle = 0.0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  /// Throws InvalidArgument unless 1 <= n_spins <= tol::kMaxSpins.
  explicit Circuit(std::size_t n_spins);
  /// Throws InvalidArgument if any gate violates its arity or range invariants.
  Circuit(std::size_t n_spins, std::vector<Gate> gates);

  std::size_t n_spins() const noexcept { return n_spins_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  bool empty() const noexcept { return gates_.empty(); }

  /// Throws InvalidArgument on invariant violations.
  void append(const Gate& gate);
  /// This circuit followed by `next`.
  Circuit then(const Circuit& next) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_spins_;
  std::vector<Gate> gates_;
};

/// Throws ParseError (with the 1-based line number) on unknown gate names,
/// wrong token counts, out-of-range or repeated spins, and malformed numbers.
Circuit parse_circuit(std::string_view text, std::size_t n_spins);

/// Canonical text, one gate per line. Angles use the shortest representation
/// that parses back to the same double, so parse(format(c)) == c.
std::string format_circuit(const Circuit& circuit);

/// The 2x2 or 4x4 gate matrix in the local basis of its targets (first
/// target most significant).
ComplexMatrix local_gate_matrix(const Gate& gate);

/// 2^N x 2^N unitary acting as the gate on its targets and identity elsewhere.
ComplexMatrix gate_unitary(const Gate& gate, std::size_t n_spins);

/// U_L ... U_2 U_1. Throws ValidationError if the product fails the
/// unitarity check.
ComplexMatrix compose_propagator(const Circuit& circuit);

}  // namespace nmrsep

#endif  // NMRSEP_CIRCUIT_HPP
