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

#include "nmrsep/circuit.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "nmrsep/errors.hpp"

namespace nmrsep {
namespace {

constexpr std::array<std::string_view, 12> kNames = {"H",  "X",  "Y",  "Z",    "S",  "T",
                                                     "RX", "RY", "RZ", "CNOT", "CZ", "SWAP"};

void check_gate(const Gate& g, std::size_t n_spins) {
  const std::size_t arity = gate_arity(g.kind);
  for (std::size_t i = 0; i < arity; ++i) {
    if (g.targets[i] < 1 || g.targets[i] > n_spins) {
      throw InvalidArgument(std::string(gate_name(g.kind)) + ": spin " +
                            std::to_string(g.targets[i]) + " outside 1.." +
                            std::to_string(n_spins));
    }
  }
  if (arity == 2 && g.targets[0] == g.targets[1]) {
    throw InvalidArgument(std::string(gate_name(g.kind)) + ": spins must be distinct");
  }
  if (is_rotation(g.kind) && !std::isfinite(g.angle)) {
    throw InvalidArgument(std::string(gate_name(g.kind)) + ": angle must be finite");
  }
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') {
      ++end;
    }
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::size_t parse_spin(std::string_view token, std::size_t line_no, std::size_t n_spins) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line_no, "malformed spin index '" + std::string(token) + "'");
  }
  if (value < 1 || value > n_spins) {
    throw ParseError(line_no, "spin " + std::string(token) + " outside 1.." +
                                  std::to_string(n_spins));
  }
  return value;
}

double parse_angle(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError(line_no, "malformed angle '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kCNOT:
    case GateKind::kCZ:
    case GateKind::kSWAP:
      return 2;
    default:
      return 1;
  }
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

Circuit::Circuit(std::size_t n_spins) : n_spins_(n_spins) {
  if (n_spins_ < 1 || n_spins_ > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins) + ", got " +
                          std::to_string(n_spins_));
  }
}

Circuit::Circuit(std::size_t n_spins, std::vector<Gate> gates) : Circuit(n_spins) {
  gates_.reserve(gates.size());
  for (const Gate& g : gates) append(g);
}

void Circuit::append(const Gate& gate) {
  check_gate(gate, n_spins_);
  Gate g = gate;
  if (gate_arity(g.kind) == 1) g.targets[1] = 0;
  if (!is_rotation(g.kind)) g.angle = 0.0;
  gates_.push_back(g);
}

Circuit Circuit::then(const Circuit& next) const {
  if (next.n_spins_ != n_spins_) throw InvalidArgument("Circuit::then: spin count mismatch");
  Circuit out = *this;
  out.gates_.insert(out.gates_.end(), next.gates_.begin(), next.gates_.end());
  return out;
}

Circuit parse_circuit(std::string_view text, std::size_t n_spins) {
  Circuit circuit(n_spins);
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::vector<std::string_view> tokens = tokenize(line);
    if (tokens.empty()) continue;

    const std::optional<GateKind> kind = gate_kind_from_name(tokens[0]);
    if (!kind) throw ParseError(line_no, "unknown gate '" + std::string(tokens[0]) + "'");

    const std::size_t arity = gate_arity(*kind);
    const std::size_t expected = 1 + arity + (is_rotation(*kind) ? 1 : 0);
    if (tokens.size() != expected) {
      throw ParseError(line_no, std::string(tokens[0]) + " expects " +
                                    std::to_string(expected - 1) + " arguments, got " +
                                    std::to_string(tokens.size() - 1));
    }
    Gate g{*kind};
    for (std::size_t i = 0; i < arity; ++i) g.targets[i] = parse_spin(tokens[1 + i], line_no, n_spins);
    if (arity == 2 && g.targets[0] == g.targets[1]) {
      throw ParseError(line_no, std::string(tokens[0]) + " needs two distinct spins");
    }
    if (is_rotation(*kind)) g.angle = parse_angle(tokens[2], line_no);
    circuit.append(g);
  }
  return circuit;
}

std::string format_circuit(const Circuit& circuit) {
  std::string out;
  for (const Gate& g : circuit.gates()) {
    out += gate_name(g.kind);
    for (std::size_t i = 0; i < gate_arity(g.kind); ++i) {
      out += ' ';
      out += std::to_string(g.targets[i]);
    }
    if (is_rotation(g.kind)) {
      char buf[32];
      const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), g.angle);
      out += ' ';
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix local_gate_matrix(const Gate& gate) {
  using std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  const double c = std::cos(gate.angle / 2.0);
  const double s = std::sin(gate.angle / 2.0);
  switch (gate.kind) {
    case GateKind::kH:
      return {{1.0 / sqrt2, 1.0 / sqrt2}, {1.0 / sqrt2, -1.0 / sqrt2}};
    case GateKind::kX:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::kY:
      return {{0.0, -i}, {i, 0.0}};
    case GateKind::kZ:
      return {{1.0, 0.0}, {0.0, -1.0}};
    case GateKind::kS:
      return {{1.0, 0.0}, {0.0, i}};
    case GateKind::kT:
      return {{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4.0)}};
    case GateKind::kRX:
      return {{c, -i * s}, {-i * s, c}};
    case GateKind::kRY:
      return {{c, -s}, {s, c}};
    case GateKind::kRZ:
      return {{std::polar(1.0, -gate.angle / 2.0), 0.0}, {0.0, std::polar(1.0, gate.angle / 2.0)}};
    case GateKind::kCNOT:
      return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
    case GateKind::kCZ:
      return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, -1.0}};
    case GateKind::kSWAP:
      return {{1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
  }
  throw InvalidArgument("unknown gate kind");
}

ComplexMatrix gate_unitary(const Gate& gate, std::size_t n_spins) {
  if (n_spins < 1 || n_spins > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins));
  }
  check_gate(gate, n_spins);
  const ComplexMatrix local = local_gate_matrix(gate);
  const std::size_t arity = gate_arity(gate.kind);
  std::array<std::size_t, 2> shifts{};
  std::size_t mask = 0;
  for (std::size_t t = 0; t < arity; ++t) {
    shifts[t] = n_spins - gate.targets[t];
    mask |= std::size_t{1} << shifts[t];
  }
  // Local index of a full basis index: first target is the high bit.
  auto local_index = [&](std::size_t full) {
    std::size_t idx = 0;
    for (std::size_t t = 0; t < arity; ++t) idx = (idx << 1) | ((full >> shifts[t]) & 1U);
    return idx;
  };
  auto with_local = [&](std::size_t full, std::size_t idx) {
    std::size_t out = full & ~mask;
    for (std::size_t t = 0; t < arity; ++t) {
      out |= ((idx >> (arity - 1 - t)) & 1U) << shifts[t];
    }
    return out;
  };

  const std::size_t dim = std::size_t{1} << n_spins;
  ComplexMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t in = local_index(col);
    for (std::size_t out = 0; out < local.dim(); ++out) {
      u(with_local(col, out), col) = local(out, in);
    }
  }
  return u;
}

ComplexMatrix compose_propagator(const Circuit& circuit) {
  const std::size_t n = circuit.n_spins();
  if (n < 1 || n > tol::kMaxSpins) {
    throw InvalidArgument("n_spins must be in 1.." + std::to_string(tol::kMaxSpins));
  }
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << n);
  for (const Gate& g : circuit.gates()) u = gate_unitary(g, n) * u;
  return ComplexMatrix::unitary(std::move(u), "composed propagator");
}

}  // namespace nmrsep
