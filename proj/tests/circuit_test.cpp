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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nmrsep/errors.hpp"
#include "nmrsep/qlinalg/ops.hpp"
#include "nmrsep/report.hpp"
#include "test_util.hpp"

using namespace nmrsep;
using namespace nmrsep::testing;

namespace {

std::size_t parse_error_line(std::string_view text, std::size_t n) {
  try {
    parse_circuit(text, n);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

// ---- parse_circuit ----

TEST(ParseCircuit, BellCircuit) {
  const Circuit c = parse_circuit("H 1\nCNOT 1 2", 2);
  ASSERT_EQ(c.gates().size(), 2u);
  EXPECT_EQ(c.gates()[0], (Gate{GateKind::kH, {1, 0}, 0.0}));
  EXPECT_EQ(c.gates()[1], (Gate{GateKind::kCNOT, {1, 2}, 0.0}));
}

TEST(ParseCircuit, EmptyAndCommentOnly) {
  EXPECT_TRUE(parse_circuit("", 2).empty());
  EXPECT_TRUE(parse_circuit("# nothing\n\n   \n", 3).empty());
}

TEST(ParseCircuit, CommentsWhitespaceAndAngles) {
  const Circuit c = parse_circuit("  RX 2   1.5707963267948966  # quarter turn\r\n\tSWAP 1 2\nRZ 1 -2e-3\n", 2);
  ASSERT_EQ(c.gates().size(), 3u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::kRX);
  EXPECT_EQ(c.gates()[0].targets[0], 2u);
  EXPECT_EQ(c.gates()[0].angle, std::numbers::pi / 2);
  EXPECT_EQ(c.gates()[1].kind, GateKind::kSWAP);
  EXPECT_EQ(c.gates()[2].angle, -2e-3);
}

TEST(ParseCircuit, ErrorsCiteLineNumber) {
  EXPECT_EQ(parse_error_line("CNOT 1 3", 2), 1u);
  EXPECT_EQ(parse_error_line("H 1\n\nFOO 1", 2), 3u);
  EXPECT_EQ(parse_error_line("H 1\nh 1", 2), 2u);  // names are case-sensitive
  EXPECT_EQ(parse_error_line("H 1 2", 2), 1u);
  EXPECT_EQ(parse_error_line("CNOT 1", 2), 1u);
  EXPECT_EQ(parse_error_line("CNOT 1 1", 2), 1u);
  EXPECT_EQ(parse_error_line("# c\nRX 1", 2), 2u);
  EXPECT_EQ(parse_error_line("RX 1 abc", 2), 1u);
  EXPECT_EQ(parse_error_line("RX 1 0.5x", 2), 1u);
  EXPECT_EQ(parse_error_line("RY 1 nan", 2), 1u);
  EXPECT_EQ(parse_error_line("X 0", 2), 1u);
  EXPECT_EQ(parse_error_line("X -1", 2), 1u);
  EXPECT_EQ(parse_error_line("X 1.0", 2), 1u);
  EXPECT_EQ(parse_error_line("X\n", 2), 1u);
  try {
    parse_circuit("H 1\nCNOT 1 3", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseCircuit, FormatParseRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Circuit c = random_circuit(rng, n);
    const std::string text = format_circuit(c);
    const Circuit back = parse_circuit(text, n);
    EXPECT_EQ(back, c) << text;
    EXPECT_EQ(format_circuit(back), text);
  }
}

TEST(Circuit, GateValidation) {
  Circuit c(2);
  EXPECT_THROW(c.append(Gate{GateKind::kCNOT, {1, 1}}), InvalidArgument);
  EXPECT_THROW(c.append(Gate{GateKind::kH, {3, 0}}), InvalidArgument);
  EXPECT_THROW(c.append(Gate{GateKind::kRX, {1, 0}, INFINITY}), InvalidArgument);
  EXPECT_THROW(Circuit(0), InvalidArgument);
  EXPECT_THROW(Circuit(13), InvalidArgument);
  EXPECT_THROW(Circuit(1).append(Gate{GateKind::kSWAP, {1, 2}}), InvalidArgument);
  // Unused fields are normalized so equality is structural.
  c.append(Gate{GateKind::kH, {1, 2}, 0.7});
  EXPECT_EQ(c.gates().back(), (Gate{GateKind::kH, {1, 0}, 0.0}));
}

TEST(Circuit, GateNamesRoundTrip) {
  for (GateKind k : kAllGateKinds) EXPECT_EQ(gate_kind_from_name(gate_name(k)), k);
  EXPECT_FALSE(gate_kind_from_name("cnot").has_value());
}

// ---- gate_unitary ----

TEST(GateUnitary, Hadamard) {
  const ComplexMatrix h{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
  EXPECT_LE(gate_unitary(Gate{GateKind::kH, {1, 0}}, 1).max_abs_diff(h), 1e-16);
}

TEST(GateUnitary, XOnSecondSpin) {
  EXPECT_EQ(gate_unitary(Gate{GateKind::kX, {2, 0}}, 2)
                .max_abs_diff(tensor_product(ComplexMatrix::identity(2), pauli_x())),
            0.0);
}

TEST(GateUnitary, CnotTruthTable) {
  const ComplexMatrix u = gate_unitary(Gate{GateKind::kCNOT, {1, 2}}, 2);
  const std::size_t image[4] = {0, 1, 3, 2};  // |10> <-> |11>
  for (std::size_t in = 0; in < 4; ++in) {
    for (std::size_t out = 0; out < 4; ++out) {
      EXPECT_EQ(u(out, in), Complex(out == image[in] ? 1.0 : 0.0, 0.0)) << in << "->" << out;
    }
  }
  // Reversed control: |01> <-> |11>.
  const ComplexMatrix r = gate_unitary(Gate{GateKind::kCNOT, {2, 1}}, 2);
  EXPECT_EQ(r(3, 1), Complex(1.0, 0.0));
  EXPECT_EQ(r(1, 3), Complex(1.0, 0.0));
  EXPECT_EQ(r(2, 2), Complex(1.0, 0.0));
}

TEST(GateUnitary, NonAdjacentTwoSpinGates) {
  // CZ between spins 1 and 3 of 3 flips the sign of |1x1>.
  const ComplexMatrix cz = gate_unitary(Gate{GateKind::kCZ, {1, 3}}, 3);
  for (std::size_t k = 0; k < 8; ++k) {
    const double sign = ((k & 0b101) == 0b101) ? -1.0 : 1.0;
    EXPECT_EQ(cz(k, k), Complex(sign, 0.0));
  }
  // SWAP 1 3 exchanges the outer bits.
  const ComplexMatrix sw = gate_unitary(Gate{GateKind::kSWAP, {3, 1}}, 3);
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t image = (k & 0b010) | ((k & 1) << 2) | ((k >> 2) & 1);
    EXPECT_EQ(sw(image, k), Complex(1.0, 0.0));
  }
}

TEST(GateUnitary, RotationsMatchClosedForms) {
  const double theta = 0.83;
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex i(0.0, 1.0);
  const ComplexMatrix rx{{c, -i * s}, {-i * s, c}};
  const ComplexMatrix ry{{c, -s}, {s, c}};
  const ComplexMatrix rz{{std::exp(-i * theta / 2.0), 0.0}, {0.0, std::exp(i * theta / 2.0)}};
  EXPECT_LE(gate_unitary(Gate{GateKind::kRX, {1, 0}, theta}, 1).max_abs_diff(rx), 1e-15);
  EXPECT_LE(gate_unitary(Gate{GateKind::kRY, {1, 0}, theta}, 1).max_abs_diff(ry), 1e-15);
  EXPECT_LE(gate_unitary(Gate{GateKind::kRZ, {1, 0}, theta}, 1).max_abs_diff(rz), 1e-15);
  // RX(pi) = -i X
  EXPECT_LE(gate_unitary(Gate{GateKind::kRX, {1, 0}, std::numbers::pi}, 1)
                .max_abs_diff(pauli_x() * Complex(0.0, -1.0)),
            1e-15);
}

TEST(GateUnitary, PhaseGates) {
  const ComplexMatrix s = gate_unitary(Gate{GateKind::kS, {1, 0}}, 1);
  const ComplexMatrix t = gate_unitary(Gate{GateKind::kT, {1, 0}}, 1);
  EXPECT_LE((t * t).max_abs_diff(s), 1e-15);
  EXPECT_LE((s * s).max_abs_diff(pauli_z()), 1e-15);
  EXPECT_LE(gate_unitary(Gate{GateKind::kY, {1, 0}}, 1).max_abs_diff(pauli_y()), 0.0);
}

TEST(GateUnitary, EveryKindIsUnitaryAtEveryPosition) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Circuit c = random_circuit(rng, n, 1);
    const ComplexMatrix u = gate_unitary(c.gates().front(), n);
    EXPECT_LE(u.unitarity_error(), tol::kValidation);
  }
}

// ---- compose_propagator ----

TEST(ComposePropagator, EmptyIsIdentity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(compose_propagator(Circuit(n)).max_abs_diff(ComplexMatrix::identity(std::size_t{1} << n)),
              0.0);
  }
}

TEST(ComposePropagator, HadamardIsInvolution) {
  EXPECT_LE(compose_propagator(parse_circuit("H 1\nH 1", 1)).max_abs_diff(ComplexMatrix::identity(2)),
            1e-12);
}

TEST(ComposePropagator, BellCircuitOnGroundState) {
  const ComplexMatrix u = compose_propagator(parse_circuit("H 1\nCNOT 1 2", 2));
  const StateVector out = apply(u, StateVector::basis(4, 0));
  const Complex expected[4] = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(std::abs(out[i] - expected[i]), 1e-15);
  // Explicit product CNOT * (H x I), first gate on the right.
  const ComplexMatrix h{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
  const ComplexMatrix cnot{{1.0, 0.0, 0.0, 0.0},
                           {0.0, 1.0, 0.0, 0.0},
                           {0.0, 0.0, 0.0, 1.0},
                           {0.0, 0.0, 1.0, 0.0}};
  EXPECT_LE(u.max_abs_diff(naive_product(cnot, tensor_product(h, ComplexMatrix::identity(2)))),
            1e-15);
}

TEST(ComposePropagator, TextualOrderIsApplicationOrder) {
  // X then H differs from H then X; U = H X for "X 1\nH 1".
  const ComplexMatrix u = compose_propagator(parse_circuit("X 1\nH 1", 1));
  const ComplexMatrix h = gate_unitary(Gate{GateKind::kH, {1, 0}}, 1);
  EXPECT_LE(u.max_abs_diff(naive_product(h, pauli_x())), 1e-15);
  EXPECT_GT(u.max_abs_diff(naive_product(pauli_x(), h)), 0.5);
}

TEST(ComposePropagator, ConcatenationMultipliesInReverse) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Circuit c1 = random_circuit(rng, n);
    const Circuit c2 = random_circuit(rng, n);
    const ComplexMatrix joined = compose_propagator(c1.then(c2));
    const ComplexMatrix product = naive_product(compose_propagator(c2), compose_propagator(c1));
    EXPECT_LE(joined.max_abs_diff(product), 1e-12);
    EXPECT_LE(joined.unitarity_error(), tol::kValidation);
  }
  EXPECT_THROW(Circuit(2).then(Circuit(3)), InvalidArgument);
}
