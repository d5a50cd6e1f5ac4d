// Copyright 2026 The qround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qround/blocks.hpp"
#include "qround/circuit.hpp"
#include "qround/circuit_json.hpp"

namespace qround {
namespace {

TEST(Circuit, RegistersAreContiguous) {
  Circuit c;
  const Register a = c.add_register("a", 3);
  const Register b = c.add_register("b", 2, RegisterRole::kAncilla);
  EXPECT_EQ(a.start, 0);
  EXPECT_EQ(b.start, 3);
  EXPECT_EQ(c.num_qubits(), 5);
  EXPECT_EQ(c.reg("b"), b);
  EXPECT_TRUE(c.has_register("a"));
  EXPECT_FALSE(c.has_register("z"));
  EXPECT_THROW(c.reg("z"), CircuitError);
  EXPECT_THROW(c.add_register("a", 1), CircuitError);
}

TEST(Circuit, RejectsBadOperands) {
  Circuit c;
  c.add_register("q", 2);
  EXPECT_THROW(c.append(Gate::x(2)), CircuitError);
  EXPECT_THROW(c.append(Gate::cnot(1, 1)), CircuitError);
  EXPECT_THROW(c.append(Gate::measure(0, 0)), CircuitError);  // no clbit yet
  c.add_clbit();
  EXPECT_NO_THROW(c.append(Gate::measure(0, 0)));
}

TEST(Circuit, AppendRemapsQubits) {
  Circuit sub;
  sub.add_register("s", 2);
  sub.append(Gate::cnot(0, 1));
  Circuit c;
  c.add_register("q", 4);
  const int map[] = {3, 1};
  c.append(sub, map);
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0].qubits, (std::vector<int>{3, 1}));
}

TEST(Circuit, InverseReversesAndNegates) {
  Circuit c;
  c.add_register("q", 2);
  c.append(Gate::x(0));
  c.append(Gate::cry(0, 1, Angle::asin_sqrt(Rational(1, 4))));
  const Circuit inv = c.inverse();
  ASSERT_EQ(inv.gates().size(), 2u);
  EXPECT_EQ(inv.gates()[0].kind, GateKind::kCRY);
  EXPECT_TRUE(inv.gates()[0].angle->negated);
  EXPECT_NEAR(inv.gates()[0].angle->radians(), -2 * std::asin(0.5), 1e-15);
  EXPECT_EQ(inv.gates()[1].kind, GateKind::kX);
}

TEST(Angle, Conventions) {
  EXPECT_NEAR(Angle::pi_multiple(Rational(1, 2)).radians(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(Angle::asin_sqrt(Rational(1, 2)).radians(), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(Angle::asin_sqrt(1).radians(), std::numbers::pi, 1e-15);
}

TEST(Expand, SwapsLowerToEquivalentGates) {
  Circuit c;
  c.add_register("q", 3);
  c.append(Gate::swap(0, 1));
  c.append(Gate::cswap(2, 0, 1));
  const Circuit e = expand(c, Regime::kFT);
  EXPECT_EQ(count_kind(e, GateKind::kSWAP), 0);
  EXPECT_EQ(count_kind(e, GateKind::kCSWAP), 0);
  EXPECT_EQ(count_kind(e, GateKind::kToffoli), 1);
  for (unsigned in = 0; in < 8; ++in) {
    std::vector<std::uint8_t> bits{std::uint8_t(in & 1), std::uint8_t((in >> 1) & 1),
                                   std::uint8_t((in >> 2) & 1)};
    EXPECT_EQ(simulate_classical(c, bits), simulate_classical(e, bits)) << in;
  }
}

TEST(Count, SingleToffoliFaultTolerant) {
  Circuit c;
  c.add_register("q", 3);
  c.append(Gate::toffoli(0, 1, 2));
  const ResourceReport r = count_resources(c, Regime::kFT, std::nullopt);
  EXPECT_EQ(r.t_count, 4);
  EXPECT_EQ(r.t_depth, 1);
  EXPECT_EQ(r.cnot_count, 10);
  EXPECT_EQ(r.cnot_depth, 5);
  EXPECT_EQ(r.uncomputed_ancillas, 2);
  EXPECT_EQ(r.additional_qubits, 0);
}

TEST(Count, DepthIsCriticalPath) {
  Circuit c;
  c.add_register("q", 4);
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::toffoli(0, 1, 3));  // shares controls: serial
  c.append(Gate::cnot(2, 3));
  const ResourceReport r = count_resources(c, Regime::kFT, std::nullopt);
  EXPECT_EQ(r.t_count, 8);
  EXPECT_EQ(r.t_depth, 2);
  EXPECT_EQ(r.cnot_count, 21);
  EXPECT_EQ(r.cnot_depth, 11);
  const ResourceReport n = count_resources(c, Regime::kNISQ, std::nullopt);
  EXPECT_EQ(n.t_count, 0);
  EXPECT_EQ(n.two_qubit_count, 11);
  EXPECT_EQ(n.two_qubit_depth, 11);
}

TEST(Count, ParallelGatesShareALayer) {
  Circuit c;
  c.add_register("q", 6);
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::toffoli(3, 4, 5));
  const ResourceReport r = count_resources(c, Regime::kFT, std::nullopt);
  EXPECT_EQ(r.t_depth, 1);
  EXPECT_EQ(r.uncomputed_ancillas, 4);
}

TEST(Count, RotationsNeedPrecision) {
  Circuit c;
  c.add_register("q", 1);
  c.append(Gate::ry(0, Angle::asin_sqrt(Rational(1, 3))));
  EXPECT_THROW(count_resources(c, Regime::kFT, std::nullopt), CircuitError);
  const ResourceReport r = count_resources(c, Regime::kFT, pow2(-10));
  EXPECT_EQ(r.t_count, static_cast<std::int64_t>(std::ceil(1.149 * 10 + 9.2)));
  EXPECT_NO_THROW(count_resources(c, Regime::kNISQ, std::nullopt));
}

TEST(Count, UnexpandedMacroThrows) {
  const int width = comparator(2).num_qubits();
  Circuit c;
  c.add_register("q", width);
  std::vector<int> ops(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) ops[static_cast<std::size_t>(i)] = i;
  c.append(block_macro("comparator", {{"m", 2}}, ops));
  EXPECT_THROW(count_resources(c, Regime::kFT, std::nullopt), CircuitError);
}

TEST(Count, RolesFeedQubitTotals) {
  Circuit c;
  c.add_register("d", 3);
  c.add_register("x", 2, RegisterRole::kAdditional);
  c.add_register("w", 5, RegisterRole::kAncilla);
  const ResourceReport r = count_resources(c, Regime::kFT, std::nullopt);
  EXPECT_EQ(r.additional_qubits, 2);
  EXPECT_EQ(r.uncomputed_ancillas, 5);
}

TEST(Json, RoundTrip) {
  Circuit c;
  c.add_register("a", 2);
  c.add_register("f", 1, RegisterRole::kAdditional);
  const int cb = c.add_clbit();
  c.append(Gate::h(0));
  c.append(Gate::cry(0, 2, Angle::asin_sqrt(Rational(3, 8))));
  c.append(Gate::register_ry({0, 1}, 2));
  c.append(Gate::measure(2, cb));
  c.append(Gate::conditional_reset(2, cb));
  c.append(Gate::macro("custom", {0, 1, 2}, {{"k", 7}}));
  const nlohmann::json j = circuit_to_json(c);
  EXPECT_EQ(circuit_from_json(j), c);
  EXPECT_EQ(circuit_to_json(circuit_from_json(j)).dump(), j.dump());
}

TEST(Json, RationalStrings) {
  EXPECT_EQ(rational_from_string("3/8"), Rational(3, 8));
  EXPECT_EQ(rational_from_string("5"), Rational(5));
  EXPECT_THROW(rational_from_string("x"), std::exception);
}

}  // namespace
}  // namespace qround
