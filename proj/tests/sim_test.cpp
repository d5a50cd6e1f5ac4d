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

#include "qround/sim.hpp"

namespace qround {
namespace {

TEST(StateVector, BasisAndHadamard) {
  StateVector s(2, 0b01);
  EXPECT_EQ(s.amplitude(0b01), StateVector::Amplitude(1));
  s.apply(Gate::h(1));
  EXPECT_NEAR(std::abs(s.amplitude(0b01)), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(s.amplitude(0b11).real(), std::sqrt(0.5), 1e-15);
  s.apply(Gate::h(1));
  EXPECT_NEAR(std::abs(s.amplitude(0b01)), 1.0, 1e-15);
  EXPECT_EQ(s.support().size(), 1u);
}

TEST(StateVector, BellPair) {
  StateVector s(2);
  s.apply(Gate::h(0));
  s.apply(Gate::cnot(0, 1));
  EXPECT_NEAR(s.probability_one(0), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s.amplitude(0b11)), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s.amplitude(0b01)), 0.0, 1e-15);
  s.project(0, true);
  EXPECT_NEAR(s.probability_one(1), 1.0, 1e-15);
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
}

TEST(StateVector, ProjectOntoImpossibleBranchThrows) {
  StateVector s(1);
  EXPECT_THROW(s.project(0, true), SimError);
}

TEST(StateVector, RotationProbabilities) {
  for (int k = 0; k <= 8; ++k) {
    StateVector s(1);
    s.apply(Gate::ry(0, Angle::asin_sqrt(Rational(k, 8))));
    EXPECT_NEAR(s.probability_one(0), k / 8.0, 1e-14);
  }
  StateVector t(2);
  t.apply(Gate::cry(0, 1, Angle::asin_sqrt(Rational(1, 2))));
  EXPECT_NEAR(t.probability_one(1), 0.0, 1e-15);
}

TEST(StateVector, RegisterRotationUsesBasisValue) {
  for (std::uint64_t j = 0; j < 8; ++j) {
    StateVector s(4, j);
    s.apply(Gate::register_ry({0, 1, 2}, 3));
    EXPECT_NEAR(s.probability_one(3), j / 8.0, 1e-14) << j;
  }
}

TEST(StateVector, ClassicalGates) {
  StateVector s(3, 0b011);
  s.apply(Gate::toffoli(0, 1, 2));
  EXPECT_NEAR(std::abs(s.amplitude(0b111)), 1.0, 1e-15);
  s.apply(Gate::cswap(2, 0, 1));
  EXPECT_NEAR(std::abs(s.amplitude(0b111)), 1.0, 1e-15);
  StateVector t(3, 0b101);
  t.apply(Gate::cswap(2, 0, 1));
  EXPECT_NEAR(std::abs(t.amplitude(0b110)), 1.0, 1e-15);
  t.apply(Gate::swap(1, 2));
  EXPECT_NEAR(std::abs(t.amplitude(0b110)), 1.0, 1e-15);
}

TEST(StateVector, DenseExport) {
  StateVector s(3);
  s.apply(Gate::h(2));
  const auto d = s.dense();
  ASSERT_EQ(d.size(), 8u);
  EXPECT_NEAR(d[4].real(), std::sqrt(0.5), 1e-15);
}

Circuit measured_coin() {
  Circuit c;
  c.add_register("q", 1);
  c.add_register("t", 1);
  const int cb = c.add_clbit();
  c.append(Gate::ry(0, Angle::asin_sqrt(Rational(1, 4))));
  c.append(Gate::measure(0, cb));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::conditional_reset(0, cb));
  return c;
}

TEST(Run, MeasurementBranches) {
  const Distribution d = run(measured_coin(), {}, {"q", "t"});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.at(Outcome{0, 1, 1}), 0.25, 1e-14);
  EXPECT_NEAR(d.at(Outcome{0, 0, 0}), 0.75, 1e-14);
}

TEST(Run, DeferredMeasurementAgrees) {
  const Distribution a = run(measured_coin(), {}, {"t"});
  const Distribution b = run(measured_coin(), {}, {"t"}, SimOptions{kDefaultQubitCap, true});
  ASSERT_EQ(a.size(), b.size());
  for (const auto& [k, p] : a) EXPECT_NEAR(b.at(k), p, 1e-14);
}

TEST(Run, QubitCap) {
  Circuit c;
  c.add_register("q", 30);
  EXPECT_THROW(run(c, {}, {"q"}), SimError);
  EXPECT_NO_THROW(run(c, {}, {"q"}, SimOptions{30, false}));
}

TEST(Run, InitialValues) {
  Circuit c;
  c.add_register("a", 3);
  c.add_register("b", 3);
  for (int i = 0; i < 3; ++i) c.append(Gate::cnot(i, 3 + i));
  const Distribution d = run(c, {{"a", 5}}, {"a", "b"});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, (Outcome{5, 5, 0}));  // no clbits packs to 0
  EXPECT_THROW(run(c, {{"a", 9}}, {"a"}), SimError);
}

TEST(Backends, AgreeOnRoundUpProbability) {
  const ExtendedValue v = ExtendedValue::parse("1.0|101");
  for (const auto& method : {RoundingMethod::qr_comparator(), RoundingMethod::qr_rotation(),
                             RoundingMethod::semi_round(), RoundingMethod::stochastic()}) {
    EXPECT_NEAR(round_up_probability(method, v, Backend::kSemantic),
                round_up_probability(method, v, Backend::kCircuit), 1e-12);
  }
}

TEST(Sample, DeterministicPerSeed) {
  const ExtendedValue v = ExtendedValue::parse("01.01|011");
  const auto m = RoundingMethod::qr_comparator();
  const SampleStats a = sample(m, v, 5000, 11, Backend::kSemantic);
  const SampleStats b = sample(m, v, 5000, 11, Backend::kSemantic);
  const SampleStats c = sample(m, v, 5000, 12, Backend::kSemantic);
  EXPECT_EQ(a.X, b.X);
  EXPECT_NE(a.X, c.X);
  EXPECT_EQ(a.seed, 11u);
  EXPECT_DOUBLE_EQ(a.alpha, 1.0 / 5000);
  const SampleStats d = sample(m, v, 5000, 11, Backend::kCircuit);
  EXPECT_EQ(a.X, d.X);
}

TEST(Sample, EstimateAndBound) {
  const ExtendedValue v = ExtendedValue::parse("01.01|011");
  const SampleStats s = sample(RoundingMethod::qr_comparator(), v, 10000, 3, Backend::kSemantic, 1e-3);
  EXPECT_EQ(s.estimate, v.floor().value() + Rational(static_cast<std::int64_t>(s.X), 10000) * Rational(1, 4));
  EXPECT_NEAR(s.chernoff_bound, 0.25 * std::sqrt(3 * std::log(2e3) / 1e4), 1e-15);
  EXPECT_TRUE(s.within_bound);
  EXPECT_NEAR(to_double(s.estimate), to_double(v.value()), s.chernoff_bound);
}

TEST(Sample, ZeroRemainderNeverRoundsUp) {
  const ExtendedValue v = ExtendedValue::parse("0.1|000");
  for (const auto& method : {RoundingMethod::qr_comparator(), RoundingMethod::stochastic(),
                             RoundingMethod::semi_round()}) {
    EXPECT_EQ(sample(method, v, 1000, 0, Backend::kSemantic).X, 0u);
  }
}

TEST(Sample, JsonFields) {
  const ExtendedValue v = ExtendedValue::parse("1.1|01");
  const auto method = RoundingMethod::qr_rotation();
  const SampleStats s = sample(method, v, 100, 4, Backend::kSemantic);
  const nlohmann::json j = sample_to_json(method, v, s);
  for (const char* key : {"method", "n", "p", "m", "value", "remainder", "N", "X", "estimate",
                          "bound", "alpha", "within_bound", "seed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["method"], "qr-rotation");
}

}  // namespace
}  // namespace qround
