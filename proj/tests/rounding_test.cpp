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

#include "qround/rounding.hpp"
#include "qround/sim.hpp"

namespace qround {
namespace {

std::vector<RoundingMethod> all_methods(int m) {
  std::vector<RoundingMethod> out{RoundingMethod::stochastic(), RoundingMethod::qr_comparator(),
                                  RoundingMethod::qr_rotation()};
  if (m >= 2) out.push_back(RoundingMethod::semi_round());
  for (int l = 1; l <= m; ++l) out.push_back(RoundingMethod::semi_round_l(l));
  return out;
}

TEST(Names, RoundTrip) {
  for (const auto& method : all_methods(4)) {
    EXPECT_EQ(rounding_method_from_string(to_string(method)), method) << to_string(method);
  }
  EXPECT_EQ(to_string(RoundingMethod::semi_round_l(3)), "semi-round-l3");
  EXPECT_EQ(rounding_method_from_string("semi-round-l", 2), RoundingMethod::semi_round_l(2));
  EXPECT_EQ(rounding_method_from_string("qr"), RoundingMethod::qr_comparator());
  EXPECT_THROW(rounding_method_from_string("bogus"), RoundingError);
  EXPECT_THROW(RoundingMethod::semi_round_l(0), RoundingError);
}

TEST(Semantics, ExactMethods) {
  for (std::uint64_t r = 0; r < 16; ++r) {
    EXPECT_EQ(semantic_round_probability(RoundingMethod::qr_comparator(), r, 4), Rational(r, 16));
    EXPECT_EQ(semantic_round_probability(RoundingMethod::qr_rotation(), r, 4), Rational(r, 16));
  }
}

TEST(Semantics, Stochastic) {
  EXPECT_EQ(semantic_round_probability(RoundingMethod::stochastic(), 0, 3), 0);
  for (std::uint64_t r = 1; r < 8; ++r) {
    EXPECT_EQ(semantic_round_probability(RoundingMethod::stochastic(), r, 3), Rational(1, 2));
  }
}

TEST(Semantics, SemiRoundKeepsLeadingOne) {
  // 0b0110 -> 0b0100, 0b0001 -> 0b0001, 0b1011 -> 0b1000
  EXPECT_EQ(semantic_round_probability(RoundingMethod::semi_round(), 0b0110, 4), Rational(4, 16));
  EXPECT_EQ(semantic_round_probability(RoundingMethod::semi_round(), 0b0001, 4), Rational(1, 16));
  EXPECT_EQ(semantic_round_probability(RoundingMethod::semi_round(), 0b1011, 4), Rational(8, 16));
  EXPECT_EQ(semantic_round_probability(RoundingMethod::semi_round(), 0, 4), 0);
}

TEST(Semantics, LeadingBitsFraction) {
  EXPECT_EQ(leading_bits_fraction(0b10111, 5, 2), Rational(0b10000, 32));
  EXPECT_EQ(leading_bits_fraction(0b00111, 5, 2), Rational(0b00110, 32));
  EXPECT_EQ(leading_bits_fraction(0b00011, 5, 3), Rational(3, 32));
  EXPECT_EQ(leading_bits_fraction(0b10111, 5, 9), Rational(0b10111, 32));
  EXPECT_EQ(semantic_round_probability(RoundingMethod::semi_round_l(1), 0b0110, 4),
            semantic_round_probability(RoundingMethod::semi_round(), 0b0110, 4));
}

TEST(Build, FrameRegisters) {
  for (const auto& method : all_methods(3)) {
    const Circuit c = build(method, 3, 3);
    EXPECT_EQ(c.reg("x").size, 3);
    EXPECT_EQ(c.reg("r").size, 3);
    EXPECT_EQ(c.reg("flag").size, 1);
    EXPECT_EQ(c.reg("carry").size, 1);
    EXPECT_EQ(c.num_clbits(), 1);
  }
  EXPECT_THROW(build(RoundingMethod::qr_comparator(), 0, 3), std::exception);
}

TEST(Build, SemiRoundLadderSize) {
  for (int m = 2; m <= 8; ++m) {
    const Circuit c = build(RoundingMethod::semi_round(), 2, m);
    EXPECT_EQ(c.reg("lead").size, 2 * m - 3) << m;
    EXPECT_EQ(count_kind(c, GateKind::kCRY), m) << m;
  }
}

TEST(Build, CircuitMatchesSemantics) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& method : all_methods(m)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 + m)); ++bits) {
        const ExtendedValue v(FxFormat::make(2, 1), m, bits);
        const auto dist = run_rounding(method, v);
        const double p_up = to_double(semantic_round_probability(method, v.remainder_bits(), m));
        double up = 0;
        double total = 0;
        for (const auto& [key, pr] : dist) {
          total += pr;
          const std::uint64_t expect = v.floor().bits + static_cast<std::uint64_t>(key.second);
          EXPECT_EQ(key.first, expect) << to_string(method);
          up += key.second ? pr : 0.0;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_NEAR(up, p_up, 1e-10) << to_string(method) << " m=" << m << " bits=" << bits;
      }
    }
  }
}

}  // namespace
}  // namespace qround
