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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qround/circuit.hpp"
#include "qround/rational.hpp"

namespace qround {

class RoundingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RoundingMethod {
  enum class Variant { kStochastic, kQRComparator, kQRRotation, kSemiRound, kSemiRoundL };

  Variant variant = Variant::kQRComparator;
  int l = 0;  // SemiRoundL only

  static RoundingMethod stochastic() { return {Variant::kStochastic, 0}; }
  static RoundingMethod qr_comparator() { return {Variant::kQRComparator, 0}; }
  static RoundingMethod qr_rotation() { return {Variant::kQRRotation, 0}; }
  static RoundingMethod semi_round() { return {Variant::kSemiRound, 0}; }
  static RoundingMethod semi_round_l(int l);

  friend bool operator==(const RoundingMethod&, const RoundingMethod&) = default;
};

/// "stochastic", "qr-comparator", "qr-rotation", "semi-round", "semi-round-l<l>".
std::string to_string(const RoundingMethod& method);
/// Inverse of to_string(); "semi-round-l" alone needs `l` from the caller.
RoundingMethod rounding_method_from_string(std::string_view name, int l = 0);

/// Rounds the (n+m)-bit value held in registers "x" (n, integer bits of the
/// target format) and "r" (m, remainder) into "x" plus a carry qubit
/// "carry". The rounding direction is measured from "flag" into classical
/// bit 0, after which flag is reset. Workspace registers depend on the
/// method.
Circuit build(const RoundingMethod& method, int n, int m);

/// Exact probability of rounding up for a remainder of m bits.
Rational semantic_round_probability(const RoundingMethod& method,
                                    std::uint64_t remainder_bits, int m);

/// Probability mass of the l bits starting at the most significant set bit.
/// l >= m gives the full remainder.
Rational leading_bits_fraction(std::uint64_t remainder_bits, int m, int l);

}  // namespace qround
