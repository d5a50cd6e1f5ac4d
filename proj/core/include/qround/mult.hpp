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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qround/circuit.hpp"
#include "qround/fxp.hpp"

namespace qround {

class MultError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MultMethod { kExact, kHaner, kQRound };
std::string_view to_string(MultMethod m);
MultMethod mult_method_from_string(std::string_view s);

enum class ScheduleReading {
  kPerAddend,  // 2^(e_j + p_b - f_j) <= eps / n_a, e_j the weight of a_j
  kLiteral,    // 2^(p_b - f_j) <= eps / n_a for every j
};

struct MultiplyPlan {
  MultMethod method = MultMethod::kExact;
  FxFormat a;
  FxFormat b;
  Rational eps = 0;
  ScheduleReading reading = ScheduleReading::kPerAddend;
  /// Bits of b used by the addition controlled on a_j.
  std::vector<int> f;
  /// Lowest product bit (integer index into a*b) kept in the output.
  int lo = 0;
  FxFormat out;
  /// QRound only: the reduced operand size, its rounding stage and budget.
  std::optional<int> n_tilde;
  std::uint64_t N = 0;
  double alpha = 0;

  int additions() const;
};

/// Per-addend bit schedule for multiplying formats a and b to within eps.
std::vector<int> addend_schedule(FxFormat a, FxFormat b, const Rational& eps,
                                 ScheduleReading reading = ScheduleReading::kPerAddend);

/// Plan for arbitrary formats and error budget (eps = 0 is exact).
MultiplyPlan plan_general(FxFormat a, FxFormat b, const Rational& eps,
                          ScheduleReading reading = ScheduleReading::kPerAddend);

/// n-bit by n-bit benchmark plans with p integer bits. Haner and QRound use
/// the target n / 2^(n-p); QRound needs N and defaults alpha to 1/N.
MultiplyPlan plan(MultMethod method, int n, int p, std::uint64_t N = 0,
                  std::optional<double> alpha = std::nullopt,
                  ScheduleReading reading = ScheduleReading::kPerAddend);

int addend_bits(int j, const MultiplyPlan& plan);

/// Registers "a", "b" (data), "out" (additional) and shared workspace "z",
/// "p", "park". QRound plans also round "out" into its top n_tilde bits
/// with the comparator method (extra registers prefixed "round_").
Circuit build_multiplier(const MultiplyPlan& plan);

/// Walker cost of the multiplication; QRound adds the composed rounding
/// formulas for max(n_tilde, 2).
ResourceReport method_resources(const MultiplyPlan& plan, Regime regime);

/// Truncated-schoolbook value of a*b as the plan computes it, as an integer
/// in units of the output's last place.
std::uint64_t classical_product(const MultiplyPlan& plan, std::uint64_t a_bits,
                                std::uint64_t b_bits);

}  // namespace qround
