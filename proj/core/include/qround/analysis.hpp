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
#include <functional>
#include <optional>
#include <stdexcept>

#include "qround/rational.hpp"
#include "qround/rounding.hpp"

namespace qround {

class AnalysisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ChernoffBase {
  kNatural,  // 2 * exp(-mu delta^2 / 3)
  kTwo,      // 2^(-mu delta^2 / 3)
};

/// Probability that a sum of Bernoulli variables with mean mu strays by more
/// than delta * mu. delta must lie in (0, 1).
double chernoff_failure_probability(double mu, double delta,
                                    ChernoffBase base = ChernoffBase::kNatural);

/// delta = sqrt(3 ln(2/alpha) / (N r)), the choice that makes the natural
/// form equal alpha.
double chernoff_delta(std::uint64_t N, double r, double alpha);

/// eps_rd * sqrt(3 ln(2/alpha) / N).
double qr_error_bound(std::uint64_t N, double alpha, double eps_rd);

/// 2 eps_rot + eps_rot^2: error on the rounding probability from a rotation
/// synthesized to accuracy eps_rot.
double rotation_bias(double eps_rot);

/// qr_error_bound plus eps_rd * rotation_bias(eps_rot).
double qr_error_bound_with_bias(std::uint64_t N, double alpha, double eps_rd, double eps_rot);

/// 1/2 * sqrt(3 ln(2/alpha) / N): the bound relative to the round-nearest
/// error 2 eps_rd. Defined for 0 < alpha <= 2.
double error_factor_F(std::uint64_t N, double alpha);
/// The same ratio against the half-ulp round-nearest error eps_rd / 2.
double error_factor_F_half_ulp(std::uint64_t N, double alpha);

enum class AvgErrorKind { kRD, kQSR, kQSRL };

/// Closed-form average error in units of eps_rd.
///   RD:    (2^m - 1) / 2^(m+1)
///   QSR:   (4^m - 3 2^m + 2) / (3 2^(2m+1)),                    m >= 2
///   QSR_l: (2 2^(2m-l) - 3 2^m - 8 2^-l + 6) / (3 2^(2m+l)),    1 <= l <= m-1
Rational avg_error(AvgErrorKind kind, int m, int l = 1);

/// (1/2^m) sum_r |p(r) - r/2^m| in units of eps_rd, where p(r) is the
/// probability of rounding up remainder r. m <= 16.
Rational brute_force_avg_error(const std::function<Rational(std::uint64_t)>& round_up, int m);
Rational brute_force_avg_error(const RoundingMethod& method, int m);
/// Always rounding down.
Rational brute_force_avg_error_round_down(int m);

struct ErrorBudget {
  Rational target_eps = 0;
  double alpha = 0;
  std::uint64_t N = 1;

  /// Target n / 2^(n-p) and alpha = 1/N.
  static ErrorBudget standard(int n, int p, std::uint64_t N);
};

inline constexpr int kMaxNTilde = 62;

/// Smallest n_tilde >= p + 1 with 2^-(n_tilde - p) sqrt(3 ln(2/alpha)/N) <= target.
int solve_n_tilde(const ErrorBudget& budget, int p, int cap = kMaxNTilde);

}  // namespace qround
