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

#include "qround/analysis.hpp"

#include <cmath>
#include <string>

namespace qround {
namespace {

void check_alpha(double alpha, double hi) {
  if (!(alpha > 0.0) || alpha > hi) {
    throw AnalysisError("alpha out of range: " + std::to_string(alpha));
  }
}

void check_samples(std::uint64_t N) {
  if (N == 0) throw AnalysisError("sample count must be >= 1");
}

double spread(std::uint64_t N, double alpha) {
  return std::sqrt(3.0 * std::log(2.0 / alpha) / static_cast<double>(N));
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

double chernoff_failure_probability(double mu, double delta, ChernoffBase base) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw AnalysisError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  if (mu < 0.0) throw AnalysisError("mu must be >= 0");
  const double e = mu * delta * delta / 3.0;
  return base == ChernoffBase::kNatural ? 2.0 * std::exp(-e) : std::exp2(-e);
}

double chernoff_delta(std::uint64_t N, double r, double alpha) {
  check_samples(N);
  check_alpha(alpha, 1.0);
  if (!(r > 0.0)) throw AnalysisError("r must be > 0");
  return std::sqrt(3.0 * std::log(2.0 / alpha) / (static_cast<double>(N) * r));
}

double qr_error_bound(std::uint64_t N, double alpha, double eps_rd) {
  check_samples(N);
  check_alpha(alpha, 1.0);
  return eps_rd * spread(N, alpha);
}

double rotation_bias(double eps_rot) { return 2.0 * eps_rot + eps_rot * eps_rot; }

double qr_error_bound_with_bias(std::uint64_t N, double alpha, double eps_rd, double eps_rot) {
  return qr_error_bound(N, alpha, eps_rd) + eps_rd * rotation_bias(eps_rot);
}

double error_factor_F(std::uint64_t N, double alpha) {
  check_samples(N);
  check_alpha(alpha, 2.0);
  return 0.5 * spread(N, alpha);
}

double error_factor_F_half_ulp(std::uint64_t N, double alpha) {
  return 4.0 * error_factor_F(N, alpha);
}

Rational avg_error(AvgErrorKind kind, int m, int l) {
  switch (kind) {
    case AvgErrorKind::kRD:
      if (m < 1 || m > 62) throw AnalysisError("m out of range");
      return (pow2(m) - 1) / pow2(m + 1);
    case AvgErrorKind::kQSR:
      if (m < 2 || m > 62) throw AnalysisError("QSR average error needs m >= 2");
      return (pow2(2 * m) - 3 * pow2(m) + 2) / (3 * pow2(2 * m + 1));
    case AvgErrorKind::kQSRL:
      if (m < 2 || m > 62) throw AnalysisError("QSR_l average error needs m >= 2");
      if (l < 1 || l > m - 1) {
        throw AnalysisError("QSR_l average error needs 1 <= l <= m-1, got l=" +
                            std::to_string(l));
      }
      return (2 * pow2(2 * m - l) - 3 * pow2(m) - 8 * pow2(-l) + 6) / (3 * pow2(2 * m + l));
  }
  throw AnalysisError("unknown average-error kind");
}

Rational brute_force_avg_error(const std::function<Rational(std::uint64_t)>& round_up, int m) {
  if (m < 1 || m > 16) throw AnalysisError("brute force needs 1 <= m <= 16");
  const std::uint64_t count = std::uint64_t{1} << m;
  Rational total = 0;
  for (std::uint64_t r = 0; r < count; ++r) {
    total += abs(round_up(r) - Rational(Integer(r)) / pow2(m));
  }
  return total / pow2(m);
}

Rational brute_force_avg_error(const RoundingMethod& method, int m) {
  return brute_force_avg_error(
      [&](std::uint64_t r) { return semantic_round_probability(method, r, m); }, m);
}

Rational brute_force_avg_error_round_down(int m) {
  return brute_force_avg_error([](std::uint64_t) { return Rational(0); }, m);
}

ErrorBudget ErrorBudget::standard(int n, int p, std::uint64_t N) {
  check_samples(N);
  return {Rational(n) / pow2(n - p), 1.0 / static_cast<double>(N), N};
}

int solve_n_tilde(const ErrorBudget& budget, int p, int cap) {
  if (budget.target_eps <= 0) throw AnalysisError("target error must be > 0");
  check_samples(budget.N);
  check_alpha(budget.alpha, 1.0);
  const double s = spread(budget.N, budget.alpha);
  const double target = to_double(budget.target_eps);
  for (int n = p + 1; n <= cap; ++n) {
    if (std::ldexp(s, -(n - p)) <= target) return n;
  }
  throw AnalysisError("no register size up to " + std::to_string(cap) + " meets the target");
}

}  // namespace qround
