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

#include "qround/analysis.hpp"
#include "qround/rounding.hpp"

namespace qround {
namespace {

TEST(Chernoff, NaturalAndBaseTwo) {
  EXPECT_NEAR(chernoff_failure_probability(300, 0.1), 2 * std::exp(-1.0), 1e-12);
  EXPECT_NEAR(chernoff_failure_probability(300, 0.1, ChernoffBase::kTwo), 0.5, 1e-12);
  EXPECT_THROW(chernoff_failure_probability(10, 0.0), AnalysisError);
  EXPECT_THROW(chernoff_failure_probability(10, 1.0), AnalysisError);
}

TEST(Chernoff, DeltaInvertsNaturalForm) {
  const std::uint64_t N = 5000;
  const double r = 0.3;
  const double alpha = 1e-3;
  const double delta = chernoff_delta(N, r, alpha);
  EXPECT_NEAR(delta, std::sqrt(3 * std::log(2 / alpha) / (N * r)), 1e-15);
  EXPECT_NEAR(chernoff_failure_probability(N * r, delta), alpha, 1e-12);
}

TEST(ErrorBound, Formula) {
  const double b = qr_error_bound(10000, 1e-4, 1.0 / 16);
  EXPECT_NEAR(b, std::sqrt(3 * std::log(2e4) / 1e4) / 16, 1e-15);
  EXPECT_NEAR(rotation_bias(0.01), 0.0201, 1e-15);
  EXPECT_NEAR(qr_error_bound_with_bias(10000, 1e-4, 0.5, 0.01), b * 8 + 0.5 * 0.0201, 1e-15);
}

TEST(ErrorFactor, SpotValues) {
  const double f500 = error_factor_F(500, 1.0 / 500);
  EXPECT_NEAR(f500, 0.5 * std::sqrt(3 * std::log(1000.0) / 500), 1e-15);
  EXPECT_GE(f500, 0.09);
  EXPECT_LE(f500, 0.12);
  const double f9 = error_factor_F(90000, 1.0 / 90000);
  EXPECT_GE(f9, 0.009);
  EXPECT_LE(f9, 0.011);
  EXPECT_DOUBLE_EQ(error_factor_F_half_ulp(500, 0.01), 4 * error_factor_F(500, 0.01));
  EXPECT_THROW(error_factor_F(10, 0.0), AnalysisError);
  EXPECT_THROW(error_factor_F(10, 2.5), AnalysisError);
}

TEST(AvgError, RoundDownClosedFormMatchesEnumeration) {
  for (int m = 1; m <= 12; ++m) {
    EXPECT_EQ(avg_error(AvgErrorKind::kRD, m), brute_force_avg_error_round_down(m)) << m;
  }
}

TEST(AvgError, SemiRoundClosedFormMatchesEnumeration) {
  for (int m = 2; m <= 12; ++m) {
    EXPECT_EQ(avg_error(AvgErrorKind::kQSR, m), brute_force_avg_error(RoundingMethod::semi_round(), m))
        << m;
    EXPECT_EQ(avg_error(AvgErrorKind::kQSRL, m, 1), avg_error(AvgErrorKind::kQSR, m)) << m;
  }
}

TEST(AvgError, SemiRoundRatios) {
  auto ratio = [](int m) {
    return avg_error(AvgErrorKind::kQSR, m) / avg_error(AvgErrorKind::kRD, m);
  };
  EXPECT_EQ(ratio(2), Rational(1, 6));
  EXPECT_EQ(ratio(3), Rational(1, 4));
  EXPECT_NEAR(to_double(ratio(20)), 1.0 / 3, 1e-4);
}

TEST(AvgError, ExactMethodsHaveNoAverageError) {
  for (int m = 1; m <= 8; ++m) {
    EXPECT_EQ(brute_force_avg_error(RoundingMethod::qr_comparator(), m), 0);
    EXPECT_EQ(brute_force_avg_error(RoundingMethod::semi_round_l(m), m), 0);
  }
}

TEST(AvgError, HandEnumeratedSemiRoundL) {
  // m=3, l=2: keep the two bits from the leading one.
  // r: 0..7 -> kept 0,1,2,3,4,4,6,6 (in eighths); error 0,0,0,0,0,1,0,1.
  EXPECT_EQ(brute_force_avg_error(RoundingMethod::semi_round_l(2), 3), Rational(1, 32));
}

TEST(AvgError, Domains) {
  EXPECT_THROW(avg_error(AvgErrorKind::kQSRL, 4, 0), AnalysisError);
  EXPECT_THROW(avg_error(AvgErrorKind::kQSRL, 4, 4), AnalysisError);
  EXPECT_THROW(brute_force_avg_error_round_down(17), AnalysisError);
}

// Independent search over the same inequality in doubles.
int reference_n_tilde(int n, int p, std::uint64_t N) {
  const double target = n / std::ldexp(1.0, n - p);
  const double alpha = 1.0 / static_cast<double>(N);
  const double s = std::sqrt(3 * std::log(2 / alpha) / static_cast<double>(N));
  for (int nt = p + 1;; ++nt) {
    if (std::ldexp(1.0, p - nt) * s <= target) return nt;
  }
}

TEST(NTilde, MatchesReferenceSearch) {
  for (std::uint64_t N : {10ull, 100ull, 1000ull, 10000ull, 50000ull, 100000ull, 1000000ull}) {
    EXPECT_EQ(solve_n_tilde(ErrorBudget::standard(10, 0, N), 0), reference_n_tilde(10, 0, N)) << N;
  }
  EXPECT_EQ(solve_n_tilde(ErrorBudget::standard(10, 0, 10000), 0), 3);
  EXPECT_EQ(solve_n_tilde(ErrorBudget::standard(12, 4, 100), 4), reference_n_tilde(12, 4, 100));
}

TEST(NTilde, CapIsEnforced) {
  EXPECT_THROW(solve_n_tilde(ErrorBudget::standard(10, 0, 10), 0, 5), AnalysisError);
}

}  // namespace
}  // namespace qround
