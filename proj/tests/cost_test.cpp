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

#include <algorithm>
#include <cmath>

#include "qround/cost.hpp"
#include "qround/rounding.hpp"

namespace qround {
namespace {

using I = std::int64_t;

// Straight transcription with floating logs, used as an oracle.
struct CtrlAddOracle {
  I n;
  static I flog(double x) { return static_cast<I>(std::floor(std::log2(x))); }
  I sum(I k) const {
    I s = 0;
    for (I i = 1; i <= flog(static_cast<double>(k)); ++i) s += k / (I{1} << i);
    return s;
  }
  I logs() const { return flog(double(n)) + flog(double(n - 1)); }
  I sums() const { return sum(n) + sum(n - 1); }
  I thirds() const { return flog(n / 3.0) + flog((n - 1) / 3.0); }
  I t() const { return 34 * n - 12 * logs() + 12 * sums() - 12; }
  I t_depth() const { return logs() + thirds() + 11; }
  I cnot() const { return 77 * n - 30 * logs() + 30 * sums() - 29; }
  I cnot_depth() const { return 10 * (logs() + thirds()) + 111; }
  I anc() const { return 3 * n - flog(double(n)) + sum(n) - 5; }
};

TEST(Formulas, ControlledAddAgainstOracle) {
  for (int n = 4; n <= 64; ++n) {
    const CtrlAddOracle o{n};
    const ResourceReport r = ctrl_add_cost(n, Regime::kFT);
    EXPECT_EQ(r.t_count, o.t()) << n;
    EXPECT_EQ(r.t_depth, o.t_depth()) << n;
    EXPECT_EQ(r.cnot_count, o.cnot()) << n;
    EXPECT_EQ(r.cnot_depth, o.cnot_depth()) << n;
    EXPECT_EQ(r.uncomputed_ancillas, o.anc()) << n;
    EXPECT_EQ(r.additional_qubits, 1);
  }
}

TEST(Formulas, ControlledAddTenBits) {
  const ResourceReport r = ctrl_add_cost(10, Regime::kFT);
  EXPECT_EQ(r.t_count, 436);
  EXPECT_EQ(r.t_depth, 19);
  EXPECT_EQ(r.cnot_count, 1011);
  EXPECT_EQ(r.cnot_depth, 191);
  EXPECT_EQ(r.uncomputed_ancillas, 30);
  EXPECT_EQ(ctrl_add_cost(10, Regime::kNISQ).two_qubit_count, 563);
  EXPECT_EQ(ctrl_add_cost(10, Regime::kNISQ).t_count, 0);
}

TEST(Formulas, ComparatorLoadingTenBits) {
  const ResourceReport r = loading_cost_qr(10, Regime::kFT);
  EXPECT_EQ(r.additional_qubits, 11);
  EXPECT_EQ(r.uncomputed_ancillas, 34);
  EXPECT_EQ(r.t_count, 192);
  EXPECT_EQ(r.t_depth, 13);
  EXPECT_EQ(r.cnot_count, 498);
  EXPECT_EQ(r.cnot_depth, 67);
}

TEST(Formulas, ComposedTenByTen) {
  const ResourceReport r = compose_qr_cost(10, 10, Regime::kFT);
  EXPECT_EQ(r.additional_qubits, 12);
  EXPECT_EQ(r.uncomputed_ancillas, 34);
  EXPECT_EQ(r.t_count, 628);
  EXPECT_EQ(r.t_depth, 32);
  EXPECT_EQ(r.cnot_count, 1509);
  EXPECT_EQ(r.cnot_depth, 258);
}

TEST(Formulas, SemiRoundLoadingUsesSynthesisTerm) {
  const ResourceReport r = loading_cost_qsr(10, Regime::kFT, pow2(-10));
  const I k = static_cast<I>(std::ceil(1.149 * 10));
  EXPECT_EQ(r.t_count, 36 * 10 + 3 * 10 * k - 12);
  EXPECT_EQ(r.t_depth, 12 * 10 + static_cast<I>(std::ceil(10 * 1.149 * 10)) - 3);
  EXPECT_EQ(r.cnot_count, 170);
  EXPECT_GT(r.t_count, 0);
  EXPECT_THROW(loading_cost_qsr(10, Regime::kFT, Rational(0)), CostError);
}

TEST(Formulas, Domains) {
  EXPECT_THROW(loading_cost_qr(1, Regime::kFT), CostError);
  EXPECT_THROW(ctrl_add_cost(1, Regime::kFT), CostError);
  EXPECT_THROW(compose(ctrl_add_cost(4, Regime::kFT), ctrl_add_cost(4, Regime::kNISQ)), CostError);
}

TEST(Compose, SumsAndMaxesAncillas) {
  ResourceReport a;
  a.t_count = 3;
  a.uncomputed_ancillas = 5;
  ResourceReport b;
  b.t_count = 4;
  b.uncomputed_ancillas = 2;
  const ResourceReport c = compose(a, b);
  EXPECT_EQ(c.t_count, 7);
  EXPECT_EQ(c.uncomputed_ancillas, 5);
}

TEST(FloorLog2Ratio, Exact) {
  EXPECT_EQ(floor_log2_ratio(10, 3), 1);
  EXPECT_EQ(floor_log2_ratio(12, 3), 2);
  EXPECT_EQ(floor_log2_ratio(2, 3), -1);
  EXPECT_EQ(floor_log2_ratio(1, 3), -2);
  EXPECT_EQ(floor_log2_ratio(3, 3), 0);
}

// Walker vs formula on the comparator loading block; deltas are pinned.
TEST(Reconcile, ComparatorLoadingDeltas) {
  for (int m : {2, 4, 8, 10, 16}) {
    const ResourceReport walker =
        count_resources(expand(qr_loading_circuit(m), Regime::kFT), Regime::kFT, std::nullopt);
    const ReconciliationReport rec =
        reconcile(loading_cost_qr(m, Regime::kFT), walker, std::nullopt, 0, m);
    EXPECT_EQ(rec.row("t_count").walker_delta, 0) << m;
    EXPECT_EQ(rec.row("additional_qubits").walker_delta, 0) << m;
    EXPECT_EQ(rec.row("cnot_count").walker_delta, 1) << m;
    EXPECT_EQ(rec.row("uncomputed_ancillas").walker_delta, 1) << m;
    EXPECT_EQ(rec.row("t_depth").walker_delta, m == 2 ? -3 : -1) << m;
    EXPECT_EQ(rec.row("cnot_depth").walker_delta, m == 2 ? -14 : -4) << m;
  }
}

TEST(Reconcile, ReferenceTotalsAtTenByTen) {
  const ResourceReport formula = compose_qr_cost(10, 10, Regime::kFT);
  const ReconciliationReport rec = reconcile(formula, formula, table1_reference(), 10, 10);
  EXPECT_EQ(rec.row("additional_qubits").reference_delta, 0);
  EXPECT_EQ(rec.row("uncomputed_ancillas").reference_delta, 0);
  EXPECT_EQ(rec.row("t_depth").reference_delta, 0);
  EXPECT_EQ(rec.row("cnot_count").reference_delta, 0);
  EXPECT_EQ(rec.row("t_count").reference_delta, 628 - 588);
  EXPECT_EQ(rec.row("cnot_depth").reference_delta, 258 - 323);
  EXPECT_FALSE(rec.row("single_qubit_count").reference.has_value());
  EXPECT_EQ(rec.notes.size(), 2u);
  EXPECT_THROW(rec.row("nope"), CostError);
  const nlohmann::json j = reconciliation_to_json(rec);
  EXPECT_EQ(j["rows"].size(), metric_fields().size());
}

TEST(Csv, EstimateRowOrder) {
  const ResourceReport r = compose_qr_cost(10, 10, Regime::kFT);
  EXPECT_EQ(estimate_csv_row(10, 10, r), "ft,10,10,12,34,628,32,1509,258,1509,258,0,0");
  const std::string header(kEstimateCsvHeader);
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 12);
}

}  // namespace
}  // namespace qround
