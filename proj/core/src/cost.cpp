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

#include "qround/cost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qround/blocks.hpp"

namespace qround {
namespace {

using I = std::int64_t;

I ceil_lg(I m) { return ceil_log2(static_cast<std::uint64_t>(m)); }
I floor_lg(I n) { return floor_log2(static_cast<std::uint64_t>(n)); }

// sum_{i=1}^{floor(log2 n)} floor(n / 2^i)
I halving_sum(I n) {
  if (n < 1) return 0;
  I total = 0;
  for (I i = 1; i <= floor_lg(n); ++i) total += n >> i;
  return total;
}

// ceil(1.149 * x) for x = log2(1/eps).
I synthesis_term(double scale, double log_inv_eps) {
  return static_cast<I>(std::ceil(scale * 1.149 * log_inv_eps - 1e-9));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw CostError(what);
}

}  // namespace

const std::vector<std::pair<std::string_view, I ResourceReport::*>>& metric_fields() {
  static const std::vector<std::pair<std::string_view, I ResourceReport::*>> fields{
      {"additional_qubits", &ResourceReport::additional_qubits},
      {"uncomputed_ancillas", &ResourceReport::uncomputed_ancillas},
      {"t_count", &ResourceReport::t_count},
      {"t_depth", &ResourceReport::t_depth},
      {"cnot_count", &ResourceReport::cnot_count},
      {"cnot_depth", &ResourceReport::cnot_depth},
      {"two_qubit_count", &ResourceReport::two_qubit_count},
      {"two_qubit_depth", &ResourceReport::two_qubit_depth},
      {"single_qubit_count", &ResourceReport::single_qubit_count},
      {"single_qubit_depth", &ResourceReport::single_qubit_depth}};
  return fields;
}

int floor_log2_ratio(I num, I den) {
  require(num > 0 && den > 0, "floor_log2_ratio needs a positive ratio");
  int k = 0;
  if (num >= den) {
    while ((den << (k + 1)) <= num) ++k;
  } else {
    while ((num << -k) < den) --k;
  }
  return k;
}

ResourceReport loading_cost_qr(int m, Regime regime) {
  require(m >= 2, "comparator loading needs m >= 2");
  const I L = ceil_lg(m);
  ResourceReport r;
  r.regime = regime;
  r.additional_qubits = m + 1;
  if (regime == Regime::kFT) {
    r.uncomputed_ancillas = 4 * m - L - 2;
    r.t_count = 24 * m - 8 * L - 16;
    r.t_depth = 2 * L + 5;
    r.cnot_count = 62 * m - 20 * L - 42;
    r.cnot_depth = 10 * L + 27;
    r.two_qubit_count = r.cnot_count;
    r.two_qubit_depth = r.cnot_depth;
  } else {
    r.uncomputed_ancillas = 2 * m - L - 2;
    r.two_qubit_count = 32 * m - 10 * L - 22;
    r.two_qubit_depth = 12 * L + 32;
    r.single_qubit_count = 32 * m - 10 * L - 22;
    r.single_qubit_depth = 10 * L + 27;
  }
  return r;
}

ResourceReport loading_cost_qsr(int m, Regime regime, std::optional<Rational> rotation_eps) {
  require(m >= 2, "semi-rounding loading needs m >= 2");
  ResourceReport r;
  r.regime = regime;
  r.additional_qubits = 1;
  if (regime == Regime::kFT) {
    const Rational eps = rotation_eps.value_or(pow2(-m));
    require(eps > 0 && eps < 1, "rotation accuracy must lie in (0, 1)");
    const double log_inv = std::log2(to_double(Rational(1) / eps));
    r.uncomputed_ancillas = 2 * m - 2;
    r.t_count = 36 * I{m} + 3 * I{m} * synthesis_term(1.0, log_inv) - 12;
    r.t_depth = 12 * I{m} + synthesis_term(static_cast<double>(m), log_inv) - 3;
    r.cnot_count = 20 * I{m} - 30;
    r.cnot_depth = 20 * I{m} - 30;
    r.two_qubit_count = r.cnot_count;
    r.two_qubit_depth = r.cnot_depth;
  } else {
    r.uncomputed_ancillas = 2 * m - 3;
    r.two_qubit_count = 12 * I{m} - 15;
    r.two_qubit_depth = 12 * I{m} - 15;
    r.single_qubit_count = 2 * I{m} - 2;
    r.single_qubit_depth = 2 * I{m} - 2;
  }
  return r;
}

ResourceReport ctrl_add_cost(int n, Regime regime) {
  require(n >= 2, "controlled add needs n >= 2");
  const I N = n;
  const I logs = floor_lg(N) + floor_lg(N - 1);
  const I sums = halving_sum(N) + halving_sum(N - 1);
  const I thirds = floor_log2_ratio(N, 3) + floor_log2_ratio(N - 1, 3);
  ResourceReport r;
  r.regime = regime;
  r.additional_qubits = 1;
  if (regime == Regime::kFT) {
    r.uncomputed_ancillas = 3 * N - floor_lg(N) + halving_sum(N) - 5;
    r.t_count = 34 * N - 12 * logs + 12 * sums - 12;
    r.t_depth = logs + thirds + 11;
    r.cnot_count = 77 * N - 30 * logs + 30 * sums - 29;
    r.cnot_depth = 10 * (logs + thirds) + 111;
    r.two_qubit_count = r.cnot_count;
    r.two_qubit_depth = r.cnot_depth;
  } else {
    r.uncomputed_ancillas = N - floor_lg(N) + halving_sum(N) - 1;
    r.two_qubit_count = (442 * N + 9) / 10 - 15 * logs + 15 * sums - 14;
    r.two_qubit_depth = 5 * (logs + thirds) + 56;
    r.single_qubit_count = 2 * N + 1;
    r.single_qubit_depth = 2;
  }
  return r;
}

ResourceReport compose(const ResourceReport& first, const ResourceReport& second) {
  require(first.regime == second.regime, "cannot compose reports from different regimes");
  ResourceReport r = first;
  for (const auto& [name, field] : metric_fields()) r.*field += second.*field;
  r.uncomputed_ancillas = std::max(first.uncomputed_ancillas, second.uncomputed_ancillas);
  return r;
}

ResourceReport compose_qr_cost(int n, int m, Regime regime) {
  return compose(loading_cost_qr(m, regime), ctrl_add_cost(n, regime));
}

ResourceReport compose_qsr_cost(int n, int m, Regime regime,
                                std::optional<Rational> rotation_eps) {
  return compose(loading_cost_qsr(m, regime, std::move(rotation_eps)), ctrl_add_cost(n, regime));
}

Circuit qr_loading_circuit(int m) {
  Circuit c;
  Register r = c.add_register("r", m);
  Register u = c.add_register("u", m, RegisterRole::kAdditional);
  Register flag = c.add_register("flag", 1, RegisterRole::kAdditional);
  const Circuit cmp = comparator(m);
  Register g = c.add_register("g", cmp.reg("g").size, RegisterRole::kAncilla);
  Register p = c.add_register("p", cmp.reg("p").size, RegisterRole::kAncilla);
  for (int i = 0; i < m; ++i) c.append(Gate::h(u[i]));
  std::vector<int> map;
  for (const Register* reg : {&u, &r, &flag, &g, &p}) {
    for (int q : reg->qubits()) map.push_back(q);
  }
  c.append(cmp, map);
  return c;
}

std::map<std::string, I> table1_reference() {
  return {{"additional_qubits", 12}, {"uncomputed_ancillas", 34}, {"t_count", 588},
          {"t_depth", 32},           {"cnot_count", 1509},        {"cnot_depth", 323}};
}

const MetricRow& ReconciliationReport::row(std::string_view metric) const {
  for (const auto& r : rows) {
    if (r.metric == metric) return r;
  }
  throw CostError("no metric '" + std::string(metric) + "' in reconciliation report");
}

ReconciliationReport reconcile(const ResourceReport& formula, const ResourceReport& walker,
                               const std::optional<std::map<std::string, I>>& reference, int n,
                               int m) {
  require(formula.regime == walker.regime, "reconciliation across different regimes");
  ReconciliationReport out;
  out.regime = formula.regime;
  out.n = n;
  out.m = m;
  auto rel = [](I delta, I base) {
    return base == 0 ? (delta == 0 ? 0.0 : HUGE_VAL)
                     : static_cast<double>(delta) / static_cast<double>(base);
  };
  for (const auto& [name, field] : metric_fields()) {
    MetricRow row;
    row.metric = std::string(name);
    row.formula = formula.*field;
    row.walker = walker.*field;
    row.walker_delta = row.walker - row.formula;
    row.walker_relative = rel(row.walker_delta, row.formula);
    if (reference) {
      auto it = reference->find(row.metric);
      if (it != reference->end()) {
        row.reference = it->second;
        row.reference_delta = row.formula - it->second;
        row.reference_relative = rel(*row.reference_delta, it->second);
        if (*row.reference_delta != 0) {
          out.notes.push_back(row.metric + ": formula " + std::to_string(row.formula) +
                              " vs reference " + std::to_string(it->second));
        }
      }
    }
    if (row.walker_delta != 0) {
      out.notes.push_back(row.metric + ": walker " + std::to_string(row.walker) +
                          " vs formula " + std::to_string(row.formula));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

nlohmann::json reconciliation_to_json(const ReconciliationReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json j = {{"metric", row.metric},
                        {"formula", row.formula},
                        {"walker", row.walker},
                        {"walker_delta", row.walker_delta},
                        {"walker_relative", row.walker_relative}};
    if (row.reference) {
      j["reference"] = *row.reference;
      j["reference_delta"] = *row.reference_delta;
      j["reference_relative"] = *row.reference_relative;
    }
    rows.push_back(std::move(j));
  }
  return {{"regime", std::string(to_string(r.regime))},
          {"n", r.n},
          {"m", r.m},
          {"rows", std::move(rows)},
          {"notes", r.notes}};
}

std::string estimate_csv_row(int n, int m, const ResourceReport& r) {
  std::ostringstream os;
  os << to_string(r.regime) << ',' << n << ',' << m;
  for (const auto& [name, field] : metric_fields()) os << ',' << r.*field;
  return os.str();
}

}  // namespace qround
