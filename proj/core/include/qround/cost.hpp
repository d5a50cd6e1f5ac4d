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
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qround/circuit.hpp"

namespace qround {

class CostError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CostRegime {
  Regime regime = Regime::kFT;
  /// Synthesis accuracy for rotations; 2^-m when unset.
  std::optional<Rational> rotation_eps;
};

/// Field name and member pointer for every ResourceReport metric, in CSV
/// order.
const std::vector<std::pair<std::string_view, std::int64_t ResourceReport::*>>& metric_fields();

/// floor(log2(num/den)) for a positive rational; negative below 1.
int floor_log2_ratio(std::int64_t num, std::int64_t den);

/// Loading the remainder into the flag amplitude with the comparator
/// (m >= 2).
ResourceReport loading_cost_qr(int m, Regime regime);

/// Loading for semi-rounding; rotation_eps defaults to 2^-m.
ResourceReport loading_cost_qsr(int m, Regime regime,
                                std::optional<Rational> rotation_eps = std::nullopt);

/// Controlled +1 on an n-qubit register (n >= 2).
ResourceReport ctrl_add_cost(int n, Regime regime);

/// Sequential composition: counts, depths and additional qubits add;
/// uncomputed ancillas are reused, so they combine by max.
ResourceReport compose(const ResourceReport& first, const ResourceReport& second);

/// loading_cost_qr(m) then ctrl_add_cost(n).
ResourceReport compose_qr_cost(int n, int m, Regime regime);
/// loading_cost_qsr(m) then ctrl_add_cost(n).
ResourceReport compose_qsr_cost(int n, int m, Regime regime,
                                std::optional<Rational> rotation_eps = std::nullopt);

/// H on a uniform register followed by comparator(uniform, remainder, flag),
/// macros expanded. Registers "r" (data), "u" and "flag" (additional),
/// "g" and "p" (ancilla).
Circuit qr_loading_circuit(int m);

/// Reference whole-circuit values for n = m = 10, fault tolerant.
std::map<std::string, std::int64_t> table1_reference();

struct MetricRow {
  std::string metric;
  std::int64_t formula = 0;
  std::int64_t walker = 0;
  std::optional<std::int64_t> reference;
  std::int64_t walker_delta = 0;  // walker - formula
  double walker_relative = 0;
  std::optional<std::int64_t> reference_delta;  // formula - reference
  std::optional<double> reference_relative;
};

struct ReconciliationReport {
  Regime regime = Regime::kFT;
  int n = 0;
  int m = 0;
  std::vector<MetricRow> rows;
  std::vector<std::string> notes;

  const MetricRow& row(std::string_view metric) const;
};

/// Per-metric comparison. Throws if the regimes differ.
ReconciliationReport reconcile(const ResourceReport& formula, const ResourceReport& walker,
                               const std::optional<std::map<std::string, std::int64_t>>& reference,
                               int n = 0, int m = 0);

nlohmann::json reconciliation_to_json(const ReconciliationReport& r);

inline constexpr std::string_view kEstimateCsvHeader =
    "regime,n,m,qubits,ancillas,t_count,t_depth,cnot_count,cnot_depth,two_qubit_count,"
    "two_qubit_depth,single_qubit_count,single_qubit_depth";

/// One data row matching kEstimateCsvHeader.
std::string estimate_csv_row(int n, int m, const ResourceReport& r);

}  // namespace qround
