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

#include "qround/circuit_json.hpp"

#include <string>

namespace qround {

using nlohmann::json;

Rational rational_from_string(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
    Integer num(std::string(s.substr(0, slash)));
    Integer den(std::string(s.substr(slash + 1)));
    if (den == 0) throw CircuitError("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw CircuitError("malformed rational '" + std::string(s) + "'");
  }
}

json circuit_to_json(const Circuit& c) {
  json regs = json::array();
  for (const auto& r : c.registers()) {
    regs.push_back({{"name", r.name},
                    {"start", r.start},
                    {"size", r.size},
                    {"role", std::string(to_string(r.role))}});
  }
  json gates = json::array();
  for (const auto& g : c.gates()) {
    json jg = {{"kind", std::string(to_string(g.kind))}, {"operands", g.qubits}};
    if (g.angle) {
      jg["angle"] = {
          {"kind", g.angle->kind == Angle::Kind::kPiMultiple ? "pi" : "asin_sqrt"},
          {"coeff", to_string(g.angle->coeff)},
          {"negated", g.angle->negated}};
    }
    if (g.cbit >= 0) jg["cbit"] = g.cbit;
    if (g.kind == GateKind::kMacro) {
      jg["name"] = g.name;
      jg["params"] = g.params;
    }
    gates.push_back(std::move(jg));
  }
  return {{"version", kCircuitSchemaVersion},
          {"qubits", c.num_qubits()},
          {"clbits", c.num_clbits()},
          {"registers", std::move(regs)},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  try {
    if (j.at("version").get<int>() != kCircuitSchemaVersion) {
      throw CircuitError("unsupported circuit schema version");
    }
    Circuit c;
    for (const auto& r : j.at("registers")) {
      Register made = c.add_register(
          r.at("name").get<std::string>(), r.at("size").get<int>(),
          register_role_from_string(r.at("role").get<std::string>()));
      if (made.start != r.at("start").get<int>()) {
        throw CircuitError("register layout is not contiguous");
      }
    }
    if (c.num_qubits() != j.at("qubits").get<int>()) {
      throw CircuitError("qubit count does not match registers");
    }
    const int clbits = j.at("clbits").get<int>();
    for (int i = 0; i < clbits; ++i) c.add_clbit();
    for (const auto& jg : j.at("gates")) {
      Gate g;
      g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
      g.qubits = jg.at("operands").get<std::vector<int>>();
      if (jg.contains("angle")) {
        const auto& ja = jg["angle"];
        Angle a;
        a.kind = ja.at("kind").get<std::string>() == "pi" ? Angle::Kind::kPiMultiple
                                                          : Angle::Kind::kAsinSqrt;
        a.coeff = rational_from_string(ja.at("coeff").get<std::string>());
        a.negated = ja.at("negated").get<bool>();
        g.angle = a;
      }
      if (jg.contains("cbit")) g.cbit = jg["cbit"].get<int>();
      if (g.kind == GateKind::kMacro) {
        g.name = jg.at("name").get<std::string>();
        g.params = jg.at("params").get<std::map<std::string, std::int64_t>>();
      }
      c.append(std::move(g));
    }
    return c;
  } catch (const json::exception& e) {
    throw CircuitError(std::string("malformed circuit json: ") + e.what());
  }
}

json report_to_json(const ResourceReport& r) {
  json j = {{"regime", std::string(to_string(r.regime))},
            {"additional_qubits", r.additional_qubits},
            {"uncomputed_ancillas", r.uncomputed_ancillas},
            {"two_qubit_count", r.two_qubit_count},
            {"two_qubit_depth", r.two_qubit_depth},
            {"single_qubit_count", r.single_qubit_count},
            {"single_qubit_depth", r.single_qubit_depth}};
  if (r.regime == Regime::kFT) {
    j["t_count"] = r.t_count;
    j["t_depth"] = r.t_depth;
    j["cnot_count"] = r.cnot_count;
    j["cnot_depth"] = r.cnot_depth;
  }
  return j;
}

}  // namespace qround
