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

#include "qround/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

namespace qround {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 12> kGateNames{{
    {GateKind::kX, "x"},
    {GateKind::kH, "h"},
    {GateKind::kCNOT, "cnot"},
    {GateKind::kToffoli, "toffoli"},
    {GateKind::kSWAP, "swap"},
    {GateKind::kCSWAP, "cswap"},
    {GateKind::kRY, "ry"},
    {GateKind::kCRY, "cry"},
    {GateKind::kRegisterRY, "register_ry"},
    {GateKind::kMeasureZ, "measure_z"},
    {GateKind::kConditionalReset, "conditional_reset"},
    {GateKind::kMacro, "macro"},
}};

std::size_t expected_arity(GateKind k) {
  switch (k) {
    case GateKind::kX:
    case GateKind::kH:
    case GateKind::kRY:
    case GateKind::kMeasureZ:
    case GateKind::kConditionalReset:
      return 1;
    case GateKind::kCNOT:
    case GateKind::kSWAP:
    case GateKind::kCRY:
      return 2;
    case GateKind::kToffoli:
    case GateKind::kCSWAP:
      return 3;
    case GateKind::kRegisterRY:
    case GateKind::kMacro:
      return 0;  // variable
  }
  return 0;
}

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kGateNames) {
    if (n == name) return k;
  }
  throw CircuitError("unknown gate kind '" + std::string(name) + "'");
}

std::string_view to_string(RegisterRole role) {
  switch (role) {
    case RegisterRole::kData:
      return "data";
    case RegisterRole::kAdditional:
      return "additional";
    case RegisterRole::kAncilla:
      return "ancilla";
  }
  return "?";
}

RegisterRole register_role_from_string(std::string_view name) {
  if (name == "data") return RegisterRole::kData;
  if (name == "additional") return RegisterRole::kAdditional;
  if (name == "ancilla") return RegisterRole::kAncilla;
  throw CircuitError("unknown register role '" + std::string(name) + "'");
}

std::string_view to_string(Regime r) { return r == Regime::kFT ? "ft" : "nisq"; }

Regime regime_from_string(std::string_view s) {
  if (s == "ft" || s == "FT") return Regime::kFT;
  if (s == "nisq" || s == "NISQ") return Regime::kNISQ;
  throw CircuitError("unknown regime '" + std::string(s) + "'");
}

double Angle::radians() const {
  double v = 0.0;
  if (kind == Kind::kPiMultiple) {
    v = to_double(coeff) * std::numbers::pi;
  } else {
    v = 2.0 * std::asin(std::sqrt(std::clamp(to_double(coeff), 0.0, 1.0)));
  }
  return negated ? -v : v;
}

Gate Gate::register_ry(std::vector<int> controls, int target) {
  Gate g = make(GateKind::kRegisterRY, std::move(controls));
  g.qubits.push_back(target);
  return g;
}

Gate Gate::measure(int q, int cbit) {
  Gate g = make(GateKind::kMeasureZ, {q});
  g.cbit = cbit;
  return g;
}

Gate Gate::conditional_reset(int q, int cbit) {
  Gate g = make(GateKind::kConditionalReset, {q});
  g.cbit = cbit;
  return g;
}

Gate Gate::macro(std::string name, std::vector<int> qubits,
                 std::map<std::string, std::int64_t> params) {
  Gate g = make(GateKind::kMacro, std::move(qubits));
  g.name = std::move(name);
  g.params = std::move(params);
  return g;
}

bool Gate::is_classical_reversible() const {
  switch (kind) {
    case GateKind::kX:
    case GateKind::kCNOT:
    case GateKind::kToffoli:
    case GateKind::kSWAP:
    case GateKind::kCSWAP:
      return true;
    default:
      return false;
  }
}

std::vector<int> Register::qubits() const {
  std::vector<int> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = start + i;
  return out;
}

Register Circuit::add_register(std::string name, int size, RegisterRole role) {
  if (size < 0) throw CircuitError("negative register size");
  if (has_register(name)) throw CircuitError("duplicate register '" + name + "'");
  Register r{std::move(name), num_qubits_, size, role};
  num_qubits_ += size;
  registers_.push_back(r);
  return r;
}

bool Circuit::has_register(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const Register& Circuit::reg(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw CircuitError("no register named '" + std::string(name) + "'");
}

void Circuit::check(const Gate& g) const {
  std::size_t arity = expected_arity(g.kind);
  if (arity != 0 && g.qubits.size() != arity) {
    throw CircuitError(std::string(to_string(g.kind)) + " expects " +
                       std::to_string(arity) + " operands");
  }
  if (g.qubits.empty()) throw CircuitError("gate without operands");
  std::set<int> seen;
  for (int q : g.qubits) {
    if (q < 0 || q >= num_qubits_) {
      throw CircuitError("operand " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + " qubits");
    }
    if (!seen.insert(q).second) {
      throw CircuitError("repeated operand " + std::to_string(q) + " in " +
                         std::string(to_string(g.kind)));
    }
  }
  if (g.is_measurement() && (g.cbit < 0 || g.cbit >= num_clbits_)) {
    throw CircuitError("classical bit out of range");
  }
  if ((g.kind == GateKind::kRY || g.kind == GateKind::kCRY) && !g.angle) {
    throw CircuitError("rotation without angle");
  }
}

void Circuit::append(Gate g) {
  check(g);
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& sub, std::span<const int> qubit_map) {
  if (qubit_map.size() != static_cast<std::size_t>(sub.num_qubits())) {
    throw CircuitError("qubit map size does not match sub-circuit width");
  }
  const int clbit_base = num_clbits_;
  num_clbits_ += sub.num_clbits();
  for (Gate g : sub.gates()) {
    for (int& q : g.qubits) q = qubit_map[static_cast<std::size_t>(q)];
    if (g.cbit >= 0) g.cbit += clbit_base;
    append(std::move(g));
  }
}

Circuit Circuit::inverse() const {
  Circuit out = skeleton();
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    if (it->is_measurement()) {
      throw CircuitError("cannot invert a circuit with measurements");
    }
    if (it->kind == GateKind::kRegisterRY) {
      throw CircuitError("register rotations have no stored inverse");
    }
    Gate g = *it;
    if (g.angle) g.angle = g.angle->inverse();
    out.gates_.push_back(std::move(g));
  }
  return out;
}

Circuit Circuit::skeleton() const {
  Circuit out;
  out.num_qubits_ = num_qubits_;
  out.num_clbits_ = num_clbits_;
  out.registers_ = registers_;
  return out;
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
  Circuit out = skeleton();
  for (auto& g : gates) out.append(std::move(g));
  return out;
}

const MacroExpander* MacroTable::find(const std::string& name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

namespace {

void lower(const Gate& g, const MacroTable& macros, std::vector<Gate>& out,
           int depth) {
  if (depth > 64) throw CircuitError("macro expansion does not terminate");
  switch (g.kind) {
    case GateKind::kSWAP: {
      const int a = g.qubits[0], b = g.qubits[1];
      out.push_back(Gate::cnot(a, b));
      out.push_back(Gate::cnot(b, a));
      out.push_back(Gate::cnot(a, b));
      return;
    }
    case GateKind::kCSWAP: {
      // CNOT(b->a), Toffoli(c, a -> b), CNOT(b->a).
      const int c = g.qubits[0], a = g.qubits[1], b = g.qubits[2];
      out.push_back(Gate::cnot(b, a));
      out.push_back(Gate::toffoli(c, a, b));
      out.push_back(Gate::cnot(b, a));
      return;
    }
    case GateKind::kMacro: {
      const MacroExpander* fn = macros.find(g.name);
      if (fn == nullptr) throw CircuitError("unknown macro '" + g.name + "'");
      for (const Gate& sub : (*fn)(g)) lower(sub, macros, out, depth + 1);
      return;
    }
    default:
      out.push_back(g);
  }
}

}  // namespace

Circuit expand(const Circuit& c, Regime /*regime*/, const MacroTable& macros) {
  std::vector<Gate> gates;
  gates.reserve(c.gates().size());
  for (const Gate& g : c.gates()) lower(g, macros, gates, 0);
  return c.with_gates(std::move(gates));
}

Circuit expand(const Circuit& c, Regime regime) {
  return expand(c, regime, standard_macros());
}

const CostModel& CostModel::standard() {
  static const CostModel model{};
  return model;
}

std::int64_t rotation_t_cost(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw CircuitError("rotation precision must be in (0, 1)");
  const double bits = -std::log2(to_double(eps));
  // Guard against 1.149*k + 9.2 landing a hair above an integer.
  return static_cast<std::int64_t>(std::ceil(1.149 * bits + 9.2 - 1e-9));
}

namespace {

enum ClassIndex { kT = 0, kCnot = 1, kTwo = 2, kSingle = 3, kNumClasses = 4 };

struct Charge {
  std::array<std::int64_t, kNumClasses> count{};
  std::array<std::int64_t, kNumClasses> depth{};
  std::int64_t ancillas = 0;
};

Charge charge_of(GateKind kind, Regime regime, std::int64_t rot_t,
                 const CostModel& m) {
  Charge ch;
  auto set = [&](int cls, std::int64_t n, std::int64_t d) {
    ch.count[cls] = n;
    ch.depth[cls] = d;
  };
  const bool ft = regime == Regime::kFT;
  switch (kind) {
    case GateKind::kX:
    case GateKind::kH:
      set(kSingle, 1, 1);
      break;
    case GateKind::kRY:
      set(kSingle, 1, 1);
      if (ft) set(kT, rot_t, rot_t);
      break;
    case GateKind::kCNOT:
      set(kTwo, 1, 1);
      if (ft) set(kCnot, 1, 1);
      break;
    case GateKind::kToffoli:
      if (ft) {
        set(kT, m.toffoli_t_count, m.toffoli_t_depth);
        set(kCnot, m.toffoli_cnot_count, m.toffoli_cnot_depth);
        set(kTwo, m.toffoli_cnot_count, m.toffoli_cnot_depth);
        ch.ancillas = m.toffoli_ancillas;
      } else {
        set(kTwo, m.nisq_toffoli_two_qubit, m.nisq_toffoli_two_qubit);
      }
      break;
    case GateKind::kCRY:
      if (ft) {
        set(kT, 3 * rot_t, rot_t);
        set(kCnot, m.cry_cnot_count, m.cry_cnot_depth);
        set(kTwo, m.cry_cnot_count, m.cry_cnot_depth);
        ch.ancillas = m.cry_ancillas;
      } else {
        set(kTwo, 1, 1);
      }
      break;
    case GateKind::kMeasureZ:
    case GateKind::kConditionalReset:
      break;
    case GateKind::kSWAP:
    case GateKind::kCSWAP:
    case GateKind::kMacro:
    case GateKind::kRegisterRY:
      throw CircuitError("gate must be lowered before counting");
  }
  return ch;
}

bool uses_rotation(const Gate& g) {
  return g.kind == GateKind::kRY || g.kind == GateKind::kCRY ||
         g.kind == GateKind::kRegisterRY;
}

// A gate as seen by the walker: the cost-unit kind and its wires.
struct Unit {
  GateKind kind;
  std::vector<int> wires;  // qubits, then num_qubits + cbit
};

template <class Fn>
void for_each_unit(const Circuit& c, Fn&& fn) {
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::kSWAP || g.kind == GateKind::kCSWAP ||
        g.kind == GateKind::kMacro) {
      throw CircuitError("circuit must be expanded before counting (found " +
                         std::string(to_string(g.kind)) + ")");
    }
    if (g.kind == GateKind::kRegisterRY) {
      // Bitwise controlled rotations, one per control qubit.
      const int t = g.qubits.back();
      for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) {
        fn(Unit{GateKind::kCRY, {g.qubits[i], t}});
      }
      continue;
    }
    Unit u{g.kind, g.qubits};
    if (g.cbit >= 0) u.wires.push_back(c.num_qubits() + g.cbit);
    fn(u);
  }
}

}  // namespace

ResourceReport count_resources(const Circuit& c, Regime regime,
                               std::optional<Rational> rotation_eps,
                               const CostModel& model) {
  std::int64_t rot_t = 0;
  const bool has_rotations =
      std::any_of(c.gates().begin(), c.gates().end(), uses_rotation);
  if (has_rotations && regime == Regime::kFT) {
    if (!rotation_eps) {
      throw CircuitError("rotation precision is required to cost rotations");
    }
    rot_t = rotation_t_cost(*rotation_eps);
  }

  const std::size_t wires =
      static_cast<std::size_t>(c.num_qubits() + c.num_clbits());
  std::array<std::vector<std::int64_t>, kNumClasses> ready;
  for (auto& r : ready) r.assign(wires, 0);
  std::vector<std::int64_t> unit_ready(wires, 0);
  std::vector<std::int64_t> layer_ancillas;

  std::array<std::int64_t, kNumClasses> count{};
  std::array<std::int64_t, kNumClasses> depth{};

  for_each_unit(c, [&](const Unit& u) {
    const Charge ch = charge_of(u.kind, regime, rot_t, model);
    for (int k = 0; k < kNumClasses; ++k) {
      count[k] += ch.count[k];
      std::int64_t start = 0;
      for (int w : u.wires) start = std::max(start, ready[k][w]);
      const std::int64_t end = start + ch.depth[k];
      for (int w : u.wires) ready[k][w] = end;
      depth[k] = std::max(depth[k], end);
    }
    // Unit-depth layering for the concurrent ancilla peak.
    std::int64_t layer = 0;
    for (int w : u.wires) layer = std::max(layer, unit_ready[w]);
    for (int w : u.wires) unit_ready[w] = layer + 1;
    if (static_cast<std::size_t>(layer) >= layer_ancillas.size()) {
      layer_ancillas.resize(static_cast<std::size_t>(layer) + 1, 0);
    }
    layer_ancillas[static_cast<std::size_t>(layer)] += ch.ancillas;
  });

  ResourceReport rep;
  rep.regime = regime;
  for (const auto& r : c.registers()) {
    if (r.role == RegisterRole::kAdditional) rep.additional_qubits += r.size;
    if (r.role == RegisterRole::kAncilla) rep.uncomputed_ancillas += r.size;
  }
  if (!layer_ancillas.empty()) {
    rep.uncomputed_ancillas +=
        *std::max_element(layer_ancillas.begin(), layer_ancillas.end());
  }
  rep.t_count = count[kT];
  rep.t_depth = depth[kT];
  rep.cnot_count = count[kCnot];
  rep.cnot_depth = depth[kCnot];
  rep.two_qubit_count = count[kTwo];
  rep.two_qubit_depth = depth[kTwo];
  rep.single_qubit_count = count[kSingle];
  rep.single_qubit_depth = depth[kSingle];
  return rep;
}

std::int64_t count_by_class(const Circuit& c, GateClass cls, Regime regime,
                            std::optional<Rational> rotation_eps) {
  if (cls == GateClass::kAny) {
    std::int64_t n = 0;
    for_each_unit(c, [&](const Unit& u) {
      if (u.kind != GateKind::kMeasureZ && u.kind != GateKind::kConditionalReset) ++n;
    });
    return n;
  }
  const ResourceReport r = count_resources(c, regime, rotation_eps);
  switch (cls) {
    case GateClass::kT:
      return r.t_count;
    case GateClass::kCNOT:
      return r.cnot_count;
    case GateClass::kTwoQubit:
      return r.two_qubit_count;
    case GateClass::kSingleQubit:
      return r.single_qubit_count;
    case GateClass::kAny:
      break;
  }
  return 0;
}

std::int64_t depth_by_class(const Circuit& c, GateClass cls, Regime regime,
                            std::optional<Rational> rotation_eps) {
  if (cls == GateClass::kAny) return static_cast<std::int64_t>(layers(c).size());
  const ResourceReport r = count_resources(c, regime, rotation_eps);
  switch (cls) {
    case GateClass::kT:
      return r.t_depth;
    case GateClass::kCNOT:
      return r.cnot_depth;
    case GateClass::kTwoQubit:
      return r.two_qubit_depth;
    case GateClass::kSingleQubit:
      return r.single_qubit_depth;
    case GateClass::kAny:
      break;
  }
  return 0;
}

std::vector<std::vector<std::size_t>> layers(const Circuit& c) {
  std::vector<std::size_t> ready(
      static_cast<std::size_t>(c.num_qubits() + c.num_clbits()), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const Gate& g = c.gates()[i];
    std::vector<int> wires = g.qubits;
    if (g.cbit >= 0) wires.push_back(c.num_qubits() + g.cbit);
    std::size_t layer = 0;
    for (int w : wires) layer = std::max(layer, ready[static_cast<std::size_t>(w)]);
    for (int w : wires) ready[static_cast<std::size_t>(w)] = layer + 1;
    if (layer >= out.size()) out.resize(layer + 1);
    out[layer].push_back(i);
  }
  return out;
}

std::int64_t count_kind(const Circuit& c, GateKind kind) {
  return std::count_if(c.gates().begin(), c.gates().end(),
                       [&](const Gate& g) { return g.kind == kind; });
}

}  // namespace qround
