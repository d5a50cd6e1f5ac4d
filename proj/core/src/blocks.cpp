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

#include "qround/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace qround {
namespace {

// Qubit layout of one carry-lookahead adder of width w.
struct LookaheadLayout {
  int w = 0;
  std::vector<int> b;         // propagate bits P_0[i] live in b[i]
  std::vector<int> z;         // z[i] for 1 <= i <= w; z[0] unused
  std::vector<int> p;         // P_t[m] for t >= 1, m >= 1
  std::vector<int> p_offset;  // start of round t in p

  int P(int t, int m) const {
    if (t == 0) return b[static_cast<std::size_t>(m)];
    return p[static_cast<std::size_t>(p_offset[static_cast<std::size_t>(t)] + m - 1)];
  }
  int Z(int i) const { return z[static_cast<std::size_t>(i)]; }
};

int propagate_ancillas(int w) {
  int total = 0;
  for (int t = 1; t <= floor_log2(static_cast<std::uint64_t>(std::max(w, 1))) - 1; ++t) {
    total += std::max(0, (w >> t) - 1);
  }
  return total;
}

std::vector<int> propagate_offsets(int w) {
  std::vector<int> off(static_cast<std::size_t>(std::max(2, w + 1)), 0);
  int acc = 0;
  for (int t = 1; t < static_cast<int>(off.size()); ++t) {
    off[static_cast<std::size_t>(t)] = acc;
    acc += std::max(0, (w >> t) - 1);
  }
  return off;
}

// Computes z[i] = carry into position i for 1 <= i <= w, given
// z[i+1] = g_i and b[i] = p_i on entry. Propagate ancillas end clean.
void carry_lookahead(const LookaheadLayout& L, int w, std::vector<Gate>& out) {
  if (w < 2) return;
  const int lg = floor_log2(static_cast<std::uint64_t>(w));
  auto p_rounds = [&]() {
    for (int t = 1; t <= lg - 1; ++t) {
      for (int m = 1; m < (w >> t); ++m) {
        out.push_back(Gate::toffoli(L.P(t - 1, 2 * m), L.P(t - 1, 2 * m + 1), L.P(t, m)));
      }
    }
  };
  p_rounds();
  for (int t = 1; t <= lg; ++t) {  // G-rounds
    for (int m = 0; m < (w >> t); ++m) {
      out.push_back(Gate::toffoli(L.Z((m << t) + (1 << (t - 1))), L.P(t - 1, 2 * m + 1),
                                  L.Z((m << t) + (1 << t))));
    }
  }
  const int two_thirds = (2 * w) / 3;
  if (two_thirds >= 1) {
    for (int t = floor_log2(static_cast<std::uint64_t>(two_thirds)); t >= 1; --t) {  // C-rounds
      for (int m = 1; m <= ((w - (1 << (t - 1))) >> t); ++m) {
        out.push_back(Gate::toffoli(L.Z(m << t), L.P(t - 1, 2 * m),
                                    L.Z((m << t) + (1 << (t - 1)))));
      }
    }
  }
  for (int t = lg - 1; t >= 1; --t) {  // P^-1 rounds
    for (int m = 1; m < (w >> t); ++m) {
      out.push_back(Gate::toffoli(L.P(t - 1, 2 * m), L.P(t - 1, 2 * m + 1), L.P(t, m)));
    }
  }
}

// In-place sum of a[0..w) into b[0..w); the top carry is XORed into
// z[w], which is never read.
void inplace_adder(const std::vector<int>& a, const LookaheadLayout& L,
                   std::vector<Gate>& out) {
  const int w = L.w;
  const auto& b = L.b;
  auto at = [](const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; };
  for (int i = 0; i < w; ++i) out.push_back(Gate::toffoli(at(a, i), at(b, i), L.Z(i + 1)));
  for (int i = 0; i < w; ++i) out.push_back(Gate::cnot(at(a, i), at(b, i)));
  carry_lookahead(L, w, out);
  for (int i = 1; i < w; ++i) out.push_back(Gate::cnot(L.Z(i), at(b, i)));
  // Uncompute z[1..w-1] from the complemented sum, which has the same
  // low carries.
  for (int i = 0; i < w - 1; ++i) out.push_back(Gate::x(at(b, i)));
  for (int i = 1; i < w - 1; ++i) out.push_back(Gate::cnot(at(a, i), at(b, i)));
  std::vector<Gate> sub;
  carry_lookahead(L, w - 1, sub);
  out.insert(out.end(), sub.rbegin(), sub.rend());
  for (int i = 1; i < w - 1; ++i) out.push_back(Gate::cnot(at(a, i), at(b, i)));
  for (int i = 0; i < w - 1; ++i) out.push_back(Gate::toffoli(at(a, i), at(b, i), L.Z(i + 1)));
  for (int i = 0; i < w - 1; ++i) out.push_back(Gate::x(at(b, i)));
}

std::vector<int> control_positions(const Gate& g) {
  switch (g.kind) {
    case GateKind::kCNOT:
    case GateKind::kCSWAP:
    case GateKind::kCRY:
      return {0};
    case GateKind::kToffoli:
      return {0, 1};
    case GateKind::kRegisterRY: {
      std::vector<int> out;
      for (std::size_t i = 0; i + 1 < g.qubits.size(); ++i) out.push_back(static_cast<int>(i));
      return out;
    }
    default:
      return {};
  }
}

bool self_inverse(GateKind k) {
  return k == GateKind::kX || k == GateKind::kCNOT || k == GateKind::kToffoli ||
         k == GateKind::kSWAP || k == GateKind::kCSWAP;
}

// Equality up to the symmetric operand slots.
bool same_gate(const Gate& x, const Gate& y) {
  if (x.kind != y.kind || x.qubits.size() != y.qubits.size()) return false;
  const auto& p = x.qubits;
  const auto& q = y.qubits;
  switch (x.kind) {
    case GateKind::kToffoli:
      return p[2] == q[2] && ((p[0] == q[0] && p[1] == q[1]) || (p[0] == q[1] && p[1] == q[0]));
    case GateKind::kSWAP:
      return (p[0] == q[0] && p[1] == q[1]) || (p[0] == q[1] && p[1] == q[0]);
    case GateKind::kCSWAP:
      return p[0] == q[0] && ((p[1] == q[1] && p[2] == q[2]) || (p[1] == q[2] && p[2] == q[1]));
    default:
      return p == q;
  }
}

}  // namespace

Circuit add_registers(const AdderSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw CircuitError("adder width must be >= 1");
  const int w = spec.carry_out ? n : n - 1;
  Circuit c;
  Register a = c.add_register("a", n);
  Register b = c.add_register("b", n);
  Register z = c.add_register("z", std::max(w - 1, 0), RegisterRole::kAncilla);
  Register p = c.add_register("p", propagate_ancillas(w), RegisterRole::kAncilla);
  std::optional<Register> carry;
  if (spec.carry_out) carry = c.add_register("carry", 1, RegisterRole::kAdditional);

  LookaheadLayout L;
  L.w = w;
  for (int i = 0; i < w; ++i) L.b.push_back(b[i]);
  L.z.push_back(-1);
  for (int i = 1; i < w; ++i) L.z.push_back(z[i - 1]);
  if (w >= 1) L.z.push_back(spec.carry_out ? (*carry)[0] : b[n - 1]);
  L.p = p.qubits();
  L.p_offset = propagate_offsets(w);

  std::vector<Gate> gates;
  std::vector<int> aq = a.qubits();
  if (w >= 1) inplace_adder(aq, L, gates);
  if (!spec.carry_out) gates.push_back(Gate::cnot(a[n - 1], b[n - 1]));
  for (auto& g : gates) c.append(std::move(g));
  return c;
}

Circuit cancel_adjacent_pairs(const Circuit& c) {
  std::vector<Gate> current = c.gates();
  const std::size_t wires = static_cast<std::size_t>(c.num_qubits() + c.num_clbits());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> alive(current.size(), 1);
    std::vector<std::vector<std::size_t>> stack(wires);
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Gate& g = current[i];
      std::vector<int> w = g.qubits;
      if (g.cbit >= 0) w.push_back(c.num_qubits() + g.cbit);
      if (self_inverse(g.kind)) {
        const auto& s0 = stack[static_cast<std::size_t>(w[0])];
        if (!s0.empty()) {
          const std::size_t j = s0.back();
          const bool adjacent = std::all_of(w.begin(), w.end(), [&](int q) {
            const auto& s = stack[static_cast<std::size_t>(q)];
            return !s.empty() && s.back() == j;
          });
          if (adjacent && same_gate(current[j], g)) {
            alive[j] = 0;
            alive[i] = 0;
            for (int q : w) stack[static_cast<std::size_t>(q)].pop_back();
            changed = true;
            continue;
          }
        }
      }
      for (int q : w) stack[static_cast<std::size_t>(q)].push_back(i);
    }
    std::vector<Gate> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (alive[i]) next.push_back(std::move(current[i]));
    }
    current = std::move(next);
  }
  return c.with_gates(std::move(current));
}

Circuit reduce_to_add_constant(const Circuit& adder, std::uint64_t c) {
  for (const char* name : {"a", "b", "z", "p"}) {
    if (!adder.has_register(name)) {
      throw CircuitError(std::string("adder circuit lacks register '") + name + "'");
    }
  }
  const Register& a = adder.reg("a");
  if (a.size < 64 && (c >> a.size) != 0) {
    throw CircuitError("constant " + std::to_string(c) + " does not fit in " +
                       std::to_string(a.size) + " bits");
  }
  // -1: not an a-qubit; otherwise the constant's bit.
  std::vector<int> const_bit(static_cast<std::size_t>(adder.num_qubits()), -1);
  for (int i = 0; i < a.size; ++i) {
    const_bit[static_cast<std::size_t>(a[i])] = static_cast<int>((c >> i) & 1);
  }
  auto controls = [](const Gate& g) {
    std::vector<int> out;
    for (int pos : control_positions(g)) out.push_back(g.qubits[static_cast<std::size_t>(pos)]);
    return out;
  };

  // Gates controlled on zero bits of the constant.
  std::vector<Gate> step;
  for (const Gate& g : adder.gates()) {
    const auto ctl = controls(g);
    if (std::any_of(ctl.begin(), ctl.end(),
                    [&](int q) { return const_bit[static_cast<std::size_t>(q)] == 0; })) {
      continue;
    }
    step.push_back(g);
  }

  // Gates controlled on ancillas nothing has written yet.
  std::vector<char> still_zero(static_cast<std::size_t>(adder.num_qubits()), 0);
  for (const auto& r : adder.registers()) {
    if (r.role != RegisterRole::kData) {
      for (int q : r.qubits()) still_zero[static_cast<std::size_t>(q)] = 1;
    }
  }
  std::vector<Gate> kept;
  for (const Gate& g : step) {
    const auto ctl = controls(g);
    if (std::any_of(ctl.begin(), ctl.end(),
                    [&](int q) { return still_zero[static_cast<std::size_t>(q)] != 0; })) {
      continue;
    }
    for (int q : g.qubits) {
      if (std::find(ctl.begin(), ctl.end(), q) == ctl.end()) {
        still_zero[static_cast<std::size_t>(q)] = 0;
      }
    }
    kept.push_back(g);
  }

  Circuit cancelled = cancel_adjacent_pairs(adder.with_gates(std::move(kept)));

  // Controls fixed at |1> disappear.
  std::vector<Gate> simplified;
  for (const Gate& g : cancelled.gates()) {
    const auto pos = control_positions(g);
    std::vector<int> live_controls;
    bool dropped = false;
    for (int p : pos) {
      int q = g.qubits[static_cast<std::size_t>(p)];
      if (const_bit[static_cast<std::size_t>(q)] == 1) {
        dropped = true;
      } else {
        live_controls.push_back(q);
      }
    }
    if (!dropped) {
      simplified.push_back(g);
      continue;
    }
    if (g.kind == GateKind::kCSWAP) {
      simplified.push_back(Gate::swap(g.qubits[1], g.qubits[2]));
    } else if (g.kind == GateKind::kToffoli || g.kind == GateKind::kCNOT) {
      const int t = g.target();
      if (live_controls.empty()) {
        simplified.push_back(Gate::x(t));
      } else {
        simplified.push_back(Gate::cnot(live_controls[0], t));
      }
    } else {
      throw CircuitError("cannot specialize gate " + std::string(to_string(g.kind)));
    }
  }

  // Drop the constant register and renumber.
  Circuit out;
  std::vector<int> remap(static_cast<std::size_t>(adder.num_qubits()), -1);
  for (const auto& r : adder.registers()) {
    if (r.name == "a") continue;
    Register nr = out.add_register(r.name, r.size, r.role);
    for (int i = 0; i < r.size; ++i) remap[static_cast<std::size_t>(r[i])] = nr[i];
  }
  for (int i = 0; i < adder.num_clbits(); ++i) out.add_clbit();
  for (Gate g : simplified) {
    for (int& q : g.qubits) {
      q = remap[static_cast<std::size_t>(q)];
      if (q < 0) throw CircuitError("constant register still referenced after reduction");
    }
    out.append(std::move(g));
  }
  return cancel_adjacent_pairs(out);
}

Circuit add_constant(int n, std::uint64_t c) {
  return reduce_to_add_constant(add_registers(n), c);
}

Circuit make_controlled(const Circuit& body, const std::string& target_register) {
  for (const Gate& g : body.gates()) {
    if (!g.is_classical_reversible()) {
      throw CircuitError("make_controlled needs a classical reversible body, found " +
                         std::string(to_string(g.kind)));
    }
  }
  const Register& target = body.reg(target_register);

  // Image of the all-zero input; it must live on the target register.
  std::vector<std::uint8_t> zero_image =
      simulate_classical(body, std::vector<std::uint8_t>(static_cast<std::size_t>(body.num_qubits()), 0));
  std::vector<int> pattern;
  for (int q = 0; q < body.num_qubits(); ++q) {
    if (!zero_image[static_cast<std::size_t>(q)]) continue;
    if (q < target.start || q >= target.start + target.size) {
      throw CircuitError("body writes qubit " + std::to_string(q) +
                         " outside the target register on zero input");
    }
    pattern.push_back(q - target.start);
  }

  Circuit c;
  for (const auto& r : body.registers()) c.add_register(r.name, r.size, r.role);
  Register ctrl = c.add_register("ctrl", 1, RegisterRole::kAdditional);
  Register park = c.add_register("park", target.size, RegisterRole::kAncilla);
  std::vector<int> identity(static_cast<std::size_t>(body.num_qubits()));
  for (int q = 0; q < body.num_qubits(); ++q) identity[static_cast<std::size_t>(q)] = q;

  c.append(Gate::x(ctrl[0]));
  for (int i = 0; i < target.size; ++i) c.append(Gate::cswap(ctrl[0], target[i], park[i]));
  c.append(body, identity);
  for (int i = 0; i < target.size; ++i) c.append(Gate::cswap(ctrl[0], target[i], park[i]));
  for (int i : pattern) c.append(Gate::cnot(ctrl[0], park[i]));
  c.append(Gate::x(ctrl[0]));
  return c;
}

Circuit comparator(int m) {
  if (m < 1) throw CircuitError("comparator width must be >= 1");
  const int spine = ceil_log2(static_cast<std::uint64_t>(m));
  Circuit c;
  Register a = c.add_register("a", m);
  Register b = c.add_register("b", m);
  Register out = c.add_register("out", 1, RegisterRole::kAdditional);
  Register g = c.add_register("g", m, RegisterRole::kAncilla);
  Register p = c.add_register("p", m - 1 - spine, RegisterRole::kAncilla);

  // a < b  <=>  carry out of (~a) + b. Generate g_i = ~a_i & b_i, propagate
  // p_i = ~a_i ^ b_i (in b_i, not needed at i = 0), then combine blocks in
  // a tree whose block-G lands on the G qubit of its upper half.
  std::vector<Gate> compute;
  for (int i = 0; i < m; ++i) compute.push_back(Gate::x(a[i]));
  for (int i = 0; i < m; ++i) compute.push_back(Gate::toffoli(a[i], b[i], g[i]));
  for (int i = 1; i < m; ++i) compute.push_back(Gate::cnot(a[i], b[i]));

  struct Node {
    int gq;
    int pq;  // -1 for blocks containing position 0
  };
  int next_p = 0;
  std::function<Node(int, int)> build = [&](int lo, int size) -> Node {
    if (size == 1) return Node{g[lo], lo == 0 ? -1 : b[lo]};
    const int lo_size = (size + 1) / 2;
    Node low = build(lo, lo_size);
    Node high = build(lo + lo_size, size - lo_size);
    Node node{high.gq, -1};
    if (low.pq >= 0) {
      node.pq = p[next_p++];
      compute.push_back(Gate::toffoli(high.pq, low.pq, node.pq));
    }
    compute.push_back(Gate::toffoli(high.pq, low.gq, high.gq));
    return node;
  };
  Node root = build(0, m);

  for (auto& gate : compute) c.append(gate);
  c.append(Gate::cnot(root.gq, out[0]));
  for (auto it = compute.rbegin(); it != compute.rend(); ++it) c.append(*it);
  return c;
}

Circuit macro_block(const std::string& name, const std::map<std::string, std::int64_t>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) {
      throw CircuitError("macro '" + name + "' lacks parameter '" + key + "'");
    }
    return it->second;
  };
  if (name == "comparator") return comparator(static_cast<int>(get("m")));
  if (name == "add_registers") {
    return add_registers(AdderSpec{static_cast<int>(get("n")), get("carry") != 0});
  }
  if (name == "add_const") {
    return add_constant(static_cast<int>(get("n")), static_cast<std::uint64_t>(get("c")));
  }
  if (name == "ctrl_add") {
    return make_controlled(add_registers(AdderSpec{static_cast<int>(get("n")), get("carry") != 0}),
                           "a");
  }
  if (name == "ctrl_add_const") {
    return make_controlled(
        add_constant(static_cast<int>(get("n")), static_cast<std::uint64_t>(get("c"))), "b");
  }
  throw CircuitError("unknown macro '" + name + "'");
}

Gate block_macro(const std::string& name, const std::map<std::string, std::int64_t>& params,
                 std::vector<int> qubits) {
  const Circuit block = macro_block(name, params);
  if (static_cast<int>(qubits.size()) != block.num_qubits()) {
    throw CircuitError("macro '" + name + "' needs " + std::to_string(block.num_qubits()) +
                       " operands, got " + std::to_string(qubits.size()));
  }
  return Gate::macro(name, std::move(qubits), params);
}

const MacroTable& standard_macros() {
  static const MacroTable table = [] {
    MacroTable t;
    for (const char* name : {"comparator", "add_registers", "add_const", "ctrl_add", "ctrl_add_const"}) {
      t.add(name, [n = std::string(name)](const Gate& g) {
        const Circuit block = macro_block(n, g.params);
        if (static_cast<int>(g.qubits.size()) != block.num_qubits()) {
          throw CircuitError("macro '" + n + "' operand count mismatch");
        }
        std::vector<Gate> out;
        for (Gate sub : block.gates()) {
          for (int& q : sub.qubits) q = g.qubits[static_cast<std::size_t>(q)];
          out.push_back(std::move(sub));
        }
        return out;
      });
    }
    return t;
  }();
  return table;
}

std::vector<std::uint8_t> simulate_classical(const Circuit& c, std::vector<std::uint8_t> bits) {
  if (bits.size() != static_cast<std::size_t>(c.num_qubits())) {
    throw CircuitError("bit string width does not match circuit");
  }
  auto at = [&](int q) -> std::uint8_t& { return bits[static_cast<std::size_t>(q)]; };
  for (const Gate& g : c.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::kX:
        at(q[0]) ^= 1;
        break;
      case GateKind::kCNOT:
        at(q[1]) ^= at(q[0]);
        break;
      case GateKind::kToffoli:
        at(q[2]) ^= static_cast<std::uint8_t>(at(q[0]) & at(q[1]));
        break;
      case GateKind::kSWAP:
        std::swap(at(q[0]), at(q[1]));
        break;
      case GateKind::kCSWAP:
        if (at(q[0])) std::swap(at(q[1]), at(q[2]));
        break;
      default:
        throw CircuitError("classical simulation cannot run " + std::string(to_string(g.kind)));
    }
  }
  return bits;
}

std::uint64_t read_register(const std::vector<std::uint8_t>& bits, const Register& r) {
  std::uint64_t v = 0;
  for (int i = 0; i < r.size; ++i) {
    v |= static_cast<std::uint64_t>(bits[static_cast<std::size_t>(r[i])] & 1) << i;
  }
  return v;
}

void write_register(std::vector<std::uint8_t>& bits, const Register& r, std::uint64_t value) {
  for (int i = 0; i < r.size; ++i) {
    bits[static_cast<std::size_t>(r[i])] = static_cast<std::uint8_t>((value >> i) & 1);
  }
}

}  // namespace qround
