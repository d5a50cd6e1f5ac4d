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

#include "qround/rounding.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qround/blocks.hpp"

namespace qround {
namespace {

using Variant = RoundingMethod::Variant;

struct Literal {
  int qubit;
  bool positive;
};

// AND of literals into scratch[0..L-2]. Returns the qubit holding the
// conjunction and the gates computing it; the inverse undoes them.
std::pair<int, std::vector<Gate>> conjunction(const std::vector<Literal>& lits,
                                              const std::vector<int>& scratch) {
  std::vector<Gate> gates;
  for (const auto& l : lits) {
    if (!l.positive) gates.push_back(Gate::x(l.qubit));
  }
  if (lits.size() == 1) return {lits[0].qubit, gates};
  int acc = scratch.at(0);
  gates.push_back(Gate::toffoli(lits[0].qubit, lits[1].qubit, acc));
  for (std::size_t i = 2; i < lits.size(); ++i) {
    gates.push_back(Gate::toffoli(acc, lits[i].qubit, scratch.at(i - 1)));
    acc = scratch.at(i - 1);
  }
  return {acc, gates};
}

void emit_reversed(Circuit& c, const std::vector<Gate>& gates) {
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) c.append(*it);
}

struct Frame {
  Circuit c;
  Register x, r, flag, carry;
};

Frame frame(int n, int m) {
  Frame f;
  f.x = f.c.add_register("x", n);
  f.r = f.c.add_register("r", m);
  f.flag = f.c.add_register("flag", 1, RegisterRole::kAdditional);
  f.carry = f.c.add_register("carry", 1, RegisterRole::kAdditional);
  return f;
}

// Controlled +1 ulp on flag, measurement of flag, reset.
void finish(Frame& f, int n) {
  const std::map<std::string, std::int64_t> params{{"n", n}, {"c", 1}};
  const Circuit block = macro_block("ctrl_add_const", params);
  const auto& z = block.reg("z");
  const auto& p = block.reg("p");
  const auto& park = block.reg("park");
  Register add_z = f.c.add_register("add_z", z.size, RegisterRole::kAncilla);
  Register add_p = f.c.add_register("add_p", p.size, RegisterRole::kAncilla);
  Register add_park = f.c.add_register("park", park.size, RegisterRole::kAncilla);
  const std::map<std::string, Register> target{{"b", f.x},     {"z", add_z},
                                               {"p", add_p},   {"carry", f.carry},
                                               {"ctrl", f.flag}, {"park", add_park}};
  std::vector<int> operands(static_cast<std::size_t>(block.num_qubits()), -1);
  for (const auto& r : block.registers()) {
    const Register& dst = target.at(r.name);
    for (int i = 0; i < r.size; ++i) operands[static_cast<std::size_t>(r[i])] = dst[i];
  }
  f.c.append(block_macro("ctrl_add_const", params, operands));
  const int cbit = f.c.add_clbit();
  f.c.append(Gate::measure(f.flag[0], cbit));
  f.c.append(Gate::conditional_reset(f.flag[0], cbit));
}

Circuit build_stochastic(int n, int m) {
  Frame f = frame(n, m);
  // Unbiased coin on flag, gated on a nonzero remainder.
  if (m == 1) {
    f.c.append(Gate::cry(f.r[0], f.flag[0], Angle::asin_sqrt(Rational(1, 2))));
  } else {
    Register scratch = f.c.add_register("nz", m - 1, RegisterRole::kAncilla);
    std::vector<Literal> lits;
    for (int i = 0; i < m; ++i) lits.push_back({f.r[i], false});
    auto [zero, gates] = conjunction(lits, scratch.qubits());
    for (const auto& g : gates) f.c.append(g);
    f.c.append(Gate::x(zero));
    f.c.append(Gate::cry(zero, f.flag[0], Angle::asin_sqrt(Rational(1, 2))));
    f.c.append(Gate::x(zero));
    emit_reversed(f.c, gates);
  }
  finish(f, n);
  return f.c;
}

Circuit build_qr_comparator(int n, int m) {
  Frame f = frame(n, m);
  Register u = f.c.add_register("u", m, RegisterRole::kAncilla);
  const Circuit cmp = comparator(m);
  Register g = f.c.add_register("cmp_g", cmp.reg("g").size, RegisterRole::kAncilla);
  Register p = f.c.add_register("cmp_p", cmp.reg("p").size, RegisterRole::kAncilla);
  for (int i = 0; i < m; ++i) f.c.append(Gate::h(u[i]));
  // flag = [u < r], which has probability r / 2^m.
  std::vector<int> operands;
  for (const Register* reg : {&u, &f.r, &f.flag, &g, &p}) {
    for (int q : reg->qubits()) operands.push_back(q);
  }
  f.c.append(block_macro("comparator", {{"m", m}}, operands));
  finish(f, n);
  return f.c;
}

Circuit build_qr_rotation(int n, int m) {
  Frame f = frame(n, m);
  f.c.append(Gate::register_ry(f.r.qubits(), f.flag[0]));
  finish(f, n);
  return f.c;
}

Angle weight_angle(int exponent) { return Angle::asin_sqrt(pow2(exponent)); }

Circuit build_semi_round(int n, int m) {
  Frame f = frame(n, m);
  const auto& x = f.r;
  std::vector<Gate> ladder;
  std::vector<Gate> rotations;
  f.c.append(Gate::cry(x[m - 1], f.flag[0], weight_angle(-1)));
  if (m >= 2) {
    Register anc = f.c.add_register("lead", 2 * m - 3, RegisterRole::kAncilla);
    int next = 0;
    auto emit = [&](Gate g) {
      f.c.append(g);
      ladder.push_back(std::move(g));
    };
    emit(Gate::x(x[m - 1]));
    const int top = anc[next++];
    emit(Gate::toffoli(x[m - 1], x[m - 2], top));
    f.c.append(Gate::cry(top, f.flag[0], weight_angle(-2)));
    int prefix = -1;  // all bits above k are zero
    for (int k = m - 3; k >= 0; --k) {
      emit(Gate::x(x[k + 1]));
      const int zero = anc[next++];
      if (k == m - 3) {
        emit(Gate::toffoli(x[m - 1], x[m - 2], zero));
      } else {
        emit(Gate::toffoli(prefix, x[k + 1], zero));
      }
      const int hit = anc[next++];
      emit(Gate::toffoli(zero, x[k], hit));
      f.c.append(Gate::cry(hit, f.flag[0], weight_angle(k - m)));
      prefix = zero;
    }
    emit_reversed(f.c, ladder);
  }
  finish(f, n);
  return f.c;
}

Circuit build_semi_round_l(int n, int m, int l) {
  Frame f = frame(n, m);
  Register scratch = f.c.add_register("lead", std::max(m - 1, 1), RegisterRole::kAncilla);
  const auto& x = f.r;
  for (int i = m - 1; i >= 0; --i) {
    const int below = std::min(l - 1, i);
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << below); ++pattern) {
      std::vector<Literal> lits;
      for (int j = m - 1; j > i; --j) lits.push_back({x[j], false});
      lits.push_back({x[i], true});
      for (int b = 0; b < below; ++b) {
        const int bit = i - below + b;
        lits.push_back({x[bit], ((pattern >> b) & 1) != 0});
      }
      auto [ctl, gates] = conjunction(lits, scratch.qubits());
      for (const auto& g : gates) f.c.append(g);
      const Rational weight =
          (Rational(pow2(i)) + Rational(static_cast<long long>(pattern)) * pow2(i - below)) /
          pow2(m);
      f.c.append(Gate::cry(ctl, f.flag[0], Angle::asin_sqrt(weight)));
      emit_reversed(f.c, gates);
    }
  }
  finish(f, n);
  return f.c;
}

}  // namespace

RoundingMethod RoundingMethod::semi_round_l(int l) {
  if (l < 1) throw RoundingError("semi-rounding needs l >= 1, got " + std::to_string(l));
  return {Variant::kSemiRoundL, l};
}

std::string to_string(const RoundingMethod& method) {
  switch (method.variant) {
    case Variant::kStochastic:
      return "stochastic";
    case Variant::kQRComparator:
      return "qr-comparator";
    case Variant::kQRRotation:
      return "qr-rotation";
    case Variant::kSemiRound:
      return "semi-round";
    case Variant::kSemiRoundL:
      return "semi-round-l" + std::to_string(method.l);
  }
  return "?";
}

RoundingMethod rounding_method_from_string(std::string_view name, int l) {
  if (name == "stochastic") return RoundingMethod::stochastic();
  if (name == "qr-comparator" || name == "qr") return RoundingMethod::qr_comparator();
  if (name == "qr-rotation") return RoundingMethod::qr_rotation();
  if (name == "semi-round") return RoundingMethod::semi_round();
  constexpr std::string_view prefix = "semi-round-l";
  if (name.substr(0, prefix.size()) == prefix) {
    auto rest = name.substr(prefix.size());
    if (rest.empty()) return RoundingMethod::semi_round_l(l);
    try {
      return RoundingMethod::semi_round_l(std::stoi(std::string(rest)));
    } catch (const std::logic_error&) {
      throw RoundingError("malformed method '" + std::string(name) + "'");
    }
  }
  throw RoundingError("unknown rounding method '" + std::string(name) + "'");
}

Circuit build(const RoundingMethod& method, int n, int m) {
  if (n < 1) throw RoundingError("n must be >= 1");
  if (m < 1) throw RoundingError("m must be >= 1");
  switch (method.variant) {
    case Variant::kStochastic:
      return build_stochastic(n, m);
    case Variant::kQRComparator:
      return build_qr_comparator(n, m);
    case Variant::kQRRotation:
      return build_qr_rotation(n, m);
    case Variant::kSemiRound:
      return build_semi_round(n, m);
    case Variant::kSemiRoundL:
      if (method.l < 1 || method.l > m) {
        throw RoundingError("semi-round-l needs 1 <= l <= m, got l=" + std::to_string(method.l) +
                            ", m=" + std::to_string(m));
      }
      return build_semi_round_l(n, m, method.l);
  }
  throw RoundingError("unsupported rounding method");
}

Rational leading_bits_fraction(std::uint64_t remainder_bits, int m, int l) {
  if (remainder_bits == 0) return 0;
  const int top = floor_log2(remainder_bits);
  const int low = std::max(top - l + 1, 0);
  const std::uint64_t kept = (remainder_bits >> low) << low;
  return Rational(Integer(kept)) / pow2(m);
}

Rational semantic_round_probability(const RoundingMethod& method,
                                    std::uint64_t remainder_bits, int m) {
  if (m < 0 || m > 62 || (remainder_bits >> m) != 0) {
    throw RoundingError("remainder does not fit in m bits");
  }
  switch (method.variant) {
    case Variant::kStochastic:
      return remainder_bits == 0 ? Rational(0) : Rational(1, 2);
    case Variant::kQRComparator:
    case Variant::kQRRotation:
      return Rational(Integer(remainder_bits)) / pow2(m);
    case Variant::kSemiRound:
      return leading_bits_fraction(remainder_bits, m, 1);
    case Variant::kSemiRoundL:
      return leading_bits_fraction(remainder_bits, m, method.l);
  }
  return 0;
}

}  // namespace qround
