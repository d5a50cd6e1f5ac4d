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

#include "qround/sim.hpp"

#include <cmath>
#include <utility>

#include "qround/analysis.hpp"
#include "qround/rng.hpp"

namespace qround {
namespace {

using Amplitude = StateVector::Amplitude;

inline bool bit(std::uint64_t k, int q) { return ((k >> q) & 1) != 0; }
inline std::uint64_t flip(std::uint64_t k, int q) { return k ^ (std::uint64_t{1} << q); }

// (cos, sin) of half the rotation angle.
std::pair<double, double> half_angle(const Angle& a) {
  double c;
  double s;
  if (a.kind == Angle::Kind::kAsinSqrt) {
    const double p = to_double(a.coeff);
    if (p < 0.0 || p > 1.0) throw SimError("rotation probability outside [0, 1]");
    s = std::sqrt(p);
    c = std::sqrt(1.0 - p);
    if (a.negated) s = -s;
  } else {
    const double half = 0.5 * a.radians();
    c = std::cos(half);
    s = std::sin(half);
  }
  return {c, s};
}

StateVector::Matrix2 ry_matrix(double c, double s) {
  return {{{Amplitude(c), Amplitude(-s)}, {Amplitude(s), Amplitude(c)}}};
}

struct Branch {
  double weight;
  StateVector state;
  std::uint64_t clbits;
};

}  // namespace

StateVector::StateVector(int num_qubits, std::uint64_t basis) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 62) throw SimError("unsupported qubit count");
  if (num_qubits < 64 && (basis >> num_qubits) != 0) {
    throw SimError("basis state does not fit the register");
  }
  amps_.emplace(basis, Amplitude(1.0, 0.0));
}

Amplitude StateVector::amplitude(std::uint64_t basis) const {
  auto it = amps_.find(basis);
  return it == amps_.end() ? Amplitude(0.0, 0.0) : it->second;
}

std::vector<Amplitude> StateVector::dense() const {
  if (num_qubits_ > kDefaultQubitCap) throw SimError("state too large to densify");
  std::vector<Amplitude> out(std::size_t{1} << num_qubits_);
  for (const auto& [k, a] : amps_) out[k] = a;
  return out;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [k, a] : amps_) total += std::norm(a);
  return total;
}

void StateVector::transform(int target, std::optional<int> control, const Matrix2& u) {
  std::unordered_map<std::uint64_t, Amplitude> next;
  next.reserve(amps_.size() * 2);
  for (const auto& [k, a] : amps_) {
    if (control && !bit(k, *control)) {
      next[k] += a;
      continue;
    }
    const int col = bit(k, target) ? 1 : 0;
    const std::uint64_t k0 = col ? flip(k, target) : k;
    const std::uint64_t k1 = k0 | (std::uint64_t{1} << target);
    next[k0] += u[0][col] * a;
    next[k1] += u[1][col] * a;
  }
  std::erase_if(next, [](const auto& kv) { return std::abs(kv.second) < kAmplitudeCutoff; });
  amps_ = std::move(next);
}

void StateVector::apply(const Gate& g) {
  const auto& q = g.qubits;
  auto permute = [&](auto&& f) {
    std::unordered_map<std::uint64_t, Amplitude> next;
    next.reserve(amps_.size());
    for (const auto& [k, a] : amps_) next.emplace(f(k), a);
    amps_ = std::move(next);
  };
  switch (g.kind) {
    case GateKind::kX:
      permute([&](std::uint64_t k) { return flip(k, q[0]); });
      return;
    case GateKind::kCNOT:
      permute([&](std::uint64_t k) { return bit(k, q[0]) ? flip(k, q[1]) : k; });
      return;
    case GateKind::kToffoli:
      permute([&](std::uint64_t k) { return bit(k, q[0]) && bit(k, q[1]) ? flip(k, q[2]) : k; });
      return;
    case GateKind::kSWAP:
      permute([&](std::uint64_t k) {
        return bit(k, q[0]) != bit(k, q[1]) ? flip(flip(k, q[0]), q[1]) : k;
      });
      return;
    case GateKind::kCSWAP:
      permute([&](std::uint64_t k) {
        return bit(k, q[0]) && bit(k, q[1]) != bit(k, q[2]) ? flip(flip(k, q[1]), q[2]) : k;
      });
      return;
    case GateKind::kH: {
      const double h = 1.0 / std::sqrt(2.0);
      transform(q[0], std::nullopt, {{{h, h}, {h, -h}}});
      return;
    }
    case GateKind::kRY: {
      auto [c, s] = half_angle(*g.angle);
      transform(q[0], std::nullopt, ry_matrix(c, s));
      return;
    }
    case GateKind::kCRY: {
      auto [c, s] = half_angle(*g.angle);
      transform(q[1], q[0], ry_matrix(c, s));
      return;
    }
    case GateKind::kRegisterRY: {
      const int k = static_cast<int>(q.size()) - 1;
      const int target = q.back();
      const double scale = std::ldexp(1.0, -k);
      std::unordered_map<std::uint64_t, Amplitude> next;
      for (const auto& [key, a] : amps_) {
        std::uint64_t j = 0;
        for (int i = 0; i < k; ++i) j |= static_cast<std::uint64_t>(bit(key, q[i])) << i;
        const double p = static_cast<double>(j) * scale;
        const double s = std::sqrt(p);
        const double c = std::sqrt(1.0 - p);
        const std::uint64_t k0 = bit(key, target) ? flip(key, target) : key;
        const std::uint64_t k1 = k0 | (std::uint64_t{1} << target);
        if (bit(key, target)) {
          next[k0] += -s * a;
          next[k1] += c * a;
        } else {
          next[k0] += c * a;
          next[k1] += s * a;
        }
      }
      std::erase_if(next, [](const auto& kv) { return std::abs(kv.second) < kAmplitudeCutoff; });
      amps_ = std::move(next);
      return;
    }
    default:
      throw SimError("cannot apply " + std::string(to_string(g.kind)) + " as a unitary");
  }
}

double StateVector::probability_one(int qubit) const {
  double p = 0.0;
  for (const auto& [k, a] : amps_) {
    if (bit(k, qubit)) p += std::norm(a);
  }
  return p;
}

void StateVector::project(int qubit, bool value) {
  std::erase_if(amps_, [&](const auto& kv) { return bit(kv.first, qubit) != value; });
  const double n = norm_squared();
  if (n <= 0.0) throw SimError("projection onto a zero-probability outcome");
  const double scale = 1.0 / std::sqrt(n);
  for (auto& [k, a] : amps_) a *= scale;
}

Distribution run(const Circuit& c, const std::map<std::string, std::uint64_t>& initial,
                 const std::vector<std::string>& observe, const SimOptions& options) {
  const Circuit flat = expand(c, Regime::kFT);
  const int nq = flat.num_qubits();
  const int ncl = flat.num_clbits();
  const int width = options.defer_measurements ? nq + ncl : nq;
  if (width > options.qubit_cap) {
    throw SimError("circuit needs " + std::to_string(width) + " qubits, cap is " +
                   std::to_string(options.qubit_cap));
  }
  std::uint64_t basis = 0;
  for (const auto& [name, value] : initial) {
    const Register& r = flat.reg(name);
    if (r.size < 64 && (value >> r.size) != 0) {
      throw SimError("initial value does not fit register '" + name + "'");
    }
    for (int i = 0; i < r.size; ++i) {
      if ((value >> i) & 1) basis |= std::uint64_t{1} << r[i];
    }
  }

  std::vector<Branch> branches{{1.0, StateVector(width, basis), 0}};
  for (const Gate& g : flat.gates()) {
    if (g.kind == GateKind::kMeasureZ) {
      if (options.defer_measurements) {
        for (auto& b : branches) b.state.apply(Gate::cnot(g.qubits[0], nq + g.cbit));
        continue;
      }
      std::vector<Branch> next;
      for (auto& b : branches) {
        const double p1 = b.state.probability_one(g.qubits[0]);
        const std::uint64_t mask = std::uint64_t{1} << g.cbit;
        if (1.0 - p1 > kAmplitudeCutoff) {
          Branch zero{b.weight * (1.0 - p1), b.state, b.clbits & ~mask};
          zero.state.project(g.qubits[0], false);
          next.push_back(std::move(zero));
        }
        if (p1 > kAmplitudeCutoff) {
          Branch one{b.weight * p1, std::move(b.state), b.clbits | mask};
          one.state.project(g.qubits[0], true);
          next.push_back(std::move(one));
        }
      }
      branches = std::move(next);
    } else if (g.kind == GateKind::kConditionalReset) {
      for (auto& b : branches) {
        if (options.defer_measurements) {
          b.state.apply(Gate::cnot(nq + g.cbit, g.qubits[0]));
        } else if ((b.clbits >> g.cbit) & 1) {
          b.state.apply(Gate::x(g.qubits[0]));
        }
      }
    } else {
      for (auto& b : branches) b.state.apply(g);
    }
  }

  std::vector<const Register*> regs;
  for (const auto& name : observe) regs.push_back(&flat.reg(name));
  Distribution out;
  for (const auto& b : branches) {
    for (const auto& [k, a] : b.state.support()) {
      Outcome o;
      for (const Register* r : regs) {
        std::uint64_t v = 0;
        for (int i = 0; i < r->size; ++i) v |= static_cast<std::uint64_t>(bit(k, (*r)[i])) << i;
        o.push_back(v);
      }
      std::uint64_t cl = b.clbits;
      if (options.defer_measurements) {
        cl = 0;
        for (int i = 0; i < ncl; ++i) cl |= static_cast<std::uint64_t>(bit(k, nq + i)) << i;
      }
      o.push_back(cl);
      out[o] += b.weight * std::norm(a);
    }
  }
  return out;
}

std::map<std::pair<std::uint64_t, int>, double> run_rounding(const RoundingMethod& method,
                                                             const ExtendedValue& v,
                                                             const SimOptions& options) {
  const int n = v.format().n;
  const Circuit c = build(method, n, v.m());
  const std::map<std::string, std::uint64_t> initial{{"x", v.floor().bits},
                                                     {"r", v.remainder_bits()}};
  std::map<std::pair<std::uint64_t, int>, double> out;
  for (const auto& [o, p] : run(c, initial, {"x", "carry"}, options)) {
    out[{o[0] | (o[1] << n), static_cast<int>(o[2] & 1)}] += p;
  }
  return out;
}

std::string_view to_string(Backend b) { return b == Backend::kCircuit ? "circuit" : "semantic"; }

Backend backend_from_string(std::string_view s) {
  if (s == "circuit") return Backend::kCircuit;
  if (s == "semantic") return Backend::kSemantic;
  throw SimError("unknown backend '" + std::string(s) + "'");
}

double round_up_probability(const RoundingMethod& method, const ExtendedValue& v,
                            Backend backend, const SimOptions& options) {
  if (backend == Backend::kSemantic) {
    return to_double(semantic_round_probability(method, v.remainder_bits(), v.m()));
  }
  double p = 0.0;
  for (const auto& [key, prob] : run_rounding(method, v, options)) {
    if (key.second == 1) p += prob;
  }
  return p;
}

SampleStats sample(const RoundingMethod& method, const ExtendedValue& v, std::uint64_t N,
                   std::uint64_t seed, Backend backend, std::optional<double> alpha,
                   const SimOptions& options) {
  if (N == 0) throw SimError("sample count must be >= 1");
  const double p = round_up_probability(method, v, backend, options);
  SampleStats s;
  s.N = N;
  s.seed = seed;
  s.alpha = alpha.value_or(1.0 / static_cast<double>(N));
  for (std::uint64_t i = 0; i < N; ++i) {
    if (CounterRng::uniform_at(seed, 0, i) < p) ++s.X;
  }
  const Rational eps = v.format().eps_rd();
  const Rational floor = v.floor().value();
  s.estimate = estimate_from_samples(s.X, N, eps, floor);
  s.chernoff_bound = qr_error_bound(N, s.alpha, to_double(eps));
  const Rational diff = s.estimate - v.value();
  s.within_bound = std::abs(to_double(diff)) <= s.chernoff_bound;
  return s;
}

nlohmann::json sample_to_json(const RoundingMethod& method, const ExtendedValue& v,
                              const SampleStats& stats) {
  return {{"method", to_string(method)},
          {"n", v.format().n},
          {"p", v.format().p},
          {"m", v.m()},
          {"value", v.to_string()},
          {"remainder", v.remainder_bits()},
          {"N", stats.N},
          {"X", stats.X},
          {"estimate", to_string(stats.estimate)},
          {"estimate_decimal", to_double(stats.estimate)},
          {"bound", stats.chernoff_bound},
          {"alpha", stats.alpha},
          {"within_bound", stats.within_bound},
          {"seed", stats.seed}};
}

}  // namespace qround
