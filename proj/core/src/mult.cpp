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

#include "qround/mult.hpp"

#include <algorithm>
#include <map>

#include "qround/analysis.hpp"
#include "qround/blocks.hpp"
#include "qround/cost.hpp"
#include "qround/rounding.hpp"

namespace qround {
namespace {

std::map<std::string, std::int64_t> add_params(int f) { return {{"n", f}, {"carry", 1}}; }

// Multiplication part only; QRound rounding is appended by the caller.
Circuit build_products(const MultiplyPlan& plan, Register* out_reg) {
  const int na = plan.a.n;
  const int nb = plan.b.n;
  const int n_out = plan.out.n;
  Circuit c;
  Register a = c.add_register("a", na);
  Register b = c.add_register("b", nb);
  Register out = c.add_register("out", n_out, RegisterRole::kAdditional);
  if (out_reg) *out_reg = out;

  int z_size = 0;
  int p_size = 0;
  int park_size = 0;
  for (int f : plan.f) {
    if (f == 0) continue;
    const Circuit block = macro_block("ctrl_add", add_params(f));
    z_size = std::max(z_size, block.reg("z").size);
    p_size = std::max(p_size, block.reg("p").size);
    park_size = std::max(park_size, block.reg("park").size);
  }
  Register z = c.add_register("z", z_size, RegisterRole::kAncilla);
  Register p = c.add_register("p", p_size, RegisterRole::kAncilla);
  Register park = c.add_register("park", park_size, RegisterRole::kAncilla);

  for (int j = 0; j < na; ++j) {
    const int f = plan.f[static_cast<std::size_t>(j)];
    if (f == 0) continue;
    const int start = j + nb - f;  // lowest product bit touched
    const Circuit block = macro_block("ctrl_add", add_params(f));
    std::vector<int> operands(static_cast<std::size_t>(block.num_qubits()), -1);
    auto bind = [&](const char* name, auto&& target_of) {
      const Register& r = block.reg(name);
      for (int i = 0; i < r.size; ++i) operands[static_cast<std::size_t>(r[i])] = target_of(i);
    };
    bind("a", [&](int i) { return b[nb - f + i]; });
    bind("b", [&](int i) { return out[start + i - plan.lo]; });
    bind("z", [&](int i) { return z[i]; });
    bind("p", [&](int i) { return p[i]; });
    bind("carry", [&](int) { return out[j + nb - plan.lo]; });
    bind("ctrl", [&](int) { return a[j]; });
    bind("park", [&](int i) { return park[i]; });
    c.append(block_macro("ctrl_add", add_params(f), std::move(operands)));
  }
  return c;
}

}  // namespace

std::string_view to_string(MultMethod m) {
  switch (m) {
    case MultMethod::kExact:
      return "exact";
    case MultMethod::kHaner:
      return "haner";
    case MultMethod::kQRound:
      return "qround";
  }
  return "?";
}

MultMethod mult_method_from_string(std::string_view s) {
  if (s == "exact") return MultMethod::kExact;
  if (s == "haner") return MultMethod::kHaner;
  if (s == "qround") return MultMethod::kQRound;
  throw MultError("unknown multiplication method '" + std::string(s) + "'");
}

int MultiplyPlan::additions() const {
  return static_cast<int>(std::count_if(f.begin(), f.end(), [](int x) { return x > 0; }));
}

std::vector<int> addend_schedule(FxFormat a, FxFormat b, const Rational& eps,
                                 ScheduleReading reading) {
  if (eps < 0) throw MultError("error budget must be >= 0");
  std::vector<int> f(static_cast<std::size_t>(a.n), b.n);
  if (eps == 0) return f;
  const Rational per_addend = eps / a.n;
  for (int j = 0; j < a.n; ++j) {
    const int weight = reading == ScheduleReading::kPerAddend ? j - a.frac_bits() : 0;
    for (int bits = 0; bits <= b.n; ++bits) {
      if (pow2(weight + b.p - bits) <= per_addend) {
        f[static_cast<std::size_t>(j)] = bits;
        break;
      }
    }
  }
  return f;
}

MultiplyPlan plan_general(FxFormat a, FxFormat b, const Rational& eps, ScheduleReading reading) {
  MultiplyPlan plan;
  plan.method = eps == 0 ? MultMethod::kExact : MultMethod::kHaner;
  plan.a = a;
  plan.b = b;
  plan.eps = eps;
  plan.reading = reading;
  plan.f = addend_schedule(a, b, eps, reading);
  const int top = a.n + b.n;
  plan.lo = top;
  for (int j = 0; j < a.n; ++j) {
    const int f = plan.f[static_cast<std::size_t>(j)];
    if (f > 0) plan.lo = std::min(plan.lo, j + b.n - f);
  }
  if (plan.lo == top) plan.lo = top - 1;  // nothing added; keep one bit
  plan.out = FxFormat{top - plan.lo, a.p + b.p};
  return plan;
}

MultiplyPlan plan(MultMethod method, int n, int p, std::uint64_t N, std::optional<double> alpha,
                  ScheduleReading reading) {
  if (n < 2) throw MultError("multiplication benchmarks need n >= 2");
  const FxFormat fmt = FxFormat::make(n, p);
  const Rational target = Rational(n) / pow2(n - p);
  switch (method) {
    case MultMethod::kExact:
      return plan_general(fmt, fmt, 0, reading);
    case MultMethod::kHaner: {
      MultiplyPlan out = plan_general(fmt, fmt, target, reading);
      out.method = MultMethod::kHaner;
      return out;
    }
    case MultMethod::kQRound: {
      if (N == 0) throw MultError("quantum-rounded multiplication needs N >= 1");
      ErrorBudget budget{target, alpha.value_or(1.0 / static_cast<double>(N)), N};
      int nt = 0;
      try {
        nt = solve_n_tilde(budget, p, n);
      } catch (const AnalysisError& e) {
        throw MultError(std::string("no feasible reduced size: ") + e.what());
      }
      const FxFormat reduced = FxFormat::make(nt, p);
      MultiplyPlan out = plan_general(reduced, reduced, 0, reading);
      out.method = MultMethod::kQRound;
      out.eps = target;
      out.n_tilde = nt;
      out.N = N;
      out.alpha = budget.alpha;
      return out;
    }
  }
  throw MultError("unsupported multiplication method");
}

int addend_bits(int j, const MultiplyPlan& plan) {
  if (j < 0 || j >= static_cast<int>(plan.f.size())) {
    throw MultError("addend index out of range: " + std::to_string(j));
  }
  return plan.f[static_cast<std::size_t>(j)];
}

Circuit build_multiplier(const MultiplyPlan& plan) {
  Register out;
  Circuit c = build_products(plan, &out);
  if (plan.method != MultMethod::kQRound) return c;
  const int nt = *plan.n_tilde;
  const Circuit rc = build(RoundingMethod::qr_comparator(), nt, nt);
  std::vector<int> map(static_cast<std::size_t>(rc.num_qubits()), -1);
  for (const auto& r : rc.registers()) {
    Register dst;
    int offset = 0;
    if (r.name == "x") {
      dst = out;
      offset = nt;
    } else if (r.name == "r") {
      dst = out;
    } else {
      dst = c.add_register("round_" + r.name, r.size, r.role);
    }
    for (int i = 0; i < r.size; ++i) map[static_cast<std::size_t>(r[i])] = dst[offset + i];
  }
  c.append(rc, map);
  return c;
}

ResourceReport method_resources(const MultiplyPlan& plan, Regime regime) {
  const Circuit products = build_products(plan, nullptr);
  ResourceReport r = count_resources(expand(products, regime), regime, std::nullopt);
  if (plan.method == MultMethod::kQRound) {
    const int size = std::max(*plan.n_tilde, 2);
    r = compose(r, compose_qr_cost(size, size, regime));
  }
  return r;
}

std::uint64_t classical_product(const MultiplyPlan& plan, std::uint64_t a_bits,
                                std::uint64_t b_bits) {
  const int nb = plan.b.n;
  std::uint64_t total = 0;
  for (int j = 0; j < plan.a.n; ++j) {
    const int f = plan.f[static_cast<std::size_t>(j)];
    if (f == 0 || ((a_bits >> j) & 1) == 0) continue;
    total += (b_bits >> (nb - f)) << (j + nb - f);
  }
  return total >> plan.lo;
}

}  // namespace qround
