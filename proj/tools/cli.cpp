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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <json.hpp>

#include "qround/analysis.hpp"
#include "qround/blocks.hpp"
#include "qround/circuit_json.hpp"
#include "qround/cost.hpp"
#include "qround/mult.hpp"
#include "qround/rounding.hpp"
#include "qround/sim.hpp"

namespace qround::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string output;
  std::string format = "json";
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QROUND_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError(std::string("QROUND_SEED is not an unsigned integer: ") + env);
  }
  return 0;
}

// Writes to the --output file when given, else to `out`.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + c.output + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json versioned(json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

std::string csv_preamble() {
  return "# schema_version: " + std::to_string(kSchemaVersion) + "\n";
}

RoundingMethod parse_method(const std::string& name, int l) {
  return rounding_method_from_string(name, l);
}

// ---------------------------------------------------------------------------
// round

struct RoundArgs {
  std::string value;
  std::string method = "qr-comparator";
  int l = 0;
  std::optional<int> n;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  std::string backend = "semantic";
  std::optional<double> alpha;
};

int cmd_round(const RoundArgs& a, const Common& c, std::ostream& out) {
  const ExtendedValue v = ExtendedValue::parse(a.value);
  if (a.n && *a.n != v.format().n) {
    throw UsageError("--n " + std::to_string(*a.n) + " does not match the " +
                     std::to_string(v.format().n) + "-bit value '" + a.value + "'");
  }
  if (a.samples == 0) throw UsageError("--samples must be >= 1");
  const RoundingMethod method = parse_method(a.method, a.l);
  const SampleStats s =
      sample(method, v, a.samples, resolve_seed(a.seed), backend_from_string(a.backend), a.alpha);
  json j = sample_to_json(method, v, s);
  j["backend"] = a.backend;
  emit(c, out, dump(versioned(std::move(j))));
  return s.within_bound ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateArgs {
  int n = 10;
  int m = 10;
  std::string regime = "ft";
  std::string method = "qr-comparator";
  std::string eps;
};

std::string table_text(const std::vector<std::pair<std::string, ResourceReport>>& cols) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "metric";
  for (const auto& [name, r] : cols) os << std::right << std::setw(12) << name;
  os << "\n";
  for (const auto& [metric, field] : metric_fields()) {
    os << std::left << std::setw(22) << metric;
    for (const auto& [name, r] : cols) os << std::right << std::setw(12) << r.*field;
    os << "\n";
  }
  return os.str();
}

int cmd_estimate(const EstimateArgs& a, const Common& c, std::ostream& out) {
  const Regime regime = regime_from_string(a.regime);
  const bool semi = a.method == "qsr" || a.method == "semi-round";
  if (!semi && a.method != "qr-comparator" && a.method != "qr") {
    throw UsageError("estimate supports --method qr-comparator or qsr, got '" + a.method + "'");
  }
  std::optional<Rational> eps;
  if (!a.eps.empty()) eps = rational_from_string(a.eps);
  const Rational rot_eps = eps.value_or(pow2(-a.m));

  const ResourceReport formula = semi ? compose_qsr_cost(a.n, a.m, regime, eps)
                                      : compose_qr_cost(a.n, a.m, regime);
  const Circuit circuit =
      build(semi ? RoundingMethod::semi_round() : RoundingMethod::qr_comparator(), a.n, a.m);
  const ResourceReport walker = count_resources(expand(circuit, regime), regime, rot_eps);
  std::optional<std::map<std::string, std::int64_t>> reference;
  if (!semi && regime == Regime::kFT && a.n == 10 && a.m == 10) reference = table1_reference();
  const ReconciliationReport rec = reconcile(formula, walker, reference, a.n, a.m);

  if (c.format == "csv") {
    std::string text = csv_preamble() + std::string(kEstimateCsvHeader) + "\n" +
                       estimate_csv_row(a.n, a.m, formula) + "\n";
    emit(c, out, text);
    return kOk;
  }
  if (c.format == "table") {
    std::vector<std::pair<std::string, ResourceReport>> cols{{"formula", formula},
                                                             {"walker", walker}};
    std::string text = "schema_version " + std::to_string(kSchemaVersion) + "\n" +
                       "method " + (semi ? std::string("qsr") : std::string("qr-comparator")) +
                       ", regime " + std::string(to_string(regime)) + ", n " +
                       std::to_string(a.n) + ", m " + std::to_string(a.m) + "\n" +
                       table_text(cols);
    for (const auto& note : rec.notes) text += "note: " + note + "\n";
    emit(c, out, text);
    return kOk;
  }
  json j = {{"method", semi ? "qsr" : "qr-comparator"},
            {"regime", std::string(to_string(regime))},
            {"n", a.n},
            {"m", a.m},
            {"formula", report_to_json(formula)},
            {"walker", report_to_json(walker)},
            {"reconciliation", reconciliation_to_json(rec)}};
  if (regime == Regime::kFT) j["rotation_eps"] = to_string(rot_eps);
  if (reference) j["table1"] = *reference;
  emit(c, out, dump(versioned(std::move(j))));
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string mode = "size-sweep";
  std::string regime = "ft";
  int p = 0;
  int n_min = 4;
  int n_max = 16;
  int n = 10;
  std::vector<std::uint64_t> sample_counts{10, 100, 1000, 10000, 50000, 100000, 1000000};
  std::uint64_t N = 10000;
  std::string gnuplot;
};

inline constexpr const char* kBenchCsvHeader =
    "method,n,p,N,n_tilde,qubits,ancillas,t_count,t_depth,cnot_count,cnot_depth,regime";

std::string bench_row(MultMethod method, int n, int p, std::uint64_t N, Regime regime) {
  const MultiplyPlan pl = plan(method, n, p, N);
  const ResourceReport r = method_resources(pl, regime);
  std::ostringstream os;
  os << to_string(method) << ',' << n << ',' << p << ',';
  if (method == MultMethod::kQRound) os << N;
  os << ',';
  if (pl.n_tilde) os << *pl.n_tilde;
  os << ',' << r.additional_qubits << ',' << r.uncomputed_ancillas << ',' << r.t_count << ','
     << r.t_depth << ',' << r.cnot_count << ',' << r.cnot_depth << ',' << to_string(regime);
  return os.str();
}

std::string gnuplot_script(const std::string& csv, const std::string& mode) {
  const bool sizes = mode == "size-sweep";
  std::ostringstream os;
  os << "# schema_version: " << kSchemaVersion << "\n"
     << "set datafile separator ','\n"
     << "set key top left\n"
     << "set xlabel '" << (sizes ? "n" : "N") << "'\n"
     << "set ylabel 'T-count'\n";
  if (!sizes) os << "set logscale x\n";
  os << "plot ";
  const char* methods[] = {"exact", "haner", "qround"};
  const char* x = sizes ? "2" : "4";
  for (int i = 0; i < 3; ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << csv << "' using (strcol(1) eq '" << methods[i] << "' ? $" << x
       << " : 1/0):8 with linespoints title '" << methods[i] << "'";
  }
  os << "\n";
  return os.str();
}

int cmd_bench(const BenchArgs& a, const Common& c, std::ostream& out) {
  const Regime regime = regime_from_string(a.regime);
  if (a.mode != "size-sweep" && a.mode != "sample-sweep") {
    throw UsageError("--mode must be size-sweep or sample-sweep, got '" + a.mode + "'");
  }
  if (!a.gnuplot.empty() && (c.output.empty() || c.output == "-")) {
    throw UsageError("--gnuplot needs --output so the script can name the data file");
  }
  std::string text = csv_preamble() + kBenchCsvHeader + "\n";
  const MultMethod methods[] = {MultMethod::kExact, MultMethod::kHaner, MultMethod::kQRound};
  if (a.mode == "size-sweep") {
    for (int n = a.n_min; n <= a.n_max; ++n) {
      for (MultMethod m : methods) text += bench_row(m, n, a.p, a.N, regime) + "\n";
    }
  } else {
    if (!a.sample_counts.empty()) {
      text += bench_row(MultMethod::kExact, a.n, a.p, 0, regime) + "\n";
      text += bench_row(MultMethod::kHaner, a.n, a.p, 0, regime) + "\n";
    }
    for (std::uint64_t N : a.sample_counts) {
      text += bench_row(MultMethod::kQRound, a.n, a.p, N, regime) + "\n";
    }
  }
  emit(c, out, text);
  if (!a.gnuplot.empty()) {
    std::ofstream f(a.gnuplot, std::ios::binary);
    if (!f) throw UsageError("cannot open gnuplot file '" + a.gnuplot + "'");
    f << gnuplot_script(c.output, a.mode);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// reconcile

struct ReconcileArgs {
  int n = 10;
  int m = 10;
  std::string regime = "ft";
  int max_m = 8;
};

json rational_json(const Rational& r) {
  return {{"exact", to_string(r)}, {"decimal", to_double(r)}};
}

json avg_error_record(AvgErrorKind kind, const std::string& name, int m, int l,
                      const Rational& brute) {
  const Rational closed = avg_error(kind, m, l);
  json j = {{"kind", name},
            {"m", m},
            {"closed_form", rational_json(closed)},
            {"brute_force", rational_json(brute)},
            {"match", closed == brute}};
  if (kind == AvgErrorKind::kQSRL) j["l"] = l;
  return j;
}

int cmd_reconcile(const ReconcileArgs& a, const Common& c, std::ostream& out) {
  const Regime regime = regime_from_string(a.regime);
  if (a.max_m < 2 || a.max_m > 16) throw UsageError("--max-m must lie in [2, 16]");
  json j;

  // Composed rounding stage.
  {
    const ResourceReport formula = compose_qr_cost(a.n, a.m, regime);
    const ResourceReport walker = count_resources(
        expand(build(RoundingMethod::qr_comparator(), a.n, a.m), regime), regime, std::nullopt);
    std::optional<std::map<std::string, std::int64_t>> reference;
    if (regime == Regime::kFT && a.n == 10 && a.m == 10) reference = table1_reference();
    j["composed"] = reconciliation_to_json(reconcile(formula, walker, reference, a.n, a.m));
  }
  // Loading block alone.
  j["loading"] = reconciliation_to_json(
      reconcile(loading_cost_qr(a.m, regime),
                count_resources(expand(qr_loading_circuit(a.m), regime), regime, std::nullopt),
                std::nullopt, 0, a.m));
  // Controlled addition alone.
  {
    const Circuit block = macro_block("ctrl_add", {{"n", a.n}, {"carry", 1}});
    j["ctrl_add"] = reconciliation_to_json(
        reconcile(ctrl_add_cost(a.n, regime),
                  count_resources(expand(block, regime), regime, std::nullopt), std::nullopt,
                  a.n, 0));
  }
  // Addend schedules for the truncated multiplier.
  {
    const FxFormat fmt = FxFormat::make(a.n, 0);
    const Rational eps = Rational(a.n) / pow2(a.n);
    json sched;
    for (auto [reading, name] : {std::pair{ScheduleReading::kPerAddend, "per_addend"},
                                 std::pair{ScheduleReading::kLiteral, "literal"}}) {
      const MultiplyPlan pl = plan_general(fmt, fmt, eps, reading);
      int total = 0;
      for (int f : pl.f) total += f;
      sched[name] = {{"f", pl.f}, {"sum", total}, {"lo", pl.lo}, {"n_out", pl.out.n}};
    }
    sched["n"] = a.n;
    sched["eps"] = to_string(eps);
    j["schedule"] = std::move(sched);
  }
  // Average errors.
  {
    json rows = json::array();
    for (int m = 2; m <= a.max_m; ++m) {
      rows.push_back(
          avg_error_record(AvgErrorKind::kRD, "rd", m, 1, brute_force_avg_error_round_down(m)));
      rows.push_back(avg_error_record(AvgErrorKind::kQSR, "qsr", m, 1,
                                      brute_force_avg_error(RoundingMethod::semi_round(), m)));
      for (int l = 1; l <= m - 1; ++l) {
        rows.push_back(
            avg_error_record(AvgErrorKind::kQSRL, "qsr_l", m, l,
                             brute_force_avg_error(RoundingMethod::semi_round_l(l), m)));
      }
    }
    j["avg_error"] = std::move(rows);
  }
  emit(c, out, dump(versioned(std::move(j))));
  return kOk;
}

// ---------------------------------------------------------------------------
// circuit

struct CircuitArgs {
  std::string method = "qr-comparator";
  int l = 0;
  int n = 4;
  int m = 4;
  int p = 0;
  std::uint64_t constant = 1;
  std::string mult = "haner";
  std::uint64_t N = 10000;
  bool expand = false;
  std::string regime = "ft";
  bool resources = false;
};

Circuit make_circuit(const CircuitArgs& a) {
  if (a.method == "adder") return add_registers(a.n);
  if (a.method == "add-const") return add_constant(a.n, a.constant);
  if (a.method == "comparator") return comparator(a.m);
  if (a.method == "ctrl-add") return macro_block("ctrl_add", {{"n", a.n}, {"carry", 1}});
  if (a.method == "loading") return qr_loading_circuit(a.m);
  if (a.method == "multiplier") {
    return build_multiplier(plan(mult_method_from_string(a.mult), a.n, a.p, a.N));
  }
  return build(rounding_method_from_string(a.method, a.l), a.n, a.m);
}

int cmd_circuit(const CircuitArgs& a, const Common& c, std::ostream& out) {
  const Regime regime = regime_from_string(a.regime);
  Circuit circuit = make_circuit(a);
  if (a.expand) circuit = expand(circuit, regime);
  json j = {{"method", a.method}, {"circuit", circuit_to_json(circuit)}};
  if (a.resources) {
    j["resources"] = report_to_json(
        count_resources(a.expand ? circuit : expand(circuit, regime), regime, pow2(-a.m)));
  }
  emit(c, out, dump(versioned(std::move(j))));
  return kOk;
}

void add_common(CLI::App* app, Common& c, bool with_format) {
  app->add_option("-o,--output", c.output, "write results to this file instead of stdout");
  if (with_format) {
    app->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum rounding toolkit", "qround"};
  app.require_subcommand(1);

  Common common;
  RoundArgs round;
  EstimateArgs estimate;
  BenchArgs bench;
  ReconcileArgs rec;
  CircuitArgs circ;

  auto* r = app.add_subcommand("round", "sample a rounding method on one value");
  r->add_option("--value", round.value, "value as <int>.<frac>|<remainder>")->required();
  r->add_option("--method", round.method, "rounding method");
  r->add_option("--l", round.l, "leading bits for semi-round-l");
  r->add_option("--n", round.n, "expected bit width of the value");
  r->add_option("--samples", round.samples, "number of shots");
  r->add_option("--seed", round.seed, "random seed (default QROUND_SEED or 0)");
  r->add_option("--backend", round.backend, "semantic or circuit")
      ->check(CLI::IsMember({"semantic", "circuit"}));
  r->add_option("--alpha", round.alpha, "failure probability for the bound");
  add_common(r, common, false);

  auto* e = app.add_subcommand("estimate", "resource estimate for a rounding stage");
  e->add_option("--n", estimate.n, "main register width");
  e->add_option("--m", estimate.m, "remainder width");
  e->add_option("--regime", estimate.regime, "ft or nisq");
  e->add_option("--method", estimate.method, "qr-comparator or qsr");
  e->add_option("--eps", estimate.eps, "rotation synthesis accuracy, e.g. 1/1024");
  add_common(e, common, true);

  auto* b = app.add_subcommand("bench", "multiplier cost sweeps as CSV");
  b->add_option("--mode", bench.mode, "size-sweep or sample-sweep");
  b->add_option("--regime", bench.regime, "ft or nisq");
  b->add_option("--p", bench.p, "integer bits");
  b->add_option("--n-min", bench.n_min, "smallest n for size-sweep");
  b->add_option("--n-max", bench.n_max, "largest n for size-sweep");
  b->add_option("--n", bench.n, "n for sample-sweep");
  b->add_option("--N", bench.N, "shots for size-sweep");
  b->add_option("--samples", bench.sample_counts, "shot counts for sample-sweep");
  b->add_option("--gnuplot", bench.gnuplot, "also write a gnuplot script here");
  add_common(b, common, false);

  auto* rc = app.add_subcommand("reconcile", "formula vs circuit vs reference counts");
  rc->add_option("--n", rec.n, "main register width");
  rc->add_option("--m", rec.m, "remainder width");
  rc->add_option("--regime", rec.regime, "ft or nisq");
  rc->add_option("--max-m", rec.max_m, "largest m for average-error records");
  add_common(rc, common, false);

  auto* ci = app.add_subcommand("circuit", "emit a circuit as JSON");
  ci->add_option("--method", circ.method,
                 "rounding method, adder, add-const, comparator, ctrl-add, loading or "
                 "multiplier");
  ci->add_option("--l", circ.l, "leading bits for semi-round-l");
  ci->add_option("--n", circ.n, "main width");
  ci->add_option("--m", circ.m, "remainder or comparator width");
  ci->add_option("--p", circ.p, "integer bits for multiplier");
  ci->add_option("--c", circ.constant, "constant for add-const");
  ci->add_option("--mult", circ.mult, "exact, haner or qround");
  ci->add_option("--N", circ.N, "shots for qround multiplier");
  ci->add_flag("--expand", circ.expand, "expand macros to primitive gates");
  ci->add_option("--regime", circ.regime, "ft or nisq");
  ci->add_flag("--resources", circ.resources, "include a resource count");
  add_common(ci, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (r->parsed()) return cmd_round(round, common, out);
    if (e->parsed()) return cmd_estimate(estimate, common, out);
    if (b->parsed()) return cmd_bench(bench, common, out);
    if (rc->parsed()) return cmd_reconcile(rec, common, out);
    if (ci->parsed()) return cmd_circuit(circ, common, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qround::cli
