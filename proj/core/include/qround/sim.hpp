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

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qround/circuit.hpp"
#include "qround/fxp.hpp"
#include "qround/rounding.hpp"

namespace qround {

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultQubitCap = 24;
inline constexpr double kAmplitudeCutoff = 1e-14;

struct SimOptions {
  int qubit_cap = kDefaultQubitCap;
  /// Replace measurement and reset by CNOTs onto one extra qubit per
  /// classical bit.
  bool defer_measurements = false;
};

/// Pure state over q qubits; qubit i is bit i of the basis index. Only
/// nonzero amplitudes are stored.
class StateVector {
 public:
  using Amplitude = std::complex<double>;
  using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

  explicit StateVector(int num_qubits, std::uint64_t basis = 0);

  int num_qubits() const { return num_qubits_; }
  Amplitude amplitude(std::uint64_t basis) const;
  const std::unordered_map<std::uint64_t, Amplitude>& support() const { return amps_; }
  /// Full 2^q amplitude array.
  std::vector<Amplitude> dense() const;
  double norm_squared() const;

  /// Applies a unitary primitive (no macros, no measurements).
  void apply(const Gate& g);
  double probability_one(int qubit) const;
  /// Projects onto `value` and renormalizes. Throws if that branch has
  /// zero probability.
  void project(int qubit, bool value);

 private:
  void transform(int target, std::optional<int> control, const Matrix2& u);

  int num_qubits_;
  std::unordered_map<std::uint64_t, Amplitude> amps_;
};

/// Values of the observed registers, in request order, then the classical
/// bits packed little-endian.
using Outcome = std::vector<std::uint64_t>;
using Distribution = std::map<Outcome, double>;

/// Exact outcome distribution from the basis state given by `initial`
/// (register name -> value; unnamed registers start at 0). Mid-circuit
/// measurements branch.
Distribution run(const Circuit& c, const std::map<std::string, std::uint64_t>& initial,
                 const std::vector<std::string>& observe, const SimOptions& options = {});

/// Joint distribution of (main register value including the carry bit,
/// measured rounding flag) for rounding `v` with `method`.
std::map<std::pair<std::uint64_t, int>, double> run_rounding(const RoundingMethod& method,
                                                             const ExtendedValue& v,
                                                             const SimOptions& options = {});

enum class Backend { kSemantic, kCircuit };
std::string_view to_string(Backend b);
Backend backend_from_string(std::string_view s);

/// Probability that one shot rounds up.
double round_up_probability(const RoundingMethod& method, const ExtendedValue& v,
                            Backend backend, const SimOptions& options = {});

struct SampleStats {
  std::uint64_t N = 0;
  std::uint64_t X = 0;
  Rational estimate = 0;
  double chernoff_bound = 0;
  double alpha = 0;
  bool within_bound = false;
  std::uint64_t seed = 0;
};

/// N Bernoulli shots; shot i rounds up when CounterRng::uniform_at(seed, 0, i)
/// falls below the per-shot probability. alpha defaults to 1/N.
SampleStats sample(const RoundingMethod& method, const ExtendedValue& v, std::uint64_t N,
                   std::uint64_t seed, Backend backend,
                   std::optional<double> alpha = std::nullopt,
                   const SimOptions& options = {});

/// {method, n, m, remainder, N, X, estimate, bound, alpha, within_bound, seed}
nlohmann::json sample_to_json(const RoundingMethod& method, const ExtendedValue& v,
                              const SampleStats& stats);

}  // namespace qround
