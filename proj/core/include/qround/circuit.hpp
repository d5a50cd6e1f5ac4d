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
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qround/rational.hpp"

namespace qround {

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind {
  kX,
  kH,
  kCNOT,
  kToffoli,
  kSWAP,
  kCSWAP,
  kRY,
  kCRY,
  // Rotation of the last operand whose angle is set by the basis value j of
  // the preceding k control qubits (LSB first): 2*asin(sqrt(j / 2^k)).
  kRegisterRY,
  kMeasureZ,
  kConditionalReset,
  kMacro,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Symbolic rotation angle. Never collapsed to a double inside the IR.
struct Angle {
  enum class Kind {
    kPiMultiple,  // coeff * pi
    kAsinSqrt,    // 2 * asin(sqrt(coeff)), coeff in [0, 1]
  };
  Kind kind = Kind::kPiMultiple;
  Rational coeff = 0;
  bool negated = false;

  static Angle pi_multiple(Rational c) { return {Kind::kPiMultiple, c, false}; }
  /// The RY angle that puts probability p on |1>.
  static Angle asin_sqrt(Rational p) { return {Kind::kAsinSqrt, p, false}; }

  double radians() const;
  Angle inverse() const { return {kind, coeff, !negated}; }

  friend bool operator==(const Angle&, const Angle&) = default;
};

/// One instruction. Operand order: controls first, then target(s).
/// CSWAP is (control, a, b); SWAP is (a, b).
struct Gate {
  GateKind kind = GateKind::kX;
  std::vector<int> qubits;
  std::optional<Angle> angle;
  int cbit = -1;  // MeasureZ writes it, ConditionalReset reads it.
  std::string name;  // macro name
  std::map<std::string, std::int64_t> params;  // macro parameters

  static Gate make(GateKind k, std::vector<int> q, std::optional<Angle> a = std::nullopt) {
    Gate g;
    g.kind = k;
    g.qubits = std::move(q);
    g.angle = std::move(a);
    return g;
  }
  static Gate x(int q) { return make(GateKind::kX, {q}); }
  static Gate h(int q) { return make(GateKind::kH, {q}); }
  static Gate cnot(int c, int t) { return make(GateKind::kCNOT, {c, t}); }
  static Gate toffoli(int c0, int c1, int t) { return make(GateKind::kToffoli, {c0, c1, t}); }
  static Gate swap(int a, int b) { return make(GateKind::kSWAP, {a, b}); }
  static Gate cswap(int c, int a, int b) { return make(GateKind::kCSWAP, {c, a, b}); }
  static Gate ry(int t, Angle a) { return make(GateKind::kRY, {t}, a); }
  static Gate cry(int c, int t, Angle a) { return make(GateKind::kCRY, {c, t}, a); }
  static Gate register_ry(std::vector<int> controls, int target);
  static Gate measure(int q, int cbit);
  static Gate conditional_reset(int q, int cbit);
  static Gate macro(std::string name, std::vector<int> qubits,
                    std::map<std::string, std::int64_t> params);

  bool is_classical_reversible() const;
  bool is_measurement() const {
    return kind == GateKind::kMeasureZ || kind == GateKind::kConditionalReset;
  }
  /// Last operand for single-target gates.
  int target() const { return qubits.back(); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class RegisterRole {
  kData,        // carried in from the surrounding computation
  kAdditional,  // new qubits the construction needs
  kAncilla,     // workspace that is returned to |0> or left as garbage
};

std::string_view to_string(RegisterRole role);
RegisterRole register_role_from_string(std::string_view name);

struct Register {
  std::string name;
  int start = 0;
  int size = 0;
  RegisterRole role = RegisterRole::kData;

  int operator[](int i) const { return start + i; }
  std::vector<int> qubits() const;
  friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered gate list over a fixed set of named qubit registers.
class Circuit {
 public:
  Circuit() = default;

  /// Adds `size` fresh qubits as a named register.
  Register add_register(std::string name, int size,
                        RegisterRole role = RegisterRole::kData);
  int add_clbit() { return num_clbits_++; }

  void append(Gate g);
  /// Appends `sub` with sub-qubit i mapped to qubit_map[i]. Classical bits
  /// of `sub` are appended as fresh bits.
  void append(const Circuit& sub, std::span<const int> qubit_map);

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::vector<Register>& registers() const { return registers_; }
  const Register& reg(std::string_view name) const;
  bool has_register(std::string_view name) const;
  const std::vector<Gate>& gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }

  /// Reversed gate list with rotations negated. Throws on measurements.
  Circuit inverse() const;
  /// Same registers, no gates.
  Circuit skeleton() const;
  /// Copy with the gate list replaced.
  Circuit with_gates(std::vector<Gate> gates) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const Gate& g) const;

  int num_qubits_ = 0;
  int num_clbits_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
};

// ---------------------------------------------------------------------------
// Expansion.

enum class Regime { kFT, kNISQ };
std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

using MacroExpander = std::function<std::vector<Gate>(const Gate&)>;

class MacroTable {
 public:
  void add(std::string name, MacroExpander fn) { table_[std::move(name)] = std::move(fn); }
  const MacroExpander* find(const std::string& name) const;

 private:
  std::map<std::string, MacroExpander, std::less<>> table_;
};

/// Macros provided by the block library (comparator, adders).
const MacroTable& standard_macros();

/// Lowers macros, SWAP and CSWAP to X/H/CNOT/Toffoli/RY/CRY/measurement
/// primitives. Toffoli, RY, CRY and kRegisterRY stay as terminal cost units.
Circuit expand(const Circuit& c, Regime regime, const MacroTable& macros);
Circuit expand(const Circuit& c, Regime regime);

// ---------------------------------------------------------------------------
// Resource counting.

struct ResourceReport {
  Regime regime = Regime::kFT;
  std::int64_t additional_qubits = 0;
  std::int64_t uncomputed_ancillas = 0;
  std::int64_t t_count = 0;
  std::int64_t t_depth = 0;
  std::int64_t cnot_count = 0;
  std::int64_t cnot_depth = 0;
  std::int64_t two_qubit_count = 0;
  std::int64_t two_qubit_depth = 0;
  std::int64_t single_qubit_count = 0;
  std::int64_t single_qubit_depth = 0;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

/// Per-unit charges of the cost model.
struct CostModel {
  // Fault-tolerant Toffoli.
  int toffoli_t_count = 4;
  int toffoli_t_depth = 1;
  int toffoli_cnot_count = 10;
  int toffoli_cnot_depth = 5;
  int toffoli_ancillas = 2;
  // Fault-tolerant controlled RY.
  int cry_cnot_count = 4;
  int cry_cnot_depth = 4;
  int cry_ancillas = 1;
  // NISQ Toffoli in native two-qubit gates.
  int nisq_toffoli_two_qubit = 5;

  static const CostModel& standard();
};

/// ceil(1.149 * log2(1/eps) + 9.2): average T-count (and T-depth) of one
/// repeat-until-success RY of precision eps.
std::int64_t rotation_t_cost(const Rational& eps);

enum class GateClass { kT, kCNOT, kTwoQubit, kSingleQubit, kAny };

/// Walks an expanded circuit: counts are sums of per-gate charges, depths
/// are as-soon-as-possible layerings where each unit occupies its charged
/// depth on all of its operands (classical bits included).
ResourceReport count_resources(const Circuit& c, Regime regime,
                               std::optional<Rational> rotation_eps,
                               const CostModel& model = CostModel::standard());

std::int64_t count_by_class(const Circuit& c, GateClass cls,
                            Regime regime = Regime::kFT,
                            std::optional<Rational> rotation_eps = std::nullopt);
std::int64_t depth_by_class(const Circuit& c, GateClass cls,
                            Regime regime = Regime::kFT,
                            std::optional<Rational> rotation_eps = std::nullopt);

/// ASAP layering with unit depth per gate; each layer lists gate indices.
std::vector<std::vector<std::size_t>> layers(const Circuit& c);

/// Number of gates of one kind.
std::int64_t count_kind(const Circuit& c, GateKind kind);

}  // namespace qround
