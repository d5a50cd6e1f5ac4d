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
#include <string>
#include <vector>

#include "qround/circuit.hpp"

namespace qround {

struct AdderSpec {
  int n = 1;
  bool carry_out = true;
};

/// In-place logarithmic-depth carry-lookahead adder:
///   |a>|b>|0..0> -> |a>|a+b mod 2^n>|0..0>, carry-out in register "carry".
///
/// Registers: "a" (n), "b" (n), "z" (n-1 carry ancillas), "p" (propagate
/// ancillas), and "carry" (1) when spec.carry_out is set. Without a carry
/// qubit the top carry is folded into b[n-1].
Circuit add_registers(const AdderSpec& spec);
inline Circuit add_registers(int n) { return add_registers(AdderSpec{n, true}); }

/// Specializes an add_registers() circuit to a classical constant c:
///  1. drop gates controlled on a-qubits whose bit of c is 0,
///  2. drop gates controlled on ancillas that are still |0>,
///  3. cancel adjacent self-inverse pairs until nothing changes,
///  4. replace controls on a-qubits whose bit of c is 1 by nothing,
///  5. remove the a register and cancel pairs once more.
/// The result maps |b> -> |b + c mod 2^n> with the carry-out kept.
Circuit reduce_to_add_constant(const Circuit& adder, std::uint64_t c);

/// Shorthand for reduce_to_add_constant(add_registers(n), c).
Circuit add_constant(int n, std::uint64_t c);

/// Cancels adjacent identical self-inverse gates (X, CNOT, Toffoli, SWAP,
/// CSWAP) to a fixpoint. Two gates are adjacent when no gate between them
/// touches any of their qubits.
Circuit cancel_adjacent_pairs(const Circuit& c);

/// Controls `body` on a new qubit "ctrl". When ctrl is 0 the data of
/// `target_register` is parked in a fresh |0..0> register "park" by two
/// CSWAP layers, and the image of the all-zero input is cleared afterwards.
/// The body must be classical reversible and must map all-zero inputs to
/// a pattern supported on `target_register`.
Circuit make_controlled(const Circuit& body, const std::string& target_register);

/// |a>|b>|0> -> |a>|b>|[a < b]>. Registers "a", "b" (m each), "out" (1),
/// workspace "g" (m) and "p" (m - 1 - ceil(log2 m)).
Circuit comparator(int m);

/// Wraps a block as a macro gate whose operands are the block's qubits in
/// order. Parameters must be enough for the macro table to rebuild it.
Gate block_macro(const std::string& name,
                 const std::map<std::string, std::int64_t>& params,
                 std::vector<int> qubits);

/// Rebuilds the block a macro stands for (same layout as its operands).
/// Known names: comparator{m}, add_registers{n, carry}, add_const{n, c},
/// ctrl_add{n, carry} (addend register parked), ctrl_add_const{n, c}.
Circuit macro_block(const std::string& name,
                    const std::map<std::string, std::int64_t>& params);

/// Runs an X/CNOT/Toffoli/SWAP/CSWAP circuit on a classical bit string.
/// Throws for any other gate.
std::vector<std::uint8_t> simulate_classical(const Circuit& c,
                                             std::vector<std::uint8_t> bits);

/// Reads register `r` out of a classical bit string as an integer.
std::uint64_t read_register(const std::vector<std::uint8_t>& bits, const Register& r);
void write_register(std::vector<std::uint8_t>& bits, const Register& r,
                    std::uint64_t value);

}  // namespace qround
