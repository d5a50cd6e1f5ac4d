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
#include <stdexcept>
#include <string>
#include <string_view>

#include "qround/rational.hpp"
#include "qround/rng.hpp"

namespace qround {

class FxpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounding up an all-ones register would need an (n+1)-th bit.
class SaturationError : public FxpError {
 public:
  using FxpError::FxpError;
};

// Largest n+m supported by the 64-bit bit container.
inline constexpr int kMaxTotalBits = 62;

/// Unsigned fixed-point layout: n bits in total, p of them integer bits.
struct FxFormat {
  int n = 1;
  int p = 0;

  static FxFormat make(int n, int p);

  int frac_bits() const { return n - p; }
  /// Value of one unit in the last place, 2^-(n-p).
  Rational ulp() const { return pow2(-frac_bits()); }
  /// Truncation error bound, 2^-(n-p).
  Rational eps_rd() const { return ulp(); }
  /// Round-to-nearest error bound as stated alongside the truncation bound,
  /// 2^-(n-p-1).
  Rational eps_rn() const { return pow2(1 - frac_bits()); }
  /// Half-ulp round-to-nearest bound, 2^-(n-p+1).
  Rational eps_rn_half_ulp() const { return pow2(-frac_bits() - 1); }

  friend bool operator==(const FxFormat&, const FxFormat&) = default;
};

/// An n-bit fixed-point number. bits < 2^n, bit 0 least significant.
struct FxValue {
  FxFormat format;
  std::uint64_t bits = 0;

  Rational value() const { return Rational(bits) * format.ulp(); }
  friend bool operator==(const FxValue&, const FxValue&) = default;
};

/// An n-bit format extended by m remainder bits. The low m bits of `bits`
/// are the remainder; the high n bits are the truncated value.
class ExtendedValue {
 public:
  ExtendedValue(FxFormat format, int m, std::uint64_t bits);

  /// Parses "<int bits>.<frac bits>|<remainder bits>", e.g. "01.0110|101".
  /// Either side of the point may be empty; the remainder may be empty.
  static ExtendedValue parse(std::string_view text);
  std::string to_string() const;

  const FxFormat& format() const { return format_; }
  int m() const { return m_; }
  std::uint64_t bits() const { return bits_; }
  int width() const { return format_.n + m_; }

  std::uint64_t remainder_bits() const;
  /// The truncated n-bit value.
  FxValue floor() const;
  /// Exact value: bits * 2^-(n-p+m).
  Rational value() const;

  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

 private:
  FxFormat format_;
  int m_;
  std::uint64_t bits_;
};

/// r = remainder / 2^m. Throws FxpError when m == 0.
Rational remainder(const ExtendedValue& v);

enum class RoundMode { kDown, kUp, kNearest, kStochastic, kExpectedLoad };

/// Classical rounding of v to its n-bit format. Nearest breaks ties upward.
/// kStochastic and kExpectedLoad consume one draw from rng.
/// Throws SaturationError if rounding up would overflow n bits.
FxValue classical_round(const ExtendedValue& v, RoundMode mode,
                        CounterRng* rng = nullptr);

/// (x_up / n) * eps_rd + floor, exactly.
Rational estimate_from_samples(std::uint64_t x_up, std::uint64_t n_samples,
                               const Rational& eps_rd, const Rational& floor);

}  // namespace qround
