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

#include "qround/fxp.hpp"

#include <string>

namespace qround {
namespace {

std::uint64_t parse_bits(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw FxpError("invalid character '" + std::string(1, c) + "' in " +
                     std::string(what) + " bits");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

void append_bits(std::string& out, std::uint64_t v, int width) {
  for (int i = width - 1; i >= 0; --i) out.push_back(((v >> i) & 1) ? '1' : '0');
}

}  // namespace

FxFormat FxFormat::make(int n, int p) {
  if (n < 1) throw FxpError("format needs n >= 1, got " + std::to_string(n));
  if (p < 0 || p > n) {
    throw FxpError("format needs 0 <= p <= n, got p=" + std::to_string(p) +
                   " n=" + std::to_string(n));
  }
  return FxFormat{n, p};
}

ExtendedValue::ExtendedValue(FxFormat format, int m, std::uint64_t bits)
    : format_(FxFormat::make(format.n, format.p)), m_(m), bits_(bits) {
  if (m < 0) throw FxpError("remainder width must be >= 0");
  if (width() > kMaxTotalBits) {
    throw FxpError("n+m = " + std::to_string(width()) + " exceeds " +
                   std::to_string(kMaxTotalBits));
  }
  if ((bits >> width()) != 0) throw FxpError("bits do not fit in n+m bits");
}

ExtendedValue ExtendedValue::parse(std::string_view text) {
  auto dot = text.find('.');
  if (dot == std::string_view::npos) throw FxpError("missing '.' in value");
  auto bar = text.find('|', dot);
  if (bar == std::string_view::npos) throw FxpError("missing '|' in value");
  std::string_view ip = text.substr(0, dot);
  std::string_view fp = text.substr(dot + 1, bar - dot - 1);
  std::string_view rp = text.substr(bar + 1);
  int p = static_cast<int>(ip.size());
  int n = p + static_cast<int>(fp.size());
  int m = static_cast<int>(rp.size());
  if (n + m > kMaxTotalBits) throw FxpError("value too wide");
  std::uint64_t bits = parse_bits(ip, "integer");
  bits = (bits << fp.size()) | parse_bits(fp, "fraction");
  bits = (bits << rp.size()) | parse_bits(rp, "remainder");
  return ExtendedValue(FxFormat::make(n, p), m, bits);
}

std::string ExtendedValue::to_string() const {
  std::string out;
  std::uint64_t top = bits_ >> m_;
  append_bits(out, top >> format_.frac_bits(), format_.p);
  out.push_back('.');
  append_bits(out, top, format_.frac_bits());
  out.push_back('|');
  append_bits(out, bits_, m_);
  return out;
}

std::uint64_t ExtendedValue::remainder_bits() const {
  return m_ == 0 ? 0 : bits_ & ((std::uint64_t{1} << m_) - 1);
}

FxValue ExtendedValue::floor() const { return FxValue{format_, bits_ >> m_}; }

Rational ExtendedValue::value() const {
  return Rational(bits_) * pow2(-(format_.frac_bits() + m_));
}

Rational remainder(const ExtendedValue& v) {
  if (v.m() == 0) throw FxpError("no remainder bits");
  return Rational(v.remainder_bits()) * pow2(-v.m());
}

FxValue classical_round(const ExtendedValue& v, RoundMode mode,
                        CounterRng* rng) {
  const FxValue down = v.floor();
  const std::uint64_t rem = v.remainder_bits();
  bool go_up = false;
  switch (mode) {
    case RoundMode::kDown:
      break;
    case RoundMode::kUp:
      go_up = rem != 0;
      break;
    case RoundMode::kNearest:
      // Ties (r == 1/2) round up.
      go_up = v.m() > 0 && rem >= (std::uint64_t{1} << (v.m() - 1));
      break;
    case RoundMode::kStochastic:
      if (rng == nullptr) throw FxpError("stochastic rounding needs an rng");
      go_up = rem != 0 && rng->uniform() < 0.5;
      break;
    case RoundMode::kExpectedLoad:
      if (rng == nullptr) throw FxpError("expected-load rounding needs an rng");
      if (rem != 0) {
        // rem / 2^m is exact in a double for m <= 53.
        go_up = rng->uniform() < to_double(remainder(v));
      }
      break;
  }
  if (!go_up) return down;
  const std::uint64_t top = std::uint64_t{1} << v.format().n;
  if (down.bits + 1 >= top) {
    throw SaturationError("rounding up " + v.to_string() +
                          " overflows the " + std::to_string(v.format().n) +
                          "-bit register");
  }
  return FxValue{down.format, down.bits + 1};
}

Rational estimate_from_samples(std::uint64_t x_up, std::uint64_t n_samples,
                               const Rational& eps_rd, const Rational& floor) {
  if (n_samples == 0) throw FxpError("estimate needs at least one sample");
  if (x_up > n_samples) throw FxpError("round-up count exceeds sample count");
  return Rational(Integer(x_up), Integer(n_samples)) * eps_rd + floor;
}

}  // namespace qround
