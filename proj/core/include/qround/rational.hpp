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

#include <boost/multiprecision/cpp_int.hpp>

namespace qround {

// Exact rationals, always in reduced form with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^e for any integer e (negative exponents give 1/2^|e|).
inline Rational pow2(int e) {
  Integer one = 1;
  if (e >= 0) return Rational(one << e);
  return Rational(Integer(1), one << (-e));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ceil(log2(x)) for x >= 1.
inline int ceil_log2(std::uint64_t x) {
  int k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

// floor(log2(x)) for x >= 1.
inline int floor_log2(std::uint64_t x) {
  int k = -1;
  while (x != 0) {
    x >>= 1;
    ++k;
  }
  return k;
}

}  // namespace qround
