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
#include <limits>

namespace qround {

/// Counter-based generator. Every draw is a pure function of
/// (seed, stream, index), so shots can be evaluated in any order or in
/// parallel and still reproduce bit-for-bit.
///
/// The stateful interface satisfies UniformRandomBitGenerator and walks
/// the index forward from zero.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return at(seed_, stream_, index_++); }

  /// Uniform double in [0, 1) from the next counter value.
  double uniform() { return uniform_at(seed_, stream_, index_++); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return index_; }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index);
  static double uniform_at(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
};

}  // namespace qround
