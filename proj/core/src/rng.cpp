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

#include "qround/rng.hpp"

namespace qround {
namespace {

// splitmix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t CounterRng::at(std::uint64_t seed, std::uint64_t stream,
                             std::uint64_t index) {
  std::uint64_t key = mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL));
  return mix(key ^ mix(index));
}

double CounterRng::uniform_at(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t index) {
  // 53 high bits -> [0, 1).
  return static_cast<double>(at(seed, stream, index) >> 11) * 0x1.0p-53;
}

}  // namespace qround
