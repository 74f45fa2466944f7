// Copyright 2026 The FedFog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEDFOG_RNG_HPP_
#define FEDFOG_RNG_HPP_

#include <cstdint>
#include <random>

namespace fedfog {

// Purpose tags for deriving independent random substreams from one master
// seed. Every stochastic site keys its stream by (seed, tag, client, round),
// so simulation results do not depend on iteration order and two sites never
// share a stream.
enum class Stream : std::uint64_t {
  fleet = 1,
  partition = 2,
  test_data = 3,
  drift = 4,
  malicious = 5,
  dropout = 6,
  noise = 7,
  replace = 8,
  dp = 9,
  jitter = 10,
  random_policy = 11,
  bench = 12,
  sweep = 13,
};

// SplitMix64 finalizer; full-period bijective mixer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream tag,
                                    std::uint64_t client = 0,
                                    std::uint64_t round = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ static_cast<std::uint64_t>(tag));
  h = mix64(h ^ client);
  h = mix64(h ^ round);
  return h;
}

inline std::mt19937_64 substream(std::uint64_t seed, Stream tag,
                                 std::uint64_t client = 0,
                                 std::uint64_t round = 0) {
  return std::mt19937_64(derive_seed(seed, tag, client, round));
}

}  // namespace fedfog

#endif  // FEDFOG_RNG_HPP_
