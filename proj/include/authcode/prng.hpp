// Copyright 2026 The authcode Authors
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

#ifndef AUTHCODE_PRNG_HPP_
#define AUTHCODE_PRNG_HPP_

#include <cstdint>
#include <random>

namespace authcode {

// Seeded generator with a fixed stream: std::mt19937_64 (whose output
// sequence the standard pins down) seeded with the 64-bit seed directly.
// uniform(n) draws 64-bit words and rejects those at or above the largest
// multiple of n, then returns word % n. std::uniform_int_distribution is
// avoided because its algorithm differs between standard libraries.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n must be nonzero.
  std::uint64_t uniform(std::uint64_t n) {
    // 2^64 mod n words at the top are rejected.
    const std::uint64_t excess = (UINT64_MAX % n + 1) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (excess != 0 && x > UINT64_MAX - excess);
    return x % n;
  }

  // Child seed for trial `index`, so trial streams do not overlap in use.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finaliser over seed + golden-ratio stride.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace authcode

#endif  // AUTHCODE_PRNG_HPP_
