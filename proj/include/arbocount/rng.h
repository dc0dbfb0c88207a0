// Copyright 2026 The Arbocount Authors.
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

#ifndef ARBOCOUNT_RNG_H_
#define ARBOCOUNT_RNG_H_

#include <cstdint>
#include <random>

namespace arbocount {

// Seedable 64-bit generator with deterministic child streams.
//
// Stream-split rule: Split() draws one 64-bit word from this stream and seeds
// the child with SplitMix64 of that word. Every procedure invocation
// (Approx-Cliques run, Is-Active call, Sample-a-Set call) receives its own
// child, so a whole run is reproducible from the root seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix(seed)) {}

  Rng Split() { return Rng(engine_()); }

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [lo, hi]. Lemire's multiply-and-reject, exact for any range.
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return lo + engine_();
    const std::uint64_t range = span + 1;
    unsigned __int128 product = static_cast<unsigned __int128>(engine_()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
      const std::uint64_t floor = (0 - range) % range;
      while (low < floor) {
        product = static_cast<unsigned __int128>(engine_()) * range;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return lo + static_cast<std::uint64_t>(product >> 64);
  }

  // Uniform in [0, 1) on the 2^-53 grid.
  double UniformReal() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  static std::uint64_t Mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace arbocount

#endif  // ARBOCOUNT_RNG_H_
