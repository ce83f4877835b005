// Copyright 2026 The fairsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSYNTH_RNG_HPP_
#define FAIRSYNTH_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

#include "fairsynth/error.hpp"

namespace fairsynth {

// Seeded pseudo-random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and every variate transform below is
// implemented explicitly (inverse CDF, Box-Muller) instead of going through
// std::*_distribution, whose algorithms are implementation-defined. Identical
// seeds therefore produce identical streams on any conforming toolchain.
// Transcendental calls (log, cos) follow the platform libm, so bit-level
// reproducibility is guaranteed per binary, not across different libm builds.
class Randomness {
 public:
  explicit Randomness(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1), both endpoints excluded; safe under log().
  double uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n) by rejection.
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw Error("uniform_index: n must be positive");
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::size_t>(x % span);
  }

  // Standard normal via Box-Muller. Consumes two uniforms per call so the
  // stream position does not depend on a cached spare.
  double normal() {
    const double u1 = uniform_open01();
    const double u2 = uniform_open01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

  // Laplace(0, scale) via inverse CDF.
  double laplace(double scale) {
    const double u = uniform_open01() - 0.5;  // (-0.5, 0.5)
    return -scale * (u < 0 ? -1.0 : 1.0) * std::log(1.0 - 2.0 * std::abs(u));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

// splitmix64 finalizer; the standard way to decorrelate nearby seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Derives a child seed from a base seed and a coordinate list by folding each
// word through splitmix64. This is the single seed-derivation rule used
// everywhere: matrix cells, undersampling draws, synthesizer sub-streams.
inline std::uint64_t mix_seed(std::uint64_t base,
                              std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = detail::splitmix64(base);
  for (std::uint64_t w : words) h = detail::splitmix64(h ^ w);
  return h;
}

}  // namespace fairsynth

#endif  // FAIRSYNTH_RNG_HPP_
