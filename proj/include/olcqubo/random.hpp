// Copyright 2026 The olcqubo Authors
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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace olcqubo {

/// Identifier written into every output's metadata block.
///
/// Streams are std::mt19937_64 engines. Child seeds are derived from a master
/// seed with FNV-1a over the stage name followed by SplitMix64 finalization
/// of each index. Uniform doubles take the top 53 bits of one draw; Gaussian
/// draws use the Box-Muller transform on two uniforms (both outputs used). None of
/// this goes through std::*_distribution, whose output is
/// implementation-defined.
inline constexpr std::string_view kPrngId =
    "mt19937_64+fnv1a-splitmix64-derive+box-muller";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// derive_seed(master, "stage", i, j, ...) gives an independent stream seed.
template <class... Indices>
std::uint64_t derive_seed(std::uint64_t master, std::string_view stage,
                          Indices... indices) {
  std::uint64_t s = splitmix64(master ^ fnv1a(stage));
  ((s = splitmix64(s ^ static_cast<std::uint64_t>(indices))), ...);
  return s;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, 1, 2, 3}.
  unsigned quaternary() { return static_cast<unsigned>(engine_() >> 62); }

  // Uniform on [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  double normal(double sigma) {
    if (has_spare_) {
      has_spare_ = false;
      return sigma * spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    has_spare_ = true;
    return sigma * r * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace olcqubo
