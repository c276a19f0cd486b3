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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "olcqubo/error.hpp"
#include "olcqubo/qubo.hpp"

namespace olcqubo {

struct BruteForceOptions {
  std::size_t max_spins = 24;
};

struct GroundStates {
  Coefficient ground_energy = 0;
  std::vector<SpinConfiguration> configs;  // lexicographic, -1 < +1

  double energy() const { return to_double(ground_energy); }
};

/// Exhaustive minimization over all 2^n spin configurations.
///
/// Coefficients are scaled to integers by the common denominator, and the
/// enumeration walks a Gray code, so every energy comparison is exact.
inline GroundStates brute_force(const IsingProblem& m, BruteForceOptions options = {}) {
  const auto n = m.n;
  if (n > options.max_spins || n > 62)
    throw TooLargeError("exhaustive search is capped at " + std::to_string(options.max_spins) +
                        " spins but the problem has " + std::to_string(n) +
                        "; use the simcim solver instead");

  std::int64_t denom = m.offset.denominator();
  for (const auto& [_, c] : m.linear) denom = std::lcm(denom, c.denominator());
  for (const auto& [_, c] : m.quadratic) denom = std::lcm(denom, c.denominator());
  auto scaled = [denom](const Coefficient& c) { return c.numerator() * (denom / c.denominator()); };

  std::vector<std::int64_t> h(n, 0);
  for (const auto& [i, c] : m.linear) h[i] = scaled(c);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> nbr(n);
  for (const auto& [ij, c] : m.quadratic) {
    nbr[ij.first].push_back({ij.second, scaled(c)});
    nbr[ij.second].push_back({ij.first, scaled(c)});
  }

  // Start from all spins -1 (mask 0); bit i set means spin i is +1.
  std::vector<std::int8_t> s(n, -1);
  std::vector<std::int64_t> field(n);  // h_i + sum_j J_ij s_j
  std::int64_t e = scaled(m.offset);
  for (std::size_t i = 0; i < n; ++i) {
    field[i] = h[i];
    for (auto [j, w] : nbr[i]) field[i] -= w;
    e -= h[i];
  }
  for (const auto& [ij, c] : m.quadratic) e += scaled(c);

  std::uint64_t mask = 0;
  std::int64_t best = e;
  std::vector<std::uint64_t> minimizers{mask};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto i = static_cast<std::size_t>(std::countr_zero(step));
    e -= 2 * s[i] * field[i];
    s[i] = static_cast<std::int8_t>(-s[i]);
    mask ^= std::uint64_t{1} << i;
    for (auto [j, w] : nbr[i]) field[j] += 2 * w * s[i];
    if (e < best) {
      best = e;
      minimizers.assign(1, mask);
    } else if (e == best) {
      minimizers.push_back(mask);
    }
  }

  GroundStates out;
  out.ground_energy = Coefficient(best, denom);
  out.configs.reserve(minimizers.size());
  for (auto bits : minimizers) {
    std::vector<std::int8_t> spins(n);
    for (std::size_t i = 0; i < n; ++i) spins[i] = (bits >> i) & 1 ? 1 : -1;
    out.configs.emplace_back(std::move(spins));
  }
  std::sort(out.configs.begin(), out.configs.end());
  return out;
}

}  // namespace olcqubo
