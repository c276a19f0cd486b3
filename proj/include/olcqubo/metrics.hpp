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
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "olcqubo/simcim.hpp"

namespace olcqubo {

// Annealing time per run on the D-Wave 2000Q default schedule.
inline constexpr double kDWaveAnnealTimeUs = 20.0;

inline constexpr double kHitTolerance = 1e-9;

/// Fraction of attempts whose energy is within 1e-9 of the ground energy.
inline double estimate_theta(const SolveResult& result, double ground_energy) {
  if (result.attempts.empty()) throw std::invalid_argument("result has no attempts");
  std::size_t hits = 0;
  for (const auto& a : result.attempts) hits += a.energy <= ground_energy + kHitTolerance;
  return static_cast<double>(hits) / static_cast<double>(result.attempts.size());
}

namespace detail {

// Runs-to-solution values are reported to 12 significant digits; this also
// keeps identities such as r99(0.9) == 2 exact despite 1 - 0.9 != 0.1 in
// binary floating point.
inline double round_significant(double x, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

}  // namespace detail

/// Runs needed to see the ground state at least once with probability 0.99:
/// log(1 - 0.99) / log(1 - theta). theta == 1 gives 1; theta == 0 gives
/// nullopt, the "unsolved" marker.
inline std::optional<double> r99(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::invalid_argument("theta must lie in [0, 1]");
  if (theta == 0.0) return std::nullopt;
  if (theta == 1.0) return 1.0;
  return detail::round_significant(std::log(0.01) / std::log1p(-theta));
}

/// Time to solution t_a * R99 in the units of t_a.
inline std::optional<double> tts(double theta, double t_a) {
  auto runs = r99(theta);
  if (!runs) return std::nullopt;
  return t_a * *runs;
}

struct TtsReport {
  double theta = 0.0;
  std::optional<double> r99;
  std::optional<double> tts_us;
  double t_a_us = 0.0;
  std::size_t runs = 0;
  std::size_t hits = 0;
};

inline double mean_wall_time_us(const SolveResult& result) {
  if (result.attempts.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& a : result.attempts) sum += a.wall_time_us;
  return sum / static_cast<double>(result.attempts.size());
}

inline TtsReport make_tts_report(const SolveResult& result, double ground_energy, double t_a_us) {
  TtsReport r;
  r.runs = result.attempts.size();
  for (const auto& a : result.attempts) r.hits += a.energy <= ground_energy + kHitTolerance;
  r.theta = estimate_theta(result, ground_energy);
  r.r99 = r99(r.theta);
  r.tts_us = tts(r.theta, t_a_us);
  r.t_a_us = t_a_us;
  return r;
}

struct SummaryStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double p90 = 0.0;  // nearest-rank 90th percentile
  std::size_t count = 0;
};

inline SummaryStats summarize(std::span<const double> values) {
  SummaryStats s;
  s.count = values.size();
  if (values.empty()) return s;
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  s.min = v.front();
  s.max = v.back();
  double sum = 0.0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  const auto rank = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(v.size())));
  s.p90 = v[std::max<std::size_t>(rank, 1) - 1];
  return s;
}

}  // namespace olcqubo
