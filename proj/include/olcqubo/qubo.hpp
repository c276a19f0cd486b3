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

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Boost 1.74's mixed rational/integer operator== recurses forever under C++20
// rewritten comparisons. Plain overloads win overload resolution and break
// the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == rational<std::int64_t>(b);
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
inline bool operator==(long long b, const rational<std::int64_t>& a) { return a == b; }
}  // namespace boost

namespace olcqubo {

// Coefficients are exact rationals. Penalty expansions produce integers
// times A and the spin transform introduces halves and quarters, so
// energy-preservation checks can be exact.
using Coefficient = boost::rational<std::int64_t>;
using VarIndex = std::size_t;
using VarPair = std::pair<VarIndex, VarIndex>;  // first < second

inline double to_double(const Coefficient& c) {
  return boost::rational_cast<double>(c);
}

inline Coefficient abs(const Coefficient& c) { return c < 0 ? -c : c; }

/// Parses a decimal literal ("3", "-0.25", "1.5e-3") into an exact rational.
inline Coefficient parse_coefficient(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
  std::int64_t num = 0, den = 1;
  bool digits = false, dot = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c >= '0' && c <= '9') {
      if (num > (INT64_MAX - 9) / 10) throw std::invalid_argument("coefficient too precise: " + text);
      num = num * 10 + (c - '0');
      if (dot) {
        if (den > INT64_MAX / 10) throw std::invalid_argument("coefficient too precise: " + text);
        den *= 10;
      }
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("not a number: '" + text + "'");
  Coefficient value(negative ? -num : num, den);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    const auto rest = text.substr(pos + 1);
    std::size_t used = 0;
    const auto exponent = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("not a number: '" + text + "'");
    if (exponent > 18 || exponent < -18) throw std::invalid_argument("exponent out of range: " + text);
    std::int64_t scale = 1;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
    value = exponent < 0 ? value / scale : value * scale;
  } else if (pos != text.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

namespace detail {

// Shared storage for polynomials of degree <= 2 with canonical keys.
struct QuadraticForm {
  std::size_t n = 0;
  std::map<VarIndex, Coefficient> linear;
  std::map<VarPair, Coefficient> quadratic;
  Coefficient offset = 0;

  void add_linear(VarIndex i, const Coefficient& c) {
    check(i);
    linear[i] += c;
  }

  void add_pair(VarIndex i, VarIndex j, const Coefficient& c) {
    check(i);
    check(j);
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += c;
  }

  void prune() {
    std::erase_if(linear, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(quadratic, [](const auto& kv) { return kv.second == 0; });
  }

  Coefficient max_abs_coefficient() const {
    Coefficient m = 0;
    for (const auto& [_, c] : linear) m = std::max(m, abs(c));
    for (const auto& [_, c] : quadratic) m = std::max(m, abs(c));
    return m;
  }

  // offset + sum_i l_i x_i + sum_{i<j} q_ij x_i x_j over integer values x.
  template <class Value, class Int>
  Value evaluate(std::span<const Int> x) const {
    if (x.size() != n)
      throw std::invalid_argument("configuration has " + std::to_string(x.size()) +
                                  " entries, expected " + std::to_string(n));
    auto cast = [](const Coefficient& c) {
      if constexpr (std::is_same_v<Value, Coefficient>) return c;
      else return to_double(c);
    };
    Value e = cast(offset);
    for (const auto& [i, c] : linear) e += cast(c) * static_cast<int>(x[i]);
    for (const auto& [ij, c] : quadratic)
      e += cast(c) * (static_cast<int>(x[ij.first]) * static_cast<int>(x[ij.second]));
    return e;
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  void check(VarIndex i) const {
    if (i >= n) throw std::out_of_range("variable index " + std::to_string(i) + " out of range");
  }
};

}  // namespace detail

/// Minimize offset + sum linear_i w_i + sum quadratic_ij w_i w_j, w in {0,1}^n.
/// Diagonal terms are folded into `linear` (w*w == w).
struct QuboProblem : detail::QuadraticForm {
  Coefficient penalty = 1;

  void add_quadratic(VarIndex i, VarIndex j, const Coefficient& c) {
    if (i == j) add_linear(i, c);
    else add_pair(i, j, c);
  }

  // Adds weight * (target - sum_{i in vars} w_i)^2.
  void add_squared_deficit(std::span<const VarIndex> vars, const Coefficient& target,
                           const Coefficient& weight) {
    offset += weight * target * target;
    for (std::size_t a = 0; a < vars.size(); ++a) {
      add_linear(vars[a], weight * (1 - 2 * target));
      for (std::size_t b = a + 1; b < vars.size(); ++b) add_quadratic(vars[a], vars[b], 2 * weight);
    }
  }

  template <class Bit>
  Coefficient objective(std::span<const Bit> bits) const {
    return evaluate<Coefficient>(bits);
  }
  template <class Bit>
  double value(std::span<const Bit> bits) const {
    return evaluate<double>(bits);
  }
};

/// Energy offset + sum h_i s_i + sum_{i<j} J_ij s_i s_j over s in {-1,+1}^n.
struct IsingProblem : detail::QuadraticForm {
  const std::map<VarIndex, Coefficient>& h() const { return linear; }
  const std::map<VarPair, Coefficient>& J() const { return quadratic; }

  void add_coupling(VarIndex i, VarIndex j, const Coefficient& c) {
    if (i == j) offset += c;  // s*s == 1
    else add_pair(i, j, c);
  }
};

class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  explicit SpinConfiguration(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
    for (auto s : spins_)
      if (s != 1 && s != -1) throw std::invalid_argument("spin values must be -1 or +1");
  }
  static SpinConfiguration from_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::int8_t> s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? 1 : -1;
    return SpinConfiguration(std::move(s));
  }

  std::size_t size() const { return spins_.size(); }
  std::int8_t operator[](std::size_t i) const { return spins_[i]; }
  std::span<const std::int8_t> spins() const { return spins_; }

  // w = (s + 1) / 2
  std::vector<std::uint8_t> bits() const {
    std::vector<std::uint8_t> b(spins_.size());
    for (std::size_t i = 0; i < spins_.size(); ++i) b[i] = spins_[i] > 0;
    return b;
  }

  SpinConfiguration flipped() const {
    auto s = spins_;
    for (auto& x : s) x = static_cast<std::int8_t>(-x);
    return SpinConfiguration(std::move(s));
  }

  friend auto operator<=>(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

inline double energy(const IsingProblem& m, const SpinConfiguration& c) {
  return m.evaluate<double>(c.spins());
}

inline Coefficient exact_energy(const IsingProblem& m, const SpinConfiguration& c) {
  return m.evaluate<Coefficient>(c.spins());
}

/// Substitutes w_i = (s_i + 1) / 2.
inline IsingProblem qubo_to_ising(const QuboProblem& q) {
  IsingProblem m;
  m.n = q.n;
  m.offset = q.offset;
  for (const auto& [i, c] : q.linear) {
    m.add_linear(i, c / 2);
    m.offset += c / 2;
  }
  for (const auto& [ij, c] : q.quadratic) {
    const auto quarter = c / 4;
    m.add_pair(ij.first, ij.second, quarter);
    m.add_linear(ij.first, quarter);
    m.add_linear(ij.second, quarter);
    m.offset += quarter;
  }
  m.prune();
  return m;
}

/// Substitutes s_i = 2 w_i - 1. The penalty field is left at its default.
inline QuboProblem ising_to_qubo(const IsingProblem& m) {
  QuboProblem q;
  q.n = m.n;
  q.offset = m.offset;
  for (const auto& [i, h] : m.linear) {
    q.add_linear(i, 2 * h);
    q.offset -= h;
  }
  for (const auto& [ij, j] : m.quadratic) {
    q.add_quadratic(ij.first, ij.second, 4 * j);
    q.add_linear(ij.first, -2 * j);
    q.add_linear(ij.second, -2 * j);
    q.offset += j;
  }
  q.prune();
  return q;
}

struct NormalizedIsing {
  IsingProblem problem;
  Coefficient scale = 1;
};

/// Divides h and J (not the offset) by their largest magnitude so that all
/// lie in [-1, 1]. An all-zero problem comes back unchanged with scale 1.
inline NormalizedIsing normalize_ising(const IsingProblem& m) {
  const auto scale = m.max_abs_coefficient();
  if (scale == 0) return {m, 1};
  IsingProblem out = m;
  for (auto& [_, c] : out.linear) c /= scale;
  for (auto& [_, c] : out.quadratic) c /= scale;
  return {std::move(out), scale};
}

// Energy of the original problem given the energy of its normalized form.
inline double denormalize_energy(const NormalizedIsing& n, double normalized_energy) {
  const auto offset = to_double(n.problem.offset);
  return offset + (normalized_energy - offset) * to_double(n.scale);
}

}  // namespace olcqubo
