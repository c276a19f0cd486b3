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

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "olcqubo/error.hpp"
#include "olcqubo/qubo.hpp"

namespace olcqubo {

// 12 significant digits.
inline std::string format_coefficient(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline std::string format_coefficient(const Coefficient& c) {
  return format_coefficient(to_double(c));
}

/// QUBO text format:
///
///   # free-form metadata lines
///   p qubo <n> <m_linear> <m_quadratic>
///   i i <c>      one per linear term
///   i j <c>      one per quadratic term, i < j
///   c <offset>
inline void write_qubo_text(std::ostream& out, const QuboProblem& q,
                            const std::vector<std::string>& comments = {}) {
  for (const auto& line : comments) out << "# " << line << '\n';
  out << "p qubo " << q.n << ' ' << q.linear.size() << ' ' << q.quadratic.size() << '\n';
  for (const auto& [i, c] : q.linear) out << i << ' ' << i << ' ' << format_coefficient(c) << '\n';
  for (const auto& [ij, c] : q.quadratic)
    out << ij.first << ' ' << ij.second << ' ' << format_coefficient(c) << '\n';
  out << "c " << format_coefficient(q.offset) << '\n';
}

/// Parses the text format. Coefficients are read as exact decimals, so a
/// problem written with short decimal coefficients round-trips exactly.
inline QuboProblem read_qubo_text(std::istream& in) {
  QuboProblem q;
  std::string line;
  std::size_t line_no = 0, want_linear = 0, want_quadratic = 0;
  bool header = false, offset = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == "p") {
      std::string kind;
      if (header) throw ParseError("duplicate header", line_no);
      if (!(ls >> kind >> q.n >> want_linear >> want_quadratic) || kind != "qubo")
        throw ParseError("malformed header, expected 'p qubo n m_linear m_quadratic'", line_no);
      header = true;
      continue;
    }
    if (!header) throw ParseError("term before 'p qubo' header", line_no);
    std::string a, b;
    try {
      if (first == "c") {
        if (!(ls >> a)) throw ParseError("missing offset value", line_no);
        q.offset = parse_coefficient(a);
        offset = true;
        continue;
      }
      if (!(ls >> b >> a)) throw ParseError("expected 'i j coefficient'", line_no);
      const auto i = std::stoul(first), j = std::stoul(b);
      if (i >= q.n || j >= q.n) throw ParseError("variable index out of range", line_no);
      if (i > j) throw ParseError("quadratic terms must have i < j", line_no);
      const auto c = parse_coefficient(a);
      if (i == j) q.add_linear(i, c);
      else q.add_pair(i, j, c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!header) throw ParseError("missing 'p qubo' header", line_no);
  if (!offset) throw ParseError("missing 'c <offset>' line", line_no);
  if (q.linear.size() != want_linear || q.quadratic.size() != want_quadratic)
    throw ParseError("term counts do not match header", line_no);
  return q;
}

}  // namespace olcqubo
