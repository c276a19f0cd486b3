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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olcqubo/bridges.hpp"
#include "olcqubo/digraph.hpp"
#include "olcqubo/error.hpp"
#include "olcqubo/formulation.hpp"
#include "olcqubo/olc_graph.hpp"
#include "olcqubo/qubo.hpp"

namespace olcqubo {

struct GraphPath {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges_used;

  friend bool operator==(const GraphPath&, const GraphPath&) = default;
};

namespace detail {

inline GraphPath path_through(const Digraph& g, std::vector<VertexId> order) {
  GraphPath p{std::move(order), {}};
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto e = g.edge(p.vertices[i], p.vertices[i + 1]);
    if (!e) throw InvalidPathError(p.vertices[i], p.vertices[i + 1]);
    p.edges_used.push_back(*e);
  }
  return p;
}

inline std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& x : items) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace detail

/// Reads a vertex order off an N x N permutation matrix. Any row or column
/// whose sum differs from one is reported; a step pair that is not an edge
/// raises InvalidPathError.
inline GraphPath decode_positional(std::span<const std::uint8_t> bits, const VariableMap& map,
                                   const Digraph& g) {
  if (map.encoding() != Encoding::kPositional)
    throw std::invalid_argument("decode_positional needs a positional variable map");
  const auto n = g.vertex_count();
  if (bits.size() != n * n || map.size() != n * n)
    throw std::invalid_argument("configuration length must be N^2 = " + std::to_string(n * n));

  std::vector<std::size_t> row(n, 0), col(n, 0);
  std::vector<VertexId> at_step(n, 0);
  for (VarIndex i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    const auto [v, j] = map.key(i);
    ++row[v];
    ++col[j];
    at_step[j] = v;
  }
  std::vector<std::string> problems;
  for (std::size_t v = 0; v < n; ++v)
    if (row[v] != 1)
      problems.push_back("vertex " + std::to_string(v) + " placed " + std::to_string(row[v]) + " times");
  for (std::size_t j = 0; j < n; ++j)
    if (col[j] != 1)
      problems.push_back("step " + std::to_string(j) + " holds " + std::to_string(col[j]) + " vertices");
  if (!problems.empty())
    throw DecodeError("not a permutation matrix: " + detail::join(problems));
  return detail::path_through(g, std::move(at_step));
}

inline GraphPath decode_positional(const SpinConfiguration& c, const VariableMap& map,
                                   const Digraph& g) {
  const auto bits = c.bits();
  return decode_positional(std::span<const std::uint8_t>(bits), map, g);
}

/// Follows the selected edges from the unique vertex without a selected
/// predecessor. The selection must be a single path covering every vertex.
inline GraphPath decode_edges(std::span<const std::uint8_t> bits, const VariableMap& map,
                              const Digraph& g) {
  if (map.encoding() != Encoding::kEdge)
    throw std::invalid_argument("decode_edges needs an edge variable map");
  if (bits.size() != map.size())
    throw std::invalid_argument("configuration length must equal the edge count");
  const auto n = g.vertex_count();
  constexpr auto kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> next(n, kNone), prev(n, kNone);
  std::vector<std::string> problems;
  std::size_t selected = 0;
  for (VarIndex i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    const auto [u, v] = map.key(i);
    if (!g.has_edge(u, v)) throw InvalidPathError(u, v);
    ++selected;
    if (next[u] != kNone) problems.push_back("vertex " + std::to_string(u) + " has out-degree > 1");
    if (prev[v] != kNone) problems.push_back("vertex " + std::to_string(v) + " has in-degree > 1");
    next[u] = v;
    prev[v] = u;
  }
  if (!problems.empty()) throw DecodeError("degree violation: " + detail::join(problems));

  std::vector<VertexId> starts;
  for (VertexId v = 0; v < n; ++v)
    if (prev[v] == kNone) starts.push_back(v);
  if (starts.size() != 1 || selected + 1 != n) {
    std::vector<std::string> isolated;
    for (VertexId v = 0; v < n; ++v)
      if (prev[v] == kNone && next[v] == kNone) isolated.push_back(std::to_string(v));
    std::string msg = "selection forms " + std::to_string(starts.size()) +
                      " path components over " + std::to_string(n) + " vertices";
    if (!isolated.empty()) {
      msg += "; incomplete cover, isolated vertices:";
      for (const auto& v : isolated) msg += " " + v;
    }
    throw DecodeError(msg);
  }
  std::vector<VertexId> order;
  std::vector<bool> seen(n, false);
  for (auto v = starts.front(); v != kNone; v = next[v]) {
    if (seen[v]) throw DecodeError("selected edges contain a cycle");
    seen[v] = true;
    order.push_back(v);
  }
  if (order.size() != n) throw DecodeError("selected edges contain a cycle");
  return detail::path_through(g, std::move(order));
}

inline GraphPath decode_edges(const SpinConfiguration& c, const VariableMap& map,
                              const Digraph& g) {
  const auto bits = c.bits();
  return decode_edges(std::span<const std::uint8_t>(bits), map, g);
}

inline GraphPath decode(const SpinConfiguration& c, const VariableMap& map, const Digraph& g) {
  return map.encoding() == Encoding::kPositional ? decode_positional(c, map, g)
                                                 : decode_edges(c, map, g);
}

/// Permutation-matrix bits for a vertex order (inverse of decode_positional).
inline std::vector<std::uint8_t> encode_positional(const GraphPath& p, std::size_t n) {
  std::vector<std::uint8_t> bits(n * n, 0);
  for (std::size_t j = 0; j < p.vertices.size(); ++j) bits[p.vertices[j] * n + j] = 1;
  return bits;
}

inline std::vector<std::uint8_t> encode_edges(const GraphPath& p, const VariableMap& map) {
  std::vector<std::uint8_t> bits(map.size(), 0);
  for (const auto& e : p.edges_used)
    if (auto i = map.index({e.u, e.v})) bits[*i] = 1;
  return bits;
}

inline bool validate_hamiltonian_path(const Digraph& g, const GraphPath& p) {
  const auto n = g.vertex_count();
  if (p.vertices.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : p.vertices) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

/// First label, then each later label minus its stored overlap prefix.
inline NucleotideSequence reconstruct_sequence(const GraphPath& p, const OlcGraph& g) {
  if (p.vertices.empty()) throw std::invalid_argument("cannot reconstruct from an empty path");
  std::string out = g.label(p.vertices.front()).str();
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    const auto u = p.vertices[i - 1], v = p.vertices[i];
    auto e = g.topology().edge(u, v);
    if (!e) throw InvalidPathError(u, v);
    const auto& a = g.label(u).str();
    const auto& b = g.label(v).str();
    if (e->overlap >= b.size() || e->overlap > a.size() ||
        a.compare(a.size() - e->overlap, e->overlap, b, 0, e->overlap) != 0)
      throw CorruptionError("overlap of " + std::to_string(e->overlap) + " on edge " +
                            std::to_string(u) + " -> " + std::to_string(v) +
                            " does not match the labels");
    out += b.substr(e->overlap);
  }
  return NucleotideSequence(std::move(out));
}

// Maps a path over a part's local ids back to the original graph.
inline GraphPath lift_path(const GraphPath& local, const GraphPart& part) {
  GraphPath p;
  for (auto v : local.vertices) p.vertices.push_back(part.original_ids.at(v));
  for (const auto& e : local.edges_used)
    p.edges_used.push_back({part.original_ids.at(e.u), part.original_ids.at(e.v), e.overlap});
  return p;
}

struct PartPath {
  GraphPath path;  // original vertex ids
  std::optional<Edge> connecting;
};

/// Joins per-part paths through their connecting bridges. Each bridge must
/// leave the last vertex of its part and enter the first vertex of the next.
inline GraphPath merge_partition_paths(const std::vector<PartPath>& parts) {
  GraphPath out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (part.path.vertices.empty())
      throw StitchError("part " + std::to_string(i) + " has an empty path");
    out.vertices.insert(out.vertices.end(), part.path.vertices.begin(), part.path.vertices.end());
    out.edges_used.insert(out.edges_used.end(), part.path.edges_used.begin(),
                          part.path.edges_used.end());
    if (i + 1 == parts.size()) break;
    if (!part.connecting)
      throw StitchError("part " + std::to_string(i) + " has no connecting edge to part " +
                        std::to_string(i + 1));
    const auto& bridge = *part.connecting;
    const auto& next = parts[i + 1].path.vertices;
    if (bridge.u != part.path.vertices.back() || next.empty() || bridge.v != next.front())
      throw StitchError("bridge " + std::to_string(bridge.u) + " -> " + std::to_string(bridge.v) +
                        " does not join the end of part " + std::to_string(i) +
                        " to the start of part " + std::to_string(i + 1));
    out.edges_used.push_back(bridge);
  }
  return out;
}

/// Depth-first enumeration of Hamiltonian paths, stopping after `limit`.
inline std::vector<GraphPath> find_hamiltonian_paths(const Digraph& g, std::size_t limit) {
  const auto n = g.vertex_count();
  std::vector<GraphPath> found;
  if (n == 0 || limit == 0) return found;
  std::vector<VertexId> order;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (found.size() >= limit) return;
    order.push_back(v);
    used[v] = true;
    if (order.size() == n) {
      found.push_back(detail::path_through(g, order));
    } else {
      for (auto w : g.successors(v))
        if (!used[w]) self(self, w);
    }
    used[v] = false;
    order.pop_back();
  };
  for (VertexId s = 0; s < n && found.size() < limit; ++s) dfs(dfs, s);
  return found;
}

inline std::size_t count_hamiltonian_paths(const Digraph& g, std::size_t limit) {
  return find_hamiltonian_paths(g, limit).size();
}

}  // namespace olcqubo
