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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "olcqubo/digraph.hpp"
#include "olcqubo/error.hpp"
#include "olcqubo/qubo.hpp"

namespace olcqubo {

enum class Encoding { kPositional, kEdge };

inline std::string_view to_string(Encoding e) {
  return e == Encoding::kPositional ? "positional" : "edge";
}

inline Encoding parse_encoding(std::string_view s) {
  if (s == "positional") return Encoding::kPositional;
  if (s == "edge") return Encoding::kEdge;
  throw std::invalid_argument("unknown encoding '" + std::string(s) +
                              "' (expected positional or edge)");
}

/// Bijection between QUBO variables and what they mean. Keys are
/// (vertex, step) for the positional encoding and (u, v) for the edge
/// encoding; steps and vertices are 0-based.
class VariableMap {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  explicit VariableMap(Encoding encoding) : encoding_(encoding) {}

  VarIndex add(Key key) {
    auto [it, inserted] = forward_.emplace(key, reverse_.size());
    if (!inserted) throw std::invalid_argument("duplicate variable key");
    reverse_.push_back(key);
    return it->second;
  }

  Encoding encoding() const { return encoding_; }
  std::size_t size() const { return reverse_.size(); }
  const Key& key(VarIndex var) const { return reverse_.at(var); }
  std::optional<VarIndex> index(const Key& key) const {
    auto it = forward_.find(key);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<Key>& keys() const { return reverse_; }

  friend bool operator==(const VariableMap& a, const VariableMap& b) {
    return a.encoding_ == b.encoding_ && a.reverse_ == b.reverse_;
  }

 private:
  Encoding encoding_;
  std::map<Key, VarIndex> forward_;
  std::vector<Key> reverse_;
};

inline nlohmann::json to_json(const VariableMap& map) {
  nlohmann::json entries = nlohmann::json::array();
  const bool positional = map.encoding() == Encoding::kPositional;
  for (VarIndex i = 0; i < map.size(); ++i) {
    const auto& [a, b] = map.key(i);
    nlohmann::json key = positional ? nlohmann::json{{"vertex", a}, {"step", b}}
                                    : nlohmann::json{{"u", a}, {"v", b}};
    entries.push_back({{"var", i}, {"key", std::move(key)}});
  }
  return {{"encoding", to_string(map.encoding())}, {"entries", std::move(entries)}};
}

inline VariableMap variable_map_from_json(const nlohmann::json& j) {
  VariableMap map(parse_encoding(j.at("encoding").get<std::string>()));
  const bool positional = map.encoding() == Encoding::kPositional;
  std::vector<std::pair<VarIndex, VariableMap::Key>> entries;
  for (const auto& e : j.at("entries")) {
    const auto& k = e.at("key");
    VariableMap::Key key = positional
        ? VariableMap::Key{k.at("vertex").get<std::size_t>(), k.at("step").get<std::size_t>()}
        : VariableMap::Key{k.at("u").get<std::size_t>(), k.at("v").get<std::size_t>()};
    entries.push_back({e.at("var").get<VarIndex>(), key});
  }
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != i) throw std::invalid_argument("variable map indices must be dense");
    map.add(entries[i].second);
  }
  return map;
}

// Optional pins on the first/last vertex of the path. Used when solving one
// part of a bridge decomposition, whose path must enter and leave through
// the bridge endpoints.
struct PathEndpoints {
  std::optional<VertexId> first;
  std::optional<VertexId> last;
};

struct Formulation {
  QuboProblem qubo;
  VariableMap map;
};

/// Permutation-matrix encoding over N^2 variables x[v][j] ("vertex v is at
/// step j"):
///
///   A sum_v (1 - sum_j x[v][j])^2 + A sum_j (1 - sum_v x[v][j])^2
///     + A sum_{u != v, (u,v) not in E} sum_j x[u][j] x[v][j+1]
///
/// Pinned endpoints add A (1 - x[first][0]) and A (1 - x[last][N-1]), which
/// keeps the ground energy at zero exactly when a pinned path exists.
inline Formulation positional_qubo(const Digraph& g, const Coefficient& penalty,
                                   const PathEndpoints& pins = {}) {
  if (penalty <= 0) throw std::invalid_argument("penalty A must be positive");
  const auto n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");

  VariableMap map(Encoding::kPositional);
  for (VertexId v = 0; v < n; ++v)
    for (std::size_t j = 0; j < n; ++j) map.add({v, j});
  auto var = [n](VertexId v, std::size_t j) { return v * n + j; };

  QuboProblem q;
  q.n = n * n;
  q.penalty = penalty;
  std::vector<VarIndex> group(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < n; ++j) group[j] = var(v, j);
    q.add_squared_deficit(group, 1, penalty);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (VertexId v = 0; v < n; ++v) group[v] = var(v, j);
    q.add_squared_deficit(group, 1, penalty);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || g.has_edge(u, v)) continue;
      for (std::size_t j = 0; j + 1 < n; ++j) q.add_quadratic(var(u, j), var(v, j + 1), penalty);
    }
  }
  if (pins.first) {
    if (*pins.first >= n) throw std::invalid_argument("pinned first vertex out of range");
    q.offset += penalty;
    q.add_linear(var(*pins.first, 0), -penalty);
  }
  if (pins.last) {
    if (*pins.last >= n) throw std::invalid_argument("pinned last vertex out of range");
    q.offset += penalty;
    q.add_linear(var(*pins.last, n - 1), -penalty);
  }
  q.prune();
  return {std::move(q), std::move(map)};
}

/// Edge-selection encoding over M variables x[u,v], valid for DAGs only:
///
///   A sum_u (1 - sum_{(u,v) in E} x[u,v])^2 + A sum_v (1 - sum_{(u,v) in E} x[u,v])^2
///
/// A single Hamiltonian path leaves one unavoidable deficit at each end, so
/// its energy is 2A. Pinning `first` penalizes selected edges into it and
/// pinning `last` penalizes selected edges out of it (A per edge).
inline Formulation edge_qubo(const Digraph& g, const Coefficient& penalty,
                             const PathEndpoints& pins = {}) {
  if (penalty <= 0) throw std::invalid_argument("penalty A must be positive");
  if (auto cycle = find_cycle(g); !cycle.empty()) throw NotAcyclicError(std::move(cycle));
  const auto n = g.vertex_count();

  VariableMap map(Encoding::kEdge);
  for (const auto& e : g.edges()) map.add({e.u, e.v});

  QuboProblem q;
  q.n = g.edge_count();
  q.penalty = penalty;
  std::vector<std::vector<VarIndex>> outgoing(n), incoming(n);
  for (VarIndex i = 0; i < g.edges().size(); ++i) {
    outgoing[g.edges()[i].u].push_back(i);
    incoming[g.edges()[i].v].push_back(i);
  }
  for (VertexId u = 0; u < n; ++u) q.add_squared_deficit(outgoing[u], 1, penalty);
  for (VertexId v = 0; v < n; ++v) q.add_squared_deficit(incoming[v], 1, penalty);
  if (pins.first) {
    if (*pins.first >= n) throw std::invalid_argument("pinned first vertex out of range");
    for (auto i : incoming[*pins.first]) q.add_linear(i, penalty);
  }
  if (pins.last) {
    if (*pins.last >= n) throw std::invalid_argument("pinned last vertex out of range");
    for (auto i : outgoing[*pins.last]) q.add_linear(i, penalty);
  }
  q.prune();
  return {std::move(q), std::move(map)};
}

/// Lowest objective value a configuration encoding a Hamiltonian path can
/// reach, which is also a lower bound over all configurations.
inline Coefficient path_energy(Encoding encoding, const Coefficient& penalty) {
  return encoding == Encoding::kPositional ? Coefficient(0) : 2 * penalty;
}

/// Physical qubits needed for a clique embedding of an n-variable QUBO:
/// n * (ceil(n / 4) + 1). This is an estimate used for reporting only.
inline std::size_t estimate_physical_qubits(std::size_t n) {
  if (n == 0) throw std::invalid_argument("QUBO must have at least one variable");
  return n * ((n + 3) / 4 + 1);
}

}  // namespace olcqubo
