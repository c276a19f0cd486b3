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

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "olcqubo/digraph.hpp"

namespace olcqubo::testing {

using Arcs = std::set<std::pair<std::size_t, std::size_t>>;

inline Digraph make_digraph(std::size_t n, const Arcs& arcs) {
  std::vector<Edge> edges;
  for (auto [u, v] : arcs) edges.push_back({u, v, 0});
  return Digraph(n, std::move(edges));
}

// Each ordered pair u != v is an edge with probability `density`.
inline Arcs random_arcs(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Arcs arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) arcs.insert({u, v});
  return arcs;
}

// Random DAG: edges only go forward in a random vertex order.
inline Arcs random_dag_arcs(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(density);
  Arcs arcs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) arcs.insert({order[a], order[b]});
  return arcs;
}

// All Hamiltonian paths by permutation enumeration.
inline std::vector<std::vector<std::size_t>> hamiltonian_paths_by_permutation(std::size_t n,
                                                                              const Arcs& arcs) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = arcs.count({perm[i], perm[i + 1]}) > 0;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// All Hamiltonian paths by depth-first search over the arc set.
inline std::vector<std::vector<std::size_t>> hamiltonian_paths_by_dfs(std::size_t n,
                                                                      const Arcs& arcs) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self) -> void {
    if (path.size() == n) {
      out.push_back(path);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || (!path.empty() && !arcs.count({path.back(), w}))) continue;
      used[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = false;
    }
  };
  if (n > 0) extend(extend);
  return out;
}

// Positional objective recomputed from the x-matrix: A times
// (row deficits^2 + column deficits^2 + forbidden adjacencies).
inline long long positional_objective_from_matrix(std::size_t n, const Arcs& arcs,
                                                  const std::vector<std::uint8_t>& bits,
                                                  long long a) {
  auto x = [&](std::size_t v, std::size_t j) { return static_cast<long long>(bits[v * n + j]); };
  long long total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    long long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += x(v, j);
    total += (1 - s) * (1 - s);
  }
  for (std::size_t j = 0; j < n; ++j) {
    long long s = 0;
    for (std::size_t v = 0; v < n; ++v) s += x(v, j);
    total += (1 - s) * (1 - s);
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && !arcs.count({u, v}))
        for (std::size_t j = 0; j + 1 < n; ++j) total += x(u, j) * x(v, j + 1);
  return a * total;
}

// Smallest number of vertex-disjoint directed paths covering a DAG, by
// enumerating edge subsets with in/out degree <= 1.
inline std::size_t min_path_cover_by_enumeration(std::size_t n, const Arcs& arcs) {
  std::vector<std::pair<std::size_t, std::size_t>> e(arcs.begin(), arcs.end());
  std::size_t best_edges = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
    std::vector<int> in(n, 0), out(n, 0);
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      ok = ++out[e[i].first] <= 1 && ++in[e[i].second] <= 1;
      ++count;
    }
    if (ok) best_edges = std::max(best_edges, count);
  }
  return n - best_edges;
}

// Connectivity of the underlying undirected multigraph after dropping one
// edge (by index), via union-find.
inline bool connected_without(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    auto a = find(edges[i].u), b = find(edges[i].v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace olcqubo::testing
