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
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace olcqubo {

using VertexId = std::size_t;

// Directed edge. `overlap` is the suffix/prefix overlap length for overlap
// graphs and 0 for plain topology.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t overlap = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple directed graph on vertices 0..n-1: no self-loops and at most one
// edge per ordered pair. Edges are kept sorted by (u, v).
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::size_t n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)), out_(n), in_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (e.u >= n || e.v >= n)
        throw std::invalid_argument("edge endpoint out of range: " +
                                    std::to_string(e.u) + " -> " + std::to_string(e.v));
      if (e.u == e.v)
        throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
      if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                    " -> " + std::to_string(e.v));
      out_[e.u].push_back(e.v);
      in_[e.v].push_back(e.u);
    }
    for (auto& a : in_) std::sort(a.begin(), a.end());
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& successors(VertexId u) const { return out_[u]; }
  const std::vector<VertexId>& predecessors(VertexId v) const { return in_[v]; }

  bool has_edge(VertexId u, VertexId v) const {
    return u < n_ && std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  std::optional<Edge> edge(VertexId u, VertexId v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0},
                               [](const Edge& a, const Edge& b) {
                                 return a.u != b.u ? a.u < b.u : a.v < b.v;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return *it;
    return std::nullopt;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> out_, in_;
};

// Kahn's algorithm; nullopt when the graph has a cycle.
inline std::optional<std::vector<VertexId>> topological_order(const Digraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (const auto& e : g.edges()) ++indegree[e.v];
  std::vector<VertexId> ready, order;
  for (VertexId v = n; v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (auto v : g.successors(u))
      if (--indegree[v] == 0) ready.push_back(v);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

// Returns the vertices of one directed cycle in traversal order, or an empty
// vector when the graph is acyclic.
inline std::vector<VertexId> find_cycle(const Digraph& g) {
  const auto n = g.vertex_count();
  enum class Mark { kNew, kActive, kDone };
  std::vector<Mark> mark(n, Mark::kNew);
  std::vector<VertexId> parent(n);
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (mark[root] != Mark::kNew) continue;
    std::vector<Frame> stack{{root, 0}};
    mark[root] = Mark::kActive;
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto& succ = g.successors(f.v);
      if (f.next == succ.size()) {
        mark[f.v] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      auto w = succ[f.next++];
      if (mark[w] == Mark::kActive) {
        std::vector<VertexId> cycle;
        for (auto x = f.v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (mark[w] == Mark::kNew) {
        mark[w] = Mark::kActive;
        parent[w] = f.v;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

inline bool is_weakly_connected(const Digraph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> todo{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    auto u = todo.back();
    todo.pop_back();
    auto visit = [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push_back(w);
      }
    };
    for (auto w : g.successors(u)) visit(w);
    for (auto w : g.predecessors(u)) visit(w);
  }
  return count == n;
}

}  // namespace olcqubo
