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
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "olcqubo/digraph.hpp"
#include "olcqubo/olc_graph.hpp"

namespace olcqubo {

/// Indices into g.edges() of the bridges of the underlying undirected
/// multigraph. Antiparallel edges u->v, v->u count as two parallel undirected
/// edges, so neither is a bridge.
inline std::vector<std::size_t> find_bridges(const Digraph& g) {
  const auto n = g.vertex_count();
  const auto& edges = g.edges();
  // Undirected incidence lists of (neighbour, edge index).
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back({edges[i].v, i});
    adj[edges[i].v].push_back({edges[i].u, i});
  }
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, kUnseen), low(n, 0);
  std::vector<std::size_t> bridges;
  std::size_t timer = 0;

  struct Frame {
    VertexId v;
    std::size_t via_edge;
    std::size_t next;
  };
  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, kUnseen, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, id] = adj[f.v][f.next++];
        if (id == f.via_edge) continue;
        if (disc[w] == kUnseen) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const auto done = f;
      stack.pop_back();
      if (!stack.empty()) {
        auto& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (low[done.v] > disc[parent.v]) bridges.push_back(done.via_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

/// One piece of a bridge decomposition. `original_ids[i]` is the id in the
/// input graph of vertex i of `subgraph`. `connecting` is the bridge (in
/// original ids) that attaches the next part to the parts before it; it is
/// empty on the last part.
struct GraphPart {
  OlcGraph subgraph;
  std::vector<VertexId> original_ids;
  std::optional<Edge> connecting;
};

/// Splits a weakly connected graph into its 2-edge-connected pieces.
///
/// Parts are ordered by a depth-first walk of the bridge tree starting from a
/// leaf piece whose bridge points outward when such a leaf exists. When the
/// bridge tree is a path (the only shape that admits a Hamiltonian path) the
/// connecting edge of part i joins part i to part i+1.
inline std::vector<GraphPart> bridge_decompose(const OlcGraph& g) {
  const auto& topo = g.topology();
  const auto n = topo.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot decompose an empty graph");
  if (!is_weakly_connected(topo))
    throw std::invalid_argument("bridge_decompose requires a weakly connected graph");

  const auto& edges = topo.edges();
  const auto bridge_ids = find_bridges(topo);
  std::vector<bool> is_bridge(edges.size(), false);
  for (auto id : bridge_ids) is_bridge[id] = true;

  // Label 2-edge-connected components in order of their smallest vertex.
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(n, kNone);
  std::size_t comp_count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNone) continue;
    std::vector<VertexId> todo{s};
    comp[s] = comp_count;
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (is_bridge[i]) continue;
        VertexId w;
        if (edges[i].u == u) w = edges[i].v;
        else if (edges[i].v == u) w = edges[i].u;
        else continue;
        if (comp[w] == kNone) {
          comp[w] = comp_count;
          todo.push_back(w);
        }
      }
    }
    ++comp_count;
  }

  // Bridge tree adjacency: (neighbour component, bridge edge index).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree(comp_count);
  for (auto id : bridge_ids) {
    tree[comp[edges[id].u]].push_back({comp[edges[id].v], id});
    tree[comp[edges[id].v]].push_back({comp[edges[id].u], id});
  }

  std::size_t root = 0;
  if (comp_count > 1) {
    std::optional<std::size_t> outward_leaf, any_leaf;
    for (std::size_t c = 0; c < comp_count; ++c) {
      if (tree[c].size() != 1) continue;
      if (!any_leaf) any_leaf = c;
      if (!outward_leaf && comp[edges[tree[c][0].second].u] == c) outward_leaf = c;
    }
    root = outward_leaf ? *outward_leaf : *any_leaf;
  }

  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> parent_bridge(comp_count);
  std::vector<bool> visited(comp_count, false);
  std::vector<std::size_t> todo{root};
  while (!todo.empty()) {
    auto c = todo.back();
    todo.pop_back();
    if (visited[c]) continue;
    visited[c] = true;
    order.push_back(c);
    auto children = tree[c];
    std::sort(children.rbegin(), children.rend());
    for (auto [d, id] : children) {
      if (!visited[d]) {
        parent_bridge[d] = id;
        todo.push_back(d);
      }
    }
  }

  std::vector<GraphPart> parts;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto c = order[pos];
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < n; ++v)
      if (comp[v] == c) ids.push_back(v);
    std::vector<VertexId> local(n, kNone);
    std::vector<Fragment> frags;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      local[ids[i]] = i;
      frags.push_back({i, g.label(ids[i])});
    }
    std::vector<Edge> sub_edges;
    for (const auto& e : edges)
      if (local[e.u] != kNone && local[e.v] != kNone)
        sub_edges.push_back({local[e.u], local[e.v], e.overlap});
    std::optional<Edge> connecting;
    if (pos + 1 < order.size()) connecting = edges[*parent_bridge[order[pos + 1]]];
    parts.push_back({OlcGraph(std::move(frags), std::move(sub_edges)), std::move(ids), connecting});
  }
  return parts;
}

}  // namespace olcqubo
