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
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "olcqubo/digraph.hpp"
#include "olcqubo/error.hpp"
#include "olcqubo/sequence.hpp"

namespace olcqubo {

struct Fragment {
  VertexId id = 0;
  NucleotideSequence label;
};

// Experiment parameters for one synthetic instance.
struct InstanceSpec {
  std::size_t sequence_length = 5;
  std::size_t k = 3;
  std::size_t min_overlap = 2;
  std::uint64_t seed = 0;

  void validate() const {
    if (k < 1 || k > sequence_length)
      throw std::invalid_argument("k must satisfy 1 <= k <= sequence_length");
    if (min_overlap < 1 || min_overlap + 1 > k)
      throw std::invalid_argument("min_overlap must satisfy 1 <= min_overlap <= k-1");
  }
};

/// Largest L with min_overlap <= L < min(|a|, |b|) such that the last L bases
/// of `a` equal the first L bases of `b`.
inline std::optional<std::size_t> detect_overlap(std::string_view a, std::string_view b,
                                                 std::size_t min_overlap) {
  if (min_overlap < 1) throw std::invalid_argument("min_overlap must be at least 1");
  const auto limit = std::min(a.size(), b.size());
  if (limit == 0) return std::nullopt;
  for (std::size_t len = limit - 1; len >= min_overlap; --len) {
    if (a.substr(a.size() - len) == b.substr(0, len)) return len;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> detect_overlap(const Fragment& a, const Fragment& b,
                                                 std::size_t min_overlap) {
  return detect_overlap(a.label.view(), b.label.view(), min_overlap);
}

/// Directed overlap graph over deduplicated fragments. The constructor checks
/// every structural invariant, including that each stored overlap is a real
/// suffix/prefix match, so a constructed OlcGraph is always consistent.
class OlcGraph {
 public:
  OlcGraph() = default;

  OlcGraph(std::vector<Fragment> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), graph_(vertices_.size(), std::move(edges)) {
    std::unordered_set<std::string> labels;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].id != i)
        throw std::invalid_argument("fragment ids must be dense 0..N-1 in order");
      if (!labels.insert(vertices_[i].label.str()).second)
        throw std::invalid_argument("duplicate fragment label " + vertices_[i].label.str());
    }
    for (const auto& e : graph_.edges()) {
      const auto& a = vertices_[e.u].label.str();
      const auto& b = vertices_[e.v].label.str();
      if (e.overlap < 1 || e.overlap >= std::min(a.size(), b.size()))
        throw std::invalid_argument("overlap length out of range on edge " +
                                    std::to_string(e.u) + " -> " + std::to_string(e.v));
      if (a.compare(a.size() - e.overlap, e.overlap, b, 0, e.overlap) != 0)
        throw CorruptionError("stored overlap " + std::to_string(e.overlap) +
                              " does not match labels on edge " + std::to_string(e.u) +
                              " -> " + std::to_string(e.v));
    }
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const std::vector<Fragment>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  const Digraph& topology() const { return graph_; }
  const NucleotideSequence& label(VertexId v) const { return vertices_.at(v).label; }

  friend bool operator==(const OlcGraph& a, const OlcGraph& b) {
    if (a.vertices_.size() != b.vertices_.size() || !(a.graph_ == b.graph_)) return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i)
      if (a.vertices_[i].label != b.vertices_[i].label) return false;
    return true;
  }

 private:
  std::vector<Fragment> vertices_;
  Digraph graph_;
};

/// Sliding-window k-mers in order of first occurrence, duplicates dropped.
inline std::vector<Fragment> shred_to_kmers(const NucleotideSequence& seq, std::size_t k) {
  if (k < 1 || k > seq.size())
    throw std::invalid_argument("k must satisfy 1 <= k <= sequence length");
  std::vector<Fragment> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i + k <= seq.size(); ++i) {
    auto window = seq.str().substr(i, k);
    if (seen.insert(window).second)
      out.push_back({out.size(), NucleotideSequence(std::move(window))});
  }
  return out;
}

// Assigns dense ids to labels, dropping repeats. Returns the number dropped.
inline std::size_t dedupe_fragments(std::vector<Fragment>& fragments) {
  std::unordered_set<std::string> seen;
  std::vector<Fragment> kept;
  for (auto& f : fragments) {
    if (seen.insert(f.label.str()).second) kept.push_back({kept.size(), std::move(f.label)});
  }
  const auto dropped = fragments.size() - kept.size();
  fragments = std::move(kept);
  return dropped;
}

/// All-against-all exact overlap detection. Isolated vertices are kept.
inline OlcGraph build_olc_graph(std::vector<Fragment> fragments, std::size_t min_overlap) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < fragments.size(); ++u) {
    for (std::size_t v = 0; v < fragments.size(); ++v) {
      if (u == v) continue;
      if (auto len = detect_overlap(fragments[u], fragments[v], min_overlap))
        edges.push_back({u, v, *len});
    }
  }
  return OlcGraph(std::move(fragments), std::move(edges));
}

inline nlohmann::json to_json(const OlcGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& f : g.vertices()) vertices.push_back({{"id", f.id}, {"label", f.label.str()}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"overlap", e.overlap}});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline OlcGraph olc_graph_from_json(const nlohmann::json& j) {
  std::vector<Fragment> vertices;
  for (const auto& v : j.at("vertices"))
    vertices.push_back({v.at("id").get<VertexId>(),
                        NucleotideSequence(v.at("label").get<std::string>())});
  std::sort(vertices.begin(), vertices.end(),
            [](const Fragment& a, const Fragment& b) { return a.id < b.id; });
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("u").get<VertexId>(), e.at("v").get<VertexId>(),
                     e.at("overlap").get<std::size_t>()});
  return OlcGraph(std::move(vertices), std::move(edges));
}

// Canonical key for duplicate detection: the sorted label set determines
// the overlap graph up to vertex numbering.
inline std::string canonical_key(const OlcGraph& g) {
  std::vector<std::string> labels;
  for (const auto& f : g.vertices()) labels.push_back(f.label.str());
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (const auto& l : labels) key += l + ",";
  return key;
}

}  // namespace olcqubo
