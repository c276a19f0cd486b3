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

#include <optional>
#include <string>
#include <vector>

#include "olcqubo/assembly.hpp"
#include "olcqubo/brute_force.hpp"
#include "olcqubo/formulation.hpp"
#include "olcqubo/olc_graph.hpp"
#include "olcqubo/qubo.hpp"
#include "olcqubo/simcim.hpp"

namespace olcqubo {

/// Runs SimCIM on the normalized form of `m` and re-scores every attempt
/// against `m` itself, so energies come back in the caller's units.
inline SolveResult solve_simcim(const IsingProblem& m, const SimCimParams& p,
                                std::optional<double> ground_energy = std::nullopt) {
  const auto normalized = normalize_ising(m);
  auto result = simcim_solve(normalized.problem, p);
  for (auto& a : result.attempts) a.energy = energy(m, a.config);
  result = aggregate_attempts(std::move(result.attempts));
  if (ground_energy) result.mark_hits(*ground_energy);
  return result;
}

// Single-attempt result holding the lexicographically first ground state.
inline SolveResult solve_brute_force(const IsingProblem& m, BruteForceOptions options = {}) {
  auto ground = brute_force(m, options);
  AttemptRecord rec;
  rec.config = ground.configs.front();
  rec.energy = energy(m, rec.config);
  auto result = aggregate_attempts({rec});
  result.mark_hits(ground.energy());
  return result;
}

enum class SolverKind { kSimCim, kBruteForce };

struct SolveOptions {
  SolverKind solver = SolverKind::kSimCim;
  SimCimParams simcim;
  BruteForceOptions brute;
};

struct Assembly {
  GraphPath path;
  NucleotideSequence sequence;
  double energy = 0.0;
};

/// Formulate, solve and decode one graph. Throws DecodeError (or
/// InvalidPathError) when the best configuration is not a Hamiltonian path.
inline Assembly assemble_graph(const OlcGraph& g, Encoding encoding, const Coefficient& penalty,
                               const SolveOptions& options, const PathEndpoints& pins = {}) {
  auto f = encoding == Encoding::kPositional ? positional_qubo(g.topology(), penalty, pins)
                                             : edge_qubo(g.topology(), penalty, pins);
  const auto ising = qubo_to_ising(f.qubo);
  const auto result = options.solver == SolverKind::kSimCim ? solve_simcim(ising, options.simcim)
                                                           : solve_brute_force(ising, options.brute);
  auto path = decode(result.best_config, f.map, g.topology());
  auto seq = reconstruct_sequence(path, g);
  return {std::move(path), std::move(seq), result.best_energy};
}

/// Solves each part of a bridge decomposition with its endpoints pinned to
/// the bridges, then stitches the part paths together.
inline Assembly assemble_partitioned(const OlcGraph& g, Encoding encoding,
                                     const Coefficient& penalty, const SolveOptions& options) {
  const auto parts = bridge_decompose(g);
  std::vector<PartPath> paths;
  double total_energy = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    auto local_id = [&](VertexId original) -> std::optional<VertexId> {
      for (std::size_t k = 0; k < part.original_ids.size(); ++k)
        if (part.original_ids[k] == original) return k;
      return std::nullopt;
    };
    PathEndpoints pins;
    if (i > 0 && parts[i - 1].connecting) pins.first = local_id(parts[i - 1].connecting->v);
    if (part.connecting) pins.last = local_id(part.connecting->u);
    auto local = assemble_graph(part.subgraph, encoding, penalty, options, pins);
    total_energy += local.energy;
    paths.push_back({lift_path(local.path, part), part.connecting});
  }
  auto path = merge_partition_paths(paths);
  if (!validate_hamiltonian_path(g.topology(), path))
    throw DecodeError("stitched path is not a Hamiltonian path of the full graph");
  auto seq = reconstruct_sequence(path, g);
  return {std::move(path), std::move(seq), total_energy};
}

}  // namespace olcqubo
