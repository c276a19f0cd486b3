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
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "olcqubo/assembly.hpp"
#include "olcqubo/brute_force.hpp"
#include "olcqubo/formulation.hpp"
#include "olcqubo/metrics.hpp"
#include "olcqubo/olc_graph.hpp"
#include "olcqubo/pipeline.hpp"
#include "olcqubo/qubo_io.hpp"
#include "olcqubo/random.hpp"
#include "olcqubo/sequence.hpp"
#include "olcqubo/simcim.hpp"

namespace olcqubo {

struct SyntheticInstance {
  InstanceSpec spec;
  NucleotideSequence sequence;
  OlcGraph graph;
  std::size_t regenerations = 0;
  std::map<std::string, std::size_t> rejections;  // reason -> count
};

/// Why a generated candidate would be regenerated, or nullopt if usable.
///
///  repeated-kmer  the sequence repeats a k-mer, so its read path is lost
///  no-path        the overlap graph has no Hamiltonian path
///  duplicate      same graph as an instance already accepted
///  chain          the read path with no auxiliary edges
///  cyclic         edge encoding requested but the graph has a cycle
inline std::optional<std::string> screen_candidate(const NucleotideSequence& seq,
                                                   const std::vector<Fragment>& kmers,
                                                   const OlcGraph& g, Encoding encoding,
                                                   const std::set<std::string>& accepted) {
  if (kmers.size() != seq.size() - kmers.front().label.size() + 1) return "repeated-kmer";
  if (count_hamiltonian_paths(g.topology(), 1) == 0) return "no-path";
  if (accepted.contains(canonical_key(g))) return "duplicate";
  if (g.edge_count() + 1 == g.vertex_count()) return "chain";
  if (encoding == Encoding::kEdge && !find_cycle(g.topology()).empty()) return "cyclic";
  return std::nullopt;
}

/// Draws sequences from derived seeds until one passes screen_candidate.
/// `accepted` collects canonical keys of accepted graphs across calls.
inline SyntheticInstance generate_instance(std::size_t length, std::size_t k, Encoding encoding,
                                           std::uint64_t master_seed, std::size_t index,
                                           std::set<std::string>& accepted,
                                           std::size_t max_tries = 100000) {
  std::map<std::string, std::size_t> rejections;
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    InstanceSpec spec{length, k, k - 1, derive_seed(master_seed, "instance", length, index, attempt)};
    spec.validate();
    auto seq = generate_sequence(length, spec.seed);
    auto kmers = shred_to_kmers(seq, k);
    auto graph = build_olc_graph(kmers, spec.min_overlap);
    if (auto reason = screen_candidate(seq, kmers, graph, encoding, accepted)) {
      ++rejections[*reason];
      continue;
    }
    accepted.insert(canonical_key(graph));
    return {spec, std::move(seq), std::move(graph), attempt, std::move(rejections)};
  }
  throw Error("no acceptable instance of length " + std::to_string(length) + " after " +
              std::to_string(max_tries) + " draws");
}

struct CampaignSpec {
  std::vector<std::size_t> lengths{5, 6, 7, 8, 9, 10};
  std::size_t instances_per_length = 10;
  std::size_t k = 3;
  Encoding encoding = Encoding::kPositional;
  Coefficient penalty = 1;
  SimCimParams simcim;
  BruteForceOptions oracle;
  std::uint64_t master_seed = 0;
  // When set, used as t_a instead of the measured mean attempt time.
  std::optional<double> fixed_t_a_us;
  std::size_t max_regenerations = 100000;

  void validate() const {
    if (lengths.empty()) throw std::invalid_argument("at least one sequence length is required");
    for (auto l : lengths)
      if (l < k || l == 0) throw std::invalid_argument("every length must be >= k");
    if (k < 2) throw std::invalid_argument("k must be >= 2 so that min_overlap = k-1 >= 1");
    if (instances_per_length < 1) throw std::invalid_argument("instances per length must be >= 1");
    if (penalty <= 0) throw std::invalid_argument("penalty A must be positive");
    simcim.validate();
  }
};

inline nlohmann::json to_json(const CampaignSpec& s) {
  return {{"lengths", s.lengths},
          {"instances_per_length", s.instances_per_length},
          {"k", s.k},
          {"min_overlap", s.k - 1},
          {"encoding", to_string(s.encoding)},
          {"penalty", format_coefficient(s.penalty)},
          {"simcim", to_json(s.simcim)},
          {"oracle_max_spins", s.oracle.max_spins},
          {"master_seed", s.master_seed},
          {"t_a", s.fixed_t_a_us ? nlohmann::json(*s.fixed_t_a_us) : nlohmann::json("measured")}};
}

enum class Certification { kOracle, kLowerBound, kUncertified };

inline std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::kOracle: return "oracle";
    case Certification::kLowerBound: return "lower-bound";
    default: return "uncertified";
  }
}

struct InstanceReport {
  std::size_t length = 0;
  std::size_t instance = 0;
  std::uint64_t seed = 0;
  Encoding encoding = Encoding::kPositional;
  std::string sequence;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::size_t n_vars = 0;
  std::size_t physical_qubits_estimate = 0;
  std::size_t regenerations = 0;
  std::map<std::string, std::size_t> rejections;
  std::size_t hamiltonian_paths = 0;  // counted up to 2
  Certification certification = Certification::kUncertified;
  std::optional<double> ground_energy;
  std::optional<TtsReport> tts;
  bool valid_assembly = false;
  std::optional<std::string> reconstructed;
  std::string decode_error;
  std::vector<double> energies;
  std::vector<double> wall_times_us;

  bool unique_path() const { return hamiltonian_paths == 1; }
};

/// Solves one generated instance end to end: formulate, convert, take the
/// exhaustive ground state when the problem is small enough, anneal with
/// SimCIM, then decode and reconstruct the best configuration.
inline InstanceReport run_instance(const SyntheticInstance& inst, std::size_t index,
                                   const CampaignSpec& spec) {
  InstanceReport r;
  r.length = inst.spec.sequence_length;
  r.instance = index;
  r.seed = inst.spec.seed;
  r.encoding = spec.encoding;
  r.sequence = inst.sequence.str();
  r.n_vertices = inst.graph.vertex_count();
  r.n_edges = inst.graph.edge_count();
  r.regenerations = inst.regenerations;
  r.rejections = inst.rejections;
  r.hamiltonian_paths = count_hamiltonian_paths(inst.graph.topology(), 2);

  const auto& topo = inst.graph.topology();
  auto f = spec.encoding == Encoding::kPositional ? positional_qubo(topo, spec.penalty)
                                                  : edge_qubo(topo, spec.penalty);
  r.n_vars = f.qubo.n;
  r.physical_qubits_estimate = r.n_vars ? estimate_physical_qubits(r.n_vars) : 0;
  const auto ising = qubo_to_ising(f.qubo);

  if (ising.n <= spec.oracle.max_spins) {
    r.ground_energy = brute_force(ising, spec.oracle).energy();
    r.certification = Certification::kOracle;
  }

  SimCimParams params = spec.simcim;
  params.seed = derive_seed(spec.master_seed, "simcim", r.length, index);
  auto result = solve_simcim(ising, params);

  // Hamiltonian-path configurations attain a known lower bound on the
  // objective, so reaching it certifies the ground state without the oracle.
  const double bound = to_double(path_energy(spec.encoding, spec.penalty));
  if (!r.ground_energy && result.best_energy <= bound + kHitTolerance) {
    r.ground_energy = bound;
    r.certification = Certification::kLowerBound;
  }
  if (r.ground_energy) result.mark_hits(*r.ground_energy);

  for (const auto& a : result.attempts) {
    r.energies.push_back(a.energy);
    r.wall_times_us.push_back(a.wall_time_us);
  }
  if (r.ground_energy) {
    const double t_a = spec.fixed_t_a_us ? *spec.fixed_t_a_us : mean_wall_time_us(result);
    r.tts = make_tts_report(result, *r.ground_energy, t_a);
  }

  try {
    auto path = decode(result.best_config, f.map, topo);
    r.valid_assembly = validate_hamiltonian_path(topo, path);
    r.reconstructed = reconstruct_sequence(path, inst.graph).str();
  } catch (const Error& e) {
    r.decode_error = e.what();
  }
  return r;
}

/// Generates and solves `instances_per_length` instances for each length.
/// Reports come back in (length, instance) order.
inline std::vector<InstanceReport> run_campaign(const CampaignSpec& spec,
                                                std::ostream* log = nullptr) {
  spec.validate();
  std::vector<InstanceReport> reports;
  std::set<std::string> accepted;
  for (auto length : spec.lengths) {
    for (std::size_t i = 0; i < spec.instances_per_length; ++i) {
      auto inst = generate_instance(length, spec.k, spec.encoding, spec.master_seed, i, accepted,
                                    spec.max_regenerations);
      if (log && inst.regenerations) {
        *log << "length " << length << " instance " << i << ": " << inst.regenerations
             << " regenerations (";
        bool first = true;
        for (const auto& [reason, count] : inst.rejections) {
          *log << (first ? "" : ", ") << reason << " " << count;
          first = false;
        }
        *log << ")\n";
      }
      reports.push_back(run_instance(inst, i, spec));
    }
  }
  return reports;
}

inline constexpr std::string_view kCsvHeader =
    "length,instance,seed,encoding,n_vars,ground_energy,theta,r99,t_a_us,tts_us,valid_assembly";

inline void write_csv_row(std::ostream& out, const InstanceReport& r) {
  auto num = [](std::optional<double> v, std::string_view missing) {
    return v ? format_coefficient(*v) : std::string(missing);
  };
  out << r.length << ',' << r.instance << ',' << r.seed << ',' << to_string(r.encoding) << ','
      << r.n_vars << ',' << num(r.ground_energy, "NA") << ',';
  if (r.tts) {
    out << format_coefficient(r.tts->theta) << ',' << num(r.tts->r99, "unsolved") << ','
        << format_coefficient(r.tts->t_a_us) << ',' << num(r.tts->tts_us, "unsolved");
  } else {
    out << "NA,uncertified,NA,uncertified";
  }
  out << ',' << (r.valid_assembly ? "true" : "false") << '\n';
}

/// CSV report. `metadata` lines are written first, each prefixed with "# ".
inline void write_csv(std::ostream& out, const std::vector<InstanceReport>& reports,
                      const std::vector<std::string>& metadata = {}) {
  for (const auto& m : metadata) out << "# " << m << '\n';
  out << kCsvHeader << '\n';
  for (const auto& r : reports) write_csv_row(out, r);
}

inline nlohmann::json to_json(const SummaryStats& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"min", s.min}, {"max", s.max}, {"p90", s.p90}};
}

inline nlohmann::json to_json(const InstanceReport& r) {
  nlohmann::json j{{"length", r.length},
                   {"instance", r.instance},
                   {"seed", r.seed},
                   {"encoding", to_string(r.encoding)},
                   {"sequence", r.sequence},
                   {"n_vertices", r.n_vertices},
                   {"n_edges", r.n_edges},
                   {"n_vars", r.n_vars},
                   {"physical_qubits_estimate", r.physical_qubits_estimate},
                   {"regenerations", r.regenerations},
                   {"rejections", r.rejections},
                   {"hamiltonian_paths", r.hamiltonian_paths},
                   {"certification", to_string(r.certification)},
                   {"valid_assembly", r.valid_assembly},
                   {"energies", r.energies},
                   {"wall_times_us", r.wall_times_us}};
  j["ground_energy"] = r.ground_energy ? nlohmann::json(*r.ground_energy) : nlohmann::json();
  j["reconstructed"] = r.reconstructed ? nlohmann::json(*r.reconstructed) : nlohmann::json();
  j["matches_source"] = r.reconstructed ? nlohmann::json(*r.reconstructed == r.sequence)
                                        : nlohmann::json();
  if (!r.decode_error.empty()) j["decode_error"] = r.decode_error;
  if (r.tts) {
    j["tts"] = {{"theta", r.tts->theta},
                {"r99", r.tts->r99 ? nlohmann::json(*r.tts->r99) : nlohmann::json("unsolved")},
                {"t_a_us", r.tts->t_a_us},
                {"tts_us", r.tts->tts_us ? nlohmann::json(*r.tts->tts_us) : nlohmann::json("unsolved")},
                {"runs", r.tts->runs},
                {"hits", r.tts->hits}};
  }
  return j;
}

/// TTS summary (mean, min, max, 90th percentile) per length and overall,
/// over instances with a finite TTS.
inline nlohmann::json summarize_tts(const std::vector<InstanceReport>& reports) {
  std::map<std::size_t, std::vector<double>> by_length;
  std::vector<double> all;
  std::size_t unsolved = 0;
  for (const auto& r : reports) {
    if (r.tts && r.tts->tts_us) {
      by_length[r.length].push_back(*r.tts->tts_us);
      all.push_back(*r.tts->tts_us);
    } else {
      ++unsolved;
    }
  }
  nlohmann::json per_length = nlohmann::json::object();
  for (const auto& [len, v] : by_length) per_length[std::to_string(len)] = to_json(summarize(v));
  return {{"tts_us", to_json(summarize(all))}, {"tts_us_by_length", per_length},
          {"unsolved_or_uncertified", unsolved}};
}

}  // namespace olcqubo
