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

// olcqubo command-line tool. Each subcommand is one pipeline stage that reads
// and writes plain files, so stages can be rerun and inspected separately;
// `pipeline` chains them in a working directory.

#include <zlib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "olcqubo/olcqubo.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace olcqubo::cli {
namespace {

constexpr const char* kConfigEnv = "OLCQUBO_SOLVER_CONFIG";
constexpr std::size_t kGzipThresholdBytes = 10u << 20;

// Failures that should exit with status 1 after printing a message.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot open " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw CommandError("cannot write " + path.string());
}

json read_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw CommandError(path.string() + ": " + e.what());
  }
}

// Large reports are written gzip-compressed as <path>.gz. Returns the path used.
fs::path write_json_report(const fs::path& path, const json& j) {
  const auto text = j.dump(2) + "\n";
  if (text.size() <= kGzipThresholdBytes) {
    write_file(path, text);
    return path;
  }
  auto gz_path = path;
  gz_path += ".gz";
  gzFile f = gzopen(gz_path.string().c_str(), "wb");
  if (!f) throw CommandError("cannot write " + gz_path.string());
  const bool ok = gzwrite(f, text.data(), static_cast<unsigned>(text.size())) ==
                  static_cast<int>(text.size());
  gzclose(f);
  if (!ok) throw CommandError("gzip write failed for " + gz_path.string());
  return gz_path;
}

fs::path sidecar(const fs::path& path, const std::string& suffix) {
  auto p = path;
  p += suffix;
  return p;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::size_t length = 0;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  fs::path out;
};

void cmd_generate(const GenerateOptions& o) {
  if (o.length == 0) throw CLI::ValidationError("--length", "must be at least 1");
  std::vector<FastaRecord> records;
  json instances = json::array();
  for (std::size_t i = 0; i < o.count; ++i) {
    const auto seed = derive_seed(o.seed, "generate", o.length, i);
    records.push_back({"seq" + std::to_string(i) + " length=" + std::to_string(o.length),
                       generate_sequence(o.length, seed)});
    instances.push_back({{"index", i}, {"seed", seed}, {"length", o.length}});
  }
  std::ostringstream fasta;
  write_fasta(fasta, records);
  write_file(o.out, fasta.str());
  json meta = make_metadata("generate", o.seed,
                            {{"length", o.length}, {"count", o.count}, {"out", o.out.string()}});
  write_file(sidecar(o.out, ".json"), json{{"metadata", meta}, {"instances", instances}}.dump(2));
}

// ------------------------------------------------------------------- graph

struct GraphOptions {
  fs::path input;
  std::size_t k = 3;
  std::optional<std::size_t> min_overlap;
  fs::path out;
};

void cmd_graph(const GraphOptions& o) {
  std::ifstream in(o.input);
  if (!in) throw CommandError("cannot open " + o.input.string());
  const auto records = read_fasta(in);
  const std::size_t min_overlap = o.min_overlap.value_or(o.k > 1 ? o.k - 1 : 1);
  std::vector<Fragment> fragments;
  for (const auto& r : records) {
    if (o.k == 0) {
      fragments.push_back({fragments.size(), r.sequence});
    } else {
      if (r.sequence.size() < o.k)
        throw CommandError("record '" + r.header + "' is shorter than k = " + std::to_string(o.k));
      for (auto& f : shred_to_kmers(r.sequence, o.k)) fragments.push_back(std::move(f));
    }
  }
  const auto dropped = dedupe_fragments(fragments);
  if (dropped)
    std::cerr << "warning: dropped " << dropped << " duplicate fragment"
              << (dropped == 1 ? "" : "s") << "\n";
  auto g = build_olc_graph(std::move(fragments), min_overlap);
  auto j = to_json(g);
  j["metadata"] = make_metadata("graph", 0,
                                {{"input", o.input.string()}, {"k", o.k},
                                 {"min_overlap", min_overlap}, {"duplicates_dropped", dropped}});
  write_file(o.out, j.dump(2) + "\n");
}

// -------------------------------------------------------------------- qubo

struct QuboOptions {
  fs::path graph;
  std::string encoding = "positional";
  std::string penalty = "1";
  fs::path out;
  std::optional<fs::path> map_out;
};

Coefficient parse_penalty(const std::string& text) {
  Coefficient a;
  try {
    a = parse_coefficient(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--penalty", "not a number: " + text);
  }
  if (a <= 0) throw CLI::ValidationError("--penalty", "must be positive");
  return a;
}

void cmd_qubo(const QuboOptions& o) {
  const auto a = parse_penalty(o.penalty);
  const auto encoding = parse_encoding(o.encoding);
  const auto g = olc_graph_from_json(read_json(o.graph));
  auto f = encoding == Encoding::kPositional ? positional_qubo(g.topology(), a)
                                             : edge_qubo(g.topology(), a);
  const auto map_path = o.map_out.value_or(sidecar(o.out, ".map.json"));
  json config{{"graph", o.graph.string()}, {"encoding", o.encoding}, {"penalty", o.penalty},
              {"map", map_path.string()}};
  auto meta = make_metadata("qubo", 0, config);
  std::ostringstream text;
  write_qubo_text(text, f.qubo, metadata_lines(meta));
  write_file(o.out, text.str());
  auto mj = to_json(f.map);
  mj["metadata"] = meta;
  write_file(map_path, mj.dump(2) + "\n");
}

// ------------------------------------------------------------------- solve

struct SolverFlags {
  std::string solver = "simcim";
  std::optional<fs::path> config;
  std::optional<std::size_t> attempts;
  std::optional<std::size_t> iterations;
  std::size_t threads = 0;
  std::size_t max_spins = BruteForceOptions{}.max_spins;
  std::uint64_t seed = 0;
};

// Resolves solver options: defaults, then the config file (--config or the
// environment variable), then explicit flags. A config without "seed" gets
// one derived from the master seed.
SolveOptions resolve_solver(const SolverFlags& f, std::string_view stage) {
  SolveOptions s;
  if (f.solver == "simcim") s.solver = SolverKind::kSimCim;
  else if (f.solver == "brute") s.solver = SolverKind::kBruteForce;
  else throw CLI::ValidationError("--solver", "expected simcim or brute");
  std::optional<fs::path> config = f.config;
  if (!config)
    if (const char* env = std::getenv(kConfigEnv); env && *env) config = fs::path(env);
  json cj = json::object();
  if (config) cj = read_json(*config);
  s.simcim.seed = derive_seed(f.seed, stage);
  try {
    s.simcim = simcim_params_from_json(cj, s.simcim);
  } catch (const std::exception& e) {
    throw CommandError("invalid solver config: " + std::string(e.what()));
  }
  if (f.attempts) s.simcim.attempts = *f.attempts;
  if (f.iterations) s.simcim.iterations = *f.iterations;
  s.simcim.threads = f.threads;
  s.simcim.validate();
  s.brute.max_spins = cj.value("max_spins", f.max_spins);
  return s;
}

json solver_config_json(const SolverFlags& f, const SolveOptions& s) {
  return {{"solver", f.solver}, {"simcim", to_json(s.simcim)}, {"max_spins", s.brute.max_spins}};
}

struct SolveCmdOptions {
  fs::path qubo;
  fs::path out;
  SolverFlags solver;
};

void cmd_solve(const SolveCmdOptions& o) {
  const auto options = resolve_solver(o.solver, "solve");
  std::ifstream in(o.qubo);
  if (!in) throw CommandError("cannot open " + o.qubo.string());
  const auto ising = qubo_to_ising(read_qubo_text(in));
  const auto result = options.solver == SolverKind::kSimCim
                          ? solve_simcim(ising, options.simcim)
                          : solve_brute_force(ising, options.brute);
  auto j = to_json(result);
  auto config = solver_config_json(o.solver, options);
  config["qubo"] = o.qubo.string();
  j["metadata"] = make_metadata("solve", o.solver.seed, config);
  j["n_spins"] = ising.n;
  write_json_report(o.out, j);
}

// ---------------------------------------------------------------- assemble

struct AssembleOptions {
  fs::path graph;
  std::optional<fs::path> map;
  std::optional<fs::path> result;
  bool partition = false;
  std::string encoding = "positional";
  std::string penalty = "1";
  SolverFlags solver;
  fs::path out;
};

json path_json(const GraphPath& p) {
  json edges = json::array();
  for (const auto& e : p.edges_used) edges.push_back({{"u", e.u}, {"v", e.v}, {"overlap", e.overlap}});
  return {{"vertices", p.vertices}, {"edges", edges}};
}

// Returns false when the configuration did not decode; the report then
// carries the error.
bool cmd_assemble(const AssembleOptions& o) {
  const auto g = olc_graph_from_json(read_json(o.graph));
  json config{{"graph", o.graph.string()}, {"partition", o.partition}};
  json report;
  std::uint64_t seed = 0;
  try {
    if (o.partition) {
      const auto options = resolve_solver(o.solver, "assemble");
      config["encoding"] = o.encoding;
      config["penalty"] = o.penalty;
      config.update(solver_config_json(o.solver, options));
      seed = o.solver.seed;
      const auto parts = bridge_decompose(g);
      auto a = assemble_partitioned(g, parse_encoding(o.encoding), parse_penalty(o.penalty), options);
      report = {{"path", path_json(a.path)}, {"sequence", a.sequence.str()},
                {"energy", a.energy}, {"parts", parts.size()}};
    } else {
      if (!o.map || !o.result)
        throw CLI::ValidationError("assemble", "--map and --result are required without --partition");
      config["map"] = o.map->string();
      config["result"] = o.result->string();
      const auto map = variable_map_from_json(read_json(*o.map));
      const auto rj = read_json(*o.result);
      const auto path = decode(best_config_from_json(rj), map, g.topology());
      if (!validate_hamiltonian_path(g.topology(), path))
        throw DecodeError("decoded path is not a Hamiltonian path");
      report = {{"path", path_json(path)},
                {"sequence", reconstruct_sequence(path, g).str()},
                {"energy", rj.value("best_energy", 0.0)}};
    }
    report["valid"] = true;
  } catch (const DecodeError& e) {
    report = {{"valid", false}, {"error", e.what()}};
  } catch (const InvalidPathError& e) {
    report = {{"valid", false}, {"error", e.what()}};
  } catch (const StitchError& e) {
    report = {{"valid", false}, {"error", e.what()}};
  }
  report["metadata"] = make_metadata("assemble", seed, config);
  write_file(o.out, report.dump(2) + "\n");
  if (!report["valid"].get<bool>()) {
    std::cerr << "error: " << report["error"].get<std::string>() << "\n";
    return false;
  }
  std::cout << report["sequence"].get<std::string>() << "\n";
  return true;
}

// ------------------------------------------------------------------- bench

struct BenchOptions {
  std::vector<std::size_t> lengths = CampaignSpec{}.lengths;
  std::size_t count = CampaignSpec{}.instances_per_length;
  std::size_t k = 3;
  std::string encoding = "positional";
  std::string penalty = "1";
  std::optional<double> t_a_fixed;
  SolverFlags solver;
  std::optional<fs::path> csv;
  std::optional<fs::path> json_out;
};

void cmd_bench(const BenchOptions& o) {
  if (!o.csv && !o.json_out) throw CLI::ValidationError("bench", "give --csv and/or --json");
  CampaignSpec spec;
  spec.lengths = o.lengths;
  spec.instances_per_length = o.count;
  spec.k = o.k;
  spec.encoding = parse_encoding(o.encoding);
  spec.penalty = parse_penalty(o.penalty);
  spec.master_seed = o.solver.seed;
  spec.fixed_t_a_us = o.t_a_fixed;
  const auto options = resolve_solver(o.solver, "bench");
  spec.simcim = options.simcim;
  spec.oracle = options.brute;
  spec.validate();

  const auto reports = run_campaign(spec, &std::cerr);
  const auto meta = make_metadata("bench", spec.master_seed, to_json(spec));
  if (o.csv) {
    std::ostringstream out;
    write_csv(out, reports, metadata_lines(meta));
    write_file(*o.csv, out.str());
  }
  if (o.json_out) {
    json instances = json::array();
    for (const auto& r : reports) instances.push_back(to_json(r));
    json j{{"metadata", meta}, {"summary", summarize_tts(reports)}, {"instances", instances}};
    const auto written = write_json_report(*o.json_out, j);
    if (written != *o.json_out) std::cerr << "report exceeds 10 MB; wrote " << written << "\n";
  }
}

// ---------------------------------------------------------------- pipeline

struct PipelineOptions {
  std::size_t length = 8;
  std::size_t k = 3;
  std::string encoding = "positional";
  std::string penalty = "1";
  bool partition = false;
  SolverFlags solver;
  fs::path dir = "olcqubo-run";
};

bool cmd_pipeline(const PipelineOptions& o) {
  fs::create_directories(o.dir);
  const auto fasta = o.dir / "reads.fa";
  const auto graph = o.dir / "graph.json";
  const auto qubo = o.dir / "problem.qubo";
  const auto map = o.dir / "problem.map.json";
  const auto result = o.dir / "result.json";
  // Draw a sequence the same way bench does, so the graph has a path.
  std::set<std::string> accepted;
  const auto inst = generate_instance(o.length, o.k, parse_encoding(o.encoding), o.solver.seed, 0,
                                      accepted);
  std::ostringstream reads;
  const std::vector<FastaRecord> records{{"seq0 length=" + std::to_string(o.length), inst.sequence}};
  write_fasta(reads, records);
  write_file(fasta, reads.str());
  json meta = make_metadata("pipeline", o.solver.seed, {{"length", o.length}, {"k", o.k}});
  write_file(sidecar(fasta, ".json"),
             json{{"metadata", meta},
                  {"instances", {{{"index", 0}, {"seed", inst.spec.seed}, {"length", o.length},
                                  {"regenerations", inst.regenerations}}}}}
                 .dump(2));

  cmd_graph({fasta, o.k, std::nullopt, graph});
  cmd_qubo({graph, o.encoding, o.penalty, qubo, map});
  cmd_solve({qubo, result, o.solver});
  const auto assembly = o.dir / "assembly.json";
  if (!cmd_assemble({graph, map, result, o.partition, o.encoding, o.penalty, o.solver, assembly}))
    return false;
  const bool same = read_json(assembly).at("sequence") == inst.sequence.str();
  std::cerr << (same ? "matches" : "differs from") << " source " << inst.sequence.str() << "\n";
  return true;
}

void add_solver_flags(CLI::App* app, SolverFlags& f) {
  app->add_option("--solver", f.solver, "Solver: simcim or brute")
      ->check(CLI::IsMember({"simcim", "brute"}))
      ->capture_default_str();
  app->add_option("--config", f.config,
                  std::string("Solver config JSON (iterations, attempts, zeta, noise_sigma, "
                              "pump_start, pump_end, seed, max_spins); defaults to $") +
                      kConfigEnv)
      ->check(CLI::ExistingFile);
  app->add_option("--attempts", f.attempts, "SimCIM attempts (default 1000)")
      ->check(CLI::PositiveNumber);
  app->add_option("--iterations", f.iterations, "SimCIM iterations per attempt (default 1000)")
      ->check(CLI::PositiveNumber);
  app->add_option("--threads", f.threads, "SimCIM worker threads; 0 = hardware concurrency")
      ->capture_default_str();
  app->add_option("--max-spins", f.max_spins, "Exhaustive solver spin cap")->capture_default_str();
  app->add_option("--seed", f.seed, "Master seed")->capture_default_str();
}

void add_encoding_flags(CLI::App* app, std::string& encoding, std::string& penalty) {
  app->add_option("--encoding", encoding, "QUBO encoding: positional or edge")
      ->check(CLI::IsMember({"positional", "edge"}))
      ->capture_default_str();
  app->add_option("--penalty", penalty, "Penalty coefficient A (> 0)")->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"olcqubo: genome assembly on OLC graphs via QUBO/Ising solvers"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Generate random nucleotide sequences as FASTA");
  g->add_option("--length", gen.length, "Sequence length")->required()->check(CLI::PositiveNumber);
  g->add_option("--count", gen.count, "Number of sequences")->capture_default_str();
  g->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output FASTA; metadata goes to <out>.json")->required();

  GraphOptions gr;
  auto* gp = app.add_subcommand("graph", "Build the overlap graph of a FASTA file");
  gp->add_option("--input", gr.input, "Input FASTA")->required()->check(CLI::ExistingFile);
  gp->add_option("--k", gr.k, "Shred reads into k-mers; 0 uses reads as they are")
      ->capture_default_str();
  gp->add_option("--min-overlap", gr.min_overlap, "Minimum overlap (default k-1, or 1 with k=0)")
      ->check(CLI::PositiveNumber);
  gp->add_option("--out", gr.out, "Output graph JSON")->required();

  QuboOptions qo;
  auto* q = app.add_subcommand("qubo", "Formulate the Hamiltonian-path QUBO of a graph");
  q->add_option("--graph", qo.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  add_encoding_flags(q, qo.encoding, qo.penalty);
  q->add_option("--out", qo.out, "Output QUBO text file")->required();
  q->add_option("--map", qo.map_out, "Variable map JSON (default <out>.map.json)");

  SolveCmdOptions so;
  auto* s = app.add_subcommand("solve", "Minimize a QUBO with SimCIM or exhaustive search");
  s->add_option("--qubo", so.qubo, "QUBO text file")->required()->check(CLI::ExistingFile);
  s->add_option("--out", so.out, "Output result JSON")->required();
  add_solver_flags(s, so.solver);

  AssembleOptions ao;
  auto* a = app.add_subcommand("assemble", "Decode a solution into a path and sequence");
  a->add_option("--graph", ao.graph, "Graph JSON")->required()->check(CLI::ExistingFile);
  a->add_option("--map", ao.map, "Variable map JSON")->check(CLI::ExistingFile);
  a->add_option("--result", ao.result, "Solve result JSON")->check(CLI::ExistingFile);
  a->add_flag("--partition", ao.partition,
              "Split at bridges, solve each part with pinned ends, and stitch");
  add_encoding_flags(a, ao.encoding, ao.penalty);
  add_solver_flags(a, ao.solver);
  a->add_option("--out", ao.out, "Output assembly report JSON")->required();

  BenchOptions bo;
  auto* b = app.add_subcommand("bench", "Run a seeded synthetic benchmark campaign");
  b->add_option("--lengths", bo.lengths, "Sequence lengths")->capture_default_str();
  b->add_option("--count", bo.count, "Instances per length")->capture_default_str();
  b->add_option("--k", bo.k, "k-mer length")->capture_default_str();
  add_encoding_flags(b, bo.encoding, bo.penalty);
  b->add_option("--t-a-fixed", bo.t_a_fixed,
                "Per-run time t_a in microseconds (default: measured mean attempt time)");
  add_solver_flags(b, bo.solver);
  b->add_option("--csv", bo.csv, "CSV report path");
  b->add_option("--json", bo.json_out, "JSON report path (gzip as <path>.gz above 10 MB)");

  PipelineOptions po;
  auto* p = app.add_subcommand("pipeline", "generate, graph, qubo, solve and assemble in one go");
  p->add_option("--length", po.length, "Sequence length")->check(CLI::PositiveNumber)->capture_default_str();
  p->add_option("--k", po.k, "k-mer length")->capture_default_str();
  add_encoding_flags(p, po.encoding, po.penalty);
  p->add_flag("--partition", po.partition, "Assemble through bridge partitioning");
  add_solver_flags(p, po.solver);
  p->add_option("--dir", po.dir, "Working directory for stage files")->capture_default_str();

  try {
    app.parse(argc, argv);
    bool ok = true;
    if (*g) cmd_generate(gen);
    else if (*gp) cmd_graph(gr);
    else if (*q) cmd_qubo(qo);
    else if (*s) cmd_solve(so);
    else if (*a) ok = cmd_assemble(ao);
    else if (*b) cmd_bench(bo);
    else if (*p) ok = cmd_pipeline(po);
    return ok ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace
}  // namespace olcqubo::cli

int main(int argc, char** argv) { return olcqubo::cli::run(argc, argv); }
