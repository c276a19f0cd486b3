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

#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "olcqubo/campaign.hpp"
#include "olcqubo/metadata.hpp"

namespace olcqubo {
namespace {

CampaignSpec small_campaign() {
  CampaignSpec s;
  s.lengths = {5, 6};
  s.instances_per_length = 3;
  s.simcim.attempts = 40;
  s.simcim.iterations = 300;
  s.master_seed = 2026;
  s.fixed_t_a_us = 20.0;
  return s;
}

std::string csv_of(const std::vector<InstanceReport>& reports) {
  std::ostringstream out;
  write_csv(out, reports);
  return out.str();
}

TEST(GenerateInstanceTest, ScreensCandidates) {
  std::set<std::string> accepted;
  std::set<std::string> sequences;
  for (std::size_t i = 0; i < 8; ++i) {
    auto inst = generate_instance(6, 3, Encoding::kPositional, 7, i, accepted);
    EXPECT_EQ(inst.graph.vertex_count(), 4u);
    EXPECT_GT(inst.graph.edge_count(), 3u);  // not a bare chain
    EXPECT_GE(count_hamiltonian_paths(inst.graph.topology(), 1), 1u);
    EXPECT_EQ(inst.regenerations, [&] {
      std::size_t total = 0;
      for (const auto& [_, c] : inst.rejections) total += c;
      return total;
    }());
    sequences.insert(inst.sequence.str());
  }
  EXPECT_EQ(accepted.size(), 8u);  // pairwise distinct graphs
  EXPECT_EQ(sequences.size(), 8u);
}

TEST(GenerateInstanceTest, EdgeEncodingGetsAcyclicGraphs) {
  std::set<std::string> accepted;
  for (std::size_t i = 0; i < 5; ++i) {
    auto inst = generate_instance(7, 3, Encoding::kEdge, 11, i, accepted);
    EXPECT_TRUE(find_cycle(inst.graph.topology()).empty());
  }
}

TEST(GenerateInstanceTest, ScreenReasons) {
  std::set<std::string> none;
  auto check = [&](const char* s) {
    NucleotideSequence seq(s);
    auto kmers = shred_to_kmers(seq, 3);
    auto g = build_olc_graph(kmers, 2);
    return screen_candidate(seq, kmers, g, Encoding::kPositional, none);
  };
  EXPECT_EQ(check("ACACA"), "repeated-kmer");
  EXPECT_EQ(check("ATCGA"), "chain");
  EXPECT_EQ(check("AACAA"), std::nullopt);  // CAA -> AAC closes a cycle
}

TEST(CampaignTest, LengthFiveHasNineVariables) {
  auto spec = small_campaign();
  spec.lengths = {5};
  spec.instances_per_length = 2;
  auto reports = run_campaign(spec);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.n_vars, 9u);
    EXPECT_EQ(r.physical_qubits_estimate, 36u);
    EXPECT_EQ(r.certification, Certification::kOracle);
    EXPECT_EQ(r.ground_energy, 0.0);
  }
}

TEST(CampaignTest, DeterministicCsv) {
  auto spec = small_campaign();
  const auto a = csv_of(run_campaign(spec));
  const auto b = csv_of(run_campaign(spec));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind(std::string(kCsvHeader) + "\n", 0), 0u);
  spec.master_seed = 2027;
  EXPECT_NE(csv_of(run_campaign(spec)), a);
}

TEST(CampaignTest, MissingValuesAreMarked) {
  InstanceReport r;
  r.length = 9;
  r.n_vars = 49;
  std::ostringstream out;
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "9,0,0,positional,49,NA,NA,uncertified,NA,uncertified,false\n");
  r.ground_energy = 0;
  r.tts = TtsReport{.theta = 0, .r99 = std::nullopt, .tts_us = std::nullopt, .t_a_us = 20};
  out.str("");
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "9,0,0,positional,49,0,0,unsolved,20,unsolved,false\n");
}

TEST(CampaignTest, EdgeEncodingCertifiesAtTwiceA) {
  auto spec = small_campaign();
  spec.encoding = Encoding::kEdge;
  spec.lengths = {7};
  spec.instances_per_length = 2;
  for (const auto& r : run_campaign(spec)) {
    EXPECT_EQ(r.n_vars, r.n_edges);
    EXPECT_EQ(r.ground_energy, 2.0);
  }
}

TEST(CampaignTest, SpecValidation) {
  CampaignSpec s;
  s.lengths = {};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = {};
  s.lengths = {2};
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = {};
  s.penalty = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  EXPECT_NO_THROW(CampaignSpec{}.validate());
}

TEST(CampaignTest, SummaryAndMetadata) {
  auto reports = run_campaign(small_campaign());
  auto j = summarize_tts(reports);
  EXPECT_TRUE(j.contains("tts_us"));
  EXPECT_TRUE(j["tts_us_by_length"].contains("5"));
  auto meta = make_metadata("bench", 2026, to_json(small_campaign()));
  EXPECT_EQ(meta["prng"], std::string(kPrngId));
  EXPECT_EQ(meta["master_seed"], 2026);
  auto lines = metadata_lines(meta);
  EXPECT_FALSE(lines.empty());
}

}  // namespace
}  // namespace olcqubo
