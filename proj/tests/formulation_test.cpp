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

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "olcqubo/brute_force.hpp"
#include "olcqubo/formulation.hpp"
#include "olcqubo/qubo.hpp"
#include "olcqubo/qubo_io.hpp"
#include "oracles.hpp"

namespace olcqubo {
namespace {

using testing::Arcs;
using testing::make_digraph;

std::vector<std::uint8_t> bits_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::uint8_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
  return b;
}

std::vector<std::int8_t> spins_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::int8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
  return s;
}

QuboProblem random_qubo(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-8, 8), den(1, 4);
  QuboProblem q;
  q.n = n;
  for (std::size_t i = 0; i < n; ++i) q.add_linear(i, Coefficient(coef(rng), den(rng)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2) q.add_quadratic(i, j, Coefficient(coef(rng), den(rng)));
  q.offset = Coefficient(coef(rng), den(rng));
  q.prune();
  return q;
}

TEST(PositionalQuboTest, SingleVertex) {
  auto f = positional_qubo(make_digraph(1, {}), 1);
  EXPECT_EQ(f.qubo.n, 1u);
  std::vector<std::uint8_t> one{1}, zero{0};
  EXPECT_EQ(f.qubo.objective<std::uint8_t>(one), 0);
  EXPECT_EQ(f.qubo.objective<std::uint8_t>(zero), 2);
}

TEST(PositionalQuboTest, TwoVertexEnumeration) {
  Arcs arcs{{0, 1}};
  auto g = make_digraph(2, arcs);
  auto f = positional_qubo(g, 1);
  ASSERT_EQ(f.qubo.n, 4u);
  // All 16 configurations against the matrix-form objective.
  for (std::uint64_t m = 0; m < 16; ++m) {
    auto b = bits_of(m, 4);
    EXPECT_EQ(f.qubo.objective<std::uint8_t>(b),
              testing::positional_objective_from_matrix(2, arcs, b, 1));
  }
  // x[0][0] = x[1][1] = 1 encodes path (0, 1); vars are v * N + j.
  std::vector<std::uint8_t> forward{1, 0, 0, 1}, reverse{0, 1, 1, 0};
  EXPECT_EQ(f.qubo.objective<std::uint8_t>(forward), 0);
  EXPECT_GE(f.qubo.objective<std::uint8_t>(reverse), 1);
}

TEST(PositionalQuboTest, SizesMatchVertexCountSquared) {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto f = positional_qubo(make_digraph(n, {}), 1);
    EXPECT_EQ(f.qubo.n, n * n);
    EXPECT_EQ(f.map.size(), n * n);
  }
  EXPECT_EQ(positional_qubo(make_digraph(3, {}), 1).qubo.n, 9u);
  EXPECT_EQ(positional_qubo(make_digraph(8, {}), 1).qubo.n, 64u);
}

TEST(PositionalQuboTest, RejectsNonPositivePenalty) {
  EXPECT_THROW(positional_qubo(make_digraph(2, {}), 0), std::invalid_argument);
  EXPECT_THROW(positional_qubo(make_digraph(2, {}), -1), std::invalid_argument);
}

TEST(PositionalQuboTest, MatrixDecompositionProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    auto arcs = testing::random_arcs(n, 0.5, rng);
    const long long a = 1 + trial % 3;
    auto f = positional_qubo(make_digraph(n, arcs), a);
    for (int s = 0; s < 200; ++s) {
      auto b = bits_of(rng(), n * n);
      EXPECT_EQ(f.qubo.objective<std::uint8_t>(b),
                testing::positional_objective_from_matrix(n, arcs, b, a));
    }
  }
}

TEST(PositionalQuboTest, ZeroEnergyIffHamiltonianPath) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto arcs = testing::random_arcs(n, 0.4, rng);
    auto f = positional_qubo(make_digraph(n, arcs), 1);
    auto paths = testing::hamiltonian_paths_by_permutation(n, arcs);
    std::size_t zeros = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m)
      zeros += f.qubo.objective<std::uint8_t>(bits_of(m, n * n)) == 0;
    EXPECT_EQ(zeros, paths.size());
  }
}

TEST(PositionalQuboTest, PinnedEndpoints) {
  // 0 -> 1 -> 2 and 2 -> 0: paths (0,1,2), (1,2,0), (2,0,1).
  Arcs arcs{{0, 1}, {1, 2}, {2, 0}};
  auto g = make_digraph(3, arcs);
  auto f = positional_qubo(g, 1, {.first = 1, .last = std::nullopt});
  auto ground = brute_force(qubo_to_ising(f.qubo));
  EXPECT_EQ(ground.ground_energy, 0);
  ASSERT_EQ(ground.configs.size(), 1u);
  auto b = ground.configs[0].bits();
  EXPECT_EQ(b[1 * 3 + 0], 1);  // vertex 1 at step 0
  EXPECT_EQ(b[2 * 3 + 1], 1);
  EXPECT_EQ(b[0 * 3 + 2], 1);
}

TEST(EdgeQuboTest, ChainOfThree) {
  auto f = edge_qubo(make_digraph(3, {{0, 1}, {1, 2}}), 1);
  ASSERT_EQ(f.qubo.n, 2u);
  // Enumerated: (0,0)->6, (1,0)->4, (0,1)->4, (1,1)->2.
  std::vector<std::vector<std::uint8_t>> cfg{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<int> expected{6, 4, 4, 2};
  for (std::size_t i = 0; i < cfg.size(); ++i)
    EXPECT_EQ(f.qubo.objective<std::uint8_t>(cfg[i]), expected[i]);
}

TEST(EdgeQuboTest, SingleVertex) {
  auto f = edge_qubo(make_digraph(1, {}), 3);
  EXPECT_EQ(f.qubo.n, 0u);
  EXPECT_EQ(f.qubo.offset, 6);
}

TEST(EdgeQuboTest, RejectsCycles) {
  try {
    edge_qubo(make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 1);
    FAIL();
  } catch (const NotAcyclicError& e) {
    EXPECT_EQ(e.cycle().size(), 3u);
  }
}

TEST(EdgeQuboTest, GroundEnergyIsTwiceMinPathCover) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto arcs = testing::random_dag_arcs(n, 0.5, rng);
    if (arcs.size() > 8) continue;
    const long long a = 1 + trial % 2;
    auto f = edge_qubo(make_digraph(n, arcs), a);
    EXPECT_EQ(f.map.size(), arcs.size());
    auto ground = brute_force(qubo_to_ising(f.qubo));
    EXPECT_EQ(ground.ground_energy,
              2 * a * static_cast<long long>(testing::min_path_cover_by_enumeration(n, arcs)));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(EdgeQuboTest, PinnedEndpoints) {
  // Diamond 0->1->3, 0->2->3, 1->2: the only Hamiltonian path is 0,1,2,3.
  // Pinning last = 2 has no solution, so the ground energy exceeds 2A.
  Arcs arcs{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  auto g = make_digraph(4, arcs);
  EXPECT_EQ(brute_force(qubo_to_ising(edge_qubo(g, 1, {.first = 0, .last = 3}).qubo)).ground_energy, 2);
  EXPECT_GT(brute_force(qubo_to_ising(edge_qubo(g, 1, {.first = std::nullopt, .last = 2}).qubo)).ground_energy, 2);
}

TEST(PhysicalQubitsTest, TableValues) {
  EXPECT_EQ(estimate_physical_qubits(9), 36u);
  EXPECT_EQ(estimate_physical_qubits(16), 80u);
  EXPECT_EQ(estimate_physical_qubits(25), 200u);
  EXPECT_EQ(estimate_physical_qubits(36), 360u);
  EXPECT_EQ(estimate_physical_qubits(49), 686u);
  EXPECT_EQ(estimate_physical_qubits(64), 1088u);
  EXPECT_THROW(estimate_physical_qubits(0), std::invalid_argument);
}

TEST(TransformTest, LinearTerm) {
  QuboProblem q;
  q.n = 1;
  q.add_linear(0, 3);
  auto m = qubo_to_ising(q);
  EXPECT_EQ(m.h().at(0), Coefficient(3, 2));
  EXPECT_EQ(m.offset, Coefficient(3, 2));
  EXPECT_TRUE(m.J().empty());
}

TEST(TransformTest, QuadraticTerm) {
  QuboProblem q;
  q.n = 2;
  q.add_quadratic(0, 1, 1);
  auto m = qubo_to_ising(q);
  EXPECT_EQ(m.J().at({0, 1}), Coefficient(1, 4));
  EXPECT_EQ(m.h().at(0), Coefficient(1, 4));
  EXPECT_EQ(m.h().at(1), Coefficient(1, 4));
  EXPECT_EQ(m.offset, Coefficient(1, 4));
}

TEST(TransformTest, InverseOfLinear) {
  IsingProblem m;
  m.n = 1;
  m.add_linear(0, Coefficient(1, 2));
  m.offset = Coefficient(1, 2);
  auto q = ising_to_qubo(m);
  EXPECT_EQ(q.linear.at(0), 1);
  EXPECT_EQ(q.offset, 0);
  EXPECT_TRUE(q.quadratic.empty());
}

TEST(TransformTest, PositionalEnergiesPreserved) {
  auto f = positional_qubo(make_digraph(2, {{0, 1}}), 1);
  auto m = qubo_to_ising(f.qubo);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    auto b = bits_of(mask, 4);
    SpinConfiguration s(spins_of(mask, 4));
    EXPECT_EQ(f.qubo.objective<std::uint8_t>(b), exact_energy(m, s));
  }
}

TEST(TransformTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto q = random_qubo(1 + trial % 6, rng);
    auto back = ising_to_qubo(qubo_to_ising(q));
    EXPECT_EQ(static_cast<const detail::QuadraticForm&>(back),
              static_cast<const detail::QuadraticForm&>(q));
  }
}

TEST(TransformTest, FiveVariableEnergiesAgree) {
  std::mt19937_64 rng(99);
  auto q = random_qubo(5, rng);
  auto m = qubo_to_ising(q);
  auto q2 = ising_to_qubo(m);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    auto b = bits_of(mask, 5);
    SpinConfiguration s(spins_of(mask, 5));
    EXPECT_EQ(q.objective<std::uint8_t>(b), exact_energy(m, s));
    EXPECT_EQ(q2.objective<std::uint8_t>(b), exact_energy(m, s));
    EXPECT_NEAR(q.value<std::uint8_t>(b), energy(m, s), 1e-9);
  }
}

TEST(NormalizeTest, DividesByMaxMagnitude) {
  IsingProblem m;
  m.n = 2;
  m.add_linear(0, 2);
  m.add_linear(1, -4);
  m.offset = 7;
  auto r = normalize_ising(m);
  EXPECT_EQ(r.scale, 4);
  EXPECT_EQ(r.problem.h().at(0), Coefficient(1, 2));
  EXPECT_EQ(r.problem.h().at(1), -1);
  EXPECT_EQ(r.problem.offset, 7);
}

TEST(NormalizeTest, FixpointAndZeroProblem) {
  IsingProblem m;
  m.n = 2;
  m.add_linear(0, Coefficient(1, 2));
  m.add_pair(0, 1, -1);
  auto r = normalize_ising(m);
  EXPECT_EQ(r.scale, 1);
  EXPECT_EQ(static_cast<const detail::QuadraticForm&>(r.problem),
            static_cast<const detail::QuadraticForm&>(m));
  IsingProblem zero;
  zero.n = 3;
  zero.offset = 5;
  auto z = normalize_ising(zero);
  EXPECT_EQ(z.scale, 1);
  EXPECT_EQ(z.problem.offset, 5);
}

TEST(NormalizeTest, ArgminUnchanged) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = qubo_to_ising(random_qubo(4, rng));
    auto r = normalize_ising(m);
    EXPECT_LE(r.problem.max_abs_coefficient(), 1);
    // Exhaustive argmin on both problems via direct evaluation.
    auto argmin = [](const IsingProblem& p) {
      Coefficient best = 0;
      std::vector<std::uint64_t> arg;
      for (std::uint64_t mask = 0; mask < 16; ++mask) {
        auto e = exact_energy(p, SpinConfiguration(spins_of(mask, 4)));
        if (arg.empty() || e < best) {
          best = e;
          arg.assign(1, mask);
        } else if (e == best) {
          arg.push_back(mask);
        }
      }
      return arg;
    };
    EXPECT_EQ(argmin(m), argmin(r.problem));
  }
}

TEST(CoefficientTest, ParsesDecimals) {
  EXPECT_EQ(parse_coefficient("3"), 3);
  EXPECT_EQ(parse_coefficient("-0.25"), Coefficient(-1, 4));
  EXPECT_EQ(parse_coefficient("1.5e-3"), Coefficient(3, 2000));
  EXPECT_EQ(parse_coefficient("2E2"), 200);
  EXPECT_THROW(parse_coefficient("abc"), std::invalid_argument);
  EXPECT_THROW(parse_coefficient("1.2.3"), std::invalid_argument);
}

TEST(QuboTextTest, WriteAndRead) {
  auto f = positional_qubo(make_digraph(3, {{0, 1}, {1, 2}}), Coefficient(1, 2));
  std::ostringstream out;
  write_qubo_text(out, f.qubo, {"tool: test"});
  const auto text = out.str();
  EXPECT_EQ(text.rfind("# tool: test\np qubo 9 ", 0), 0u);
  std::istringstream in(text);
  auto q = read_qubo_text(in);
  EXPECT_EQ(static_cast<const detail::QuadraticForm&>(q),
            static_cast<const detail::QuadraticForm&>(f.qubo));
}

TEST(QuboTextTest, FormatUsesTwelveDigits) {
  EXPECT_EQ(format_coefficient(Coefficient(1, 3)), "0.333333333333");
  EXPECT_EQ(format_coefficient(Coefficient(-5, 4)), "-1.25");
}

TEST(QuboTextTest, Malformed) {
  auto parse = [](const char* s) {
    std::istringstream in(s);
    return read_qubo_text(in);
  };
  EXPECT_THROW(parse("0 0 1\n"), ParseError);
  EXPECT_THROW(parse("p qubo 2 1 0\n0 0 1\n"), ParseError);           // no offset
  EXPECT_THROW(parse("p qubo 2 1 0\n0 5 1\nc 0\n"), ParseError);      // range
  EXPECT_THROW(parse("p qubo 2 1 0\n1 0 1\nc 0\n"), ParseError);      // i > j
  EXPECT_THROW(parse("p qubo 2 2 0\n0 0 1\nc 0\n"), ParseError);      // counts
  EXPECT_NO_THROW(parse("p qubo 2 1 1\n0 0 1\n0 1 -2\nc 0.5\n"));
}

}  // namespace
}  // namespace olcqubo
