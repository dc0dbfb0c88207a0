// Copyright 2026 The Arbocount Authors.
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

#include "arbocount/exact.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "arbocount/generators.h"
#include "test_util.h"

namespace arbocount {
namespace {

using testing::BruteCliqueList;
using testing::BruteCliques;
using testing::RandomGraph;

Graph Complete(std::size_t n) { return GenNamed("complete", n); }

// Triangle {0,1,2} with pendant vertices attached to push degrees to `deg`.
Graph TriangleWithDegrees(std::size_t d0, std::size_t d1, std::size_t d2) {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  Vertex next = 3;
  const std::size_t want[] = {d0, d1, d2};
  for (Vertex v = 0; v < 3; ++v) {
    for (std::size_t i = 2; i < want[v]; ++i) e.emplace_back(v, next++);
  }
  return Graph::FromEdges(e, next);
}

TEST(DegeneracyTest, Examples) {
  EXPECT_EQ(Degeneracy(GenNamed("path", 9)), 1u);
  EXPECT_EQ(Degeneracy(GenNamed("star", 7)), 1u);
  EXPECT_EQ(Degeneracy(Complete(6)), 5u);
  EXPECT_EQ(Degeneracy(GenNamed("cycle", 6)), 2u);
  EXPECT_EQ(Degeneracy(Graph::FromEdges(std::vector<Edge>{}, 4)), 0u);
}

TEST(DegeneracyTest, MatchesSubsetOracle) {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    const Graph g = RandomGraph(12, 0.15 + 0.02 * seed, seed);
    EXPECT_EQ(Degeneracy(g), testing::BruteDegeneracy(g)) << "seed " << seed;
  }
}

TEST(DegeneracyTest, OrderIsAPermutationWithBoundedForwardDegree) {
  const Graph g = RandomGraph(60, 0.1, 4);
  const auto order = DegeneracyOrder(g);
  ASSERT_EQ(order.size(), g.num_vertices());
  std::vector<std::size_t> pos(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  EXPECT_EQ(std::set<Vertex>(order.begin(), order.end()).size(), order.size());
  const std::size_t d = Degeneracy(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t later = 0;
    for (Vertex u : g.neighbors(v)) later += pos[u] > pos[v];
    EXPECT_LE(later, d);
  }
}

TEST(CountCliquesTest, Examples) {
  EXPECT_EQ(CountCliques(Complete(5), 3), 10u);
  EXPECT_EQ(CountCliques(GenNamed("petersen", 0), 3), 0u);
  EXPECT_EQ(CountCliques(GenNamed("wheel", 6), 3), 6u);
  EXPECT_EQ(BruteCliques(GenNamed("wheel", 6), 3), 6u);
  EXPECT_EQ(CountCliques(Complete(4), 7), 0u);
  EXPECT_EQ(CountCliques(Complete(4), 1), 4u);
  EXPECT_THROW(CountCliques(Complete(4), 0), std::invalid_argument);
}

TEST(CountCliquesTest, MatchesBruteForce) {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 8 + seed % 14;
    const Graph g = RandomGraph(n, 0.3 + 0.01 * (seed % 30), seed);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(CountCliques(g, k), BruteCliques(g, k)) << "seed " << seed << " k " << k;
    const auto upto = CountCliquesUpTo(g, 5);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(upto.at(static_cast<std::size_t>(k)), BruteCliques(g, k));
  }
}

TEST(EnumerateCliquesTest, Examples) {
  const Graph tri = Complete(3);
  EXPECT_EQ(EnumerateCliques(tri, 2), (std::vector<Clique>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(EnumerateCliques(tri, 3), (std::vector<Clique>{{0, 1, 2}}));
  EXPECT_TRUE(EnumerateCliques(GenNamed("path", 3), 3).empty());
}

TEST(EnumerateCliquesTest, EachCliqueOnceAndSorted) {
  for (std::uint32_t seed = 0; seed < 15; ++seed) {
    const Graph g = RandomGraph(16, 0.45, seed);
    for (int t = 1; t <= 4; ++t) {
      auto got = EnumerateCliques(g, t);
      for (const auto& c : got) EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, BruteCliqueList(g, t));
    }
  }
}

TEST(CliqueDegreeTest, Examples) {
  const Graph a = TriangleWithDegrees(2, 3, 4);
  const Vertex abc[] = {0, 1, 2};
  EXPECT_EQ(CliqueDegree(a, abc).vertex, 0u);
  EXPECT_EQ(CliqueDegree(a, abc).degree, 2u);

  const Graph b = TriangleWithDegrees(3, 3, 5);
  const Vertex rev[] = {2, 1, 0};
  EXPECT_EQ(CliqueDegree(b, rev).vertex, 0u);
  EXPECT_EQ(CliqueDegree(b, rev).degree, 3u);

  const Vertex single[] = {2};
  EXPECT_EQ(CliqueDegree(b, single).vertex, 2u);
  EXPECT_EQ(CliqueDegree(b, single).degree, 5u);
}

TEST(CliqueDegreeTest, RejectsNonClique) {
  const Graph p = GenNamed("path", 3);
  const Vertex ends[] = {0, 2};
  EXPECT_THROW(CliqueDegree(p, ends), std::invalid_argument);
}

// Independent count: brute-force list of j-cliques containing T.
std::vector<std::vector<Vertex>> Containing(const Graph& g, std::span<const Vertex> t, int j) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : BruteCliqueList(g, j)) {
    bool all = true;
    for (Vertex v : t) all = all && std::binary_search(c.begin(), c.end(), v);
    if (all) out.push_back(c);
  }
  return out;
}

TEST(CliqueStatsTest, Examples) {
  const Graph k4 = Complete(4);
  const Vertex one[] = {0};
  const Vertex edge[] = {0, 1};
  EXPECT_EQ(ComputeCliqueStats(k4, one, 3).c_k, 3u);
  EXPECT_EQ(ComputeCliqueStats(k4, edge, 3).c_k, 2u);
  const Vertex all3[] = {0, 1, 2};
  EXPECT_EQ(ComputeCliqueStats(k4, all3, 3).c_k, 1u);
}

TEST(CliqueStatsTest, MatchesBruteForce) {
  for (std::uint32_t seed = 0; seed < 8; ++seed) {
    const Graph g = RandomGraph(14, 0.5, 100 + seed);
    const int k = 4;
    for (int t = 1; t <= k; ++t) {
      for (const auto& c : BruteCliqueList(g, t)) {
        const CliqueStats s = ComputeCliqueStats(g, c, k);
        ASSERT_EQ(s.c_k, Containing(g, c, k).size());
        for (int j = t; j < k; ++j) {
          std::uint64_t sum = 0;
          for (const auto& big : Containing(g, c, j)) {
            std::size_t low = SIZE_MAX;
            for (Vertex v : big) low = std::min(low, g.degree(v));
            sum += low;
          }
          ASSERT_EQ(s.d_c(j), sum);
        }
        if (t < k) {
          std::size_t low = SIZE_MAX;
          for (Vertex v : c) low = std::min(low, g.degree(v));
          EXPECT_EQ(s.d_c(t), low);
        }
      }
    }
  }
}

// Degree-sum and clique-count inequalities driven by the degeneracy bound.
TEST(InvariantsTest, DegreeSumsAndCountRatios) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomGraph(20, 0.2 + 0.02 * seed, seed);
    const double d = static_cast<double>(Degeneracy(g));
    const double m = static_cast<double>(g.num_edges());
    std::vector<double> n(7, 0);
    n[0] = 1;
    for (int t = 1; t <= 5; ++t) {
      const auto list = BruteCliqueList(g, t);
      n[static_cast<std::size_t>(t)] = static_cast<double>(list.size());
      double sum = 0;
      for (const auto& c : list) {
        std::size_t low = SIZE_MAX;
        for (Vertex v : c) low = std::min(low, g.degree(v));
        sum += static_cast<double>(low);
      }
      EXPECT_LE(sum, 2 * m * std::pow(d, t - 1)) << "t " << t;
      if (t >= 2) EXPECT_LE(n[t], 2 * d / t * n[t - 1]);
    }
    for (int k = 2; k <= 5; ++k) {
      for (int t = 1; t < k; ++t) {
        const double rhs = static_cast<double>(Factorial(t)) / static_cast<double>(Factorial(k)) * n[t] *
                           std::pow(2 * d, k - t);
        EXPECT_LE(n[k], rhs);
      }
    }
  }
}

TEST(InvariantsTest, CliqueContainmentSums) {
  const Graph g = RandomGraph(18, 0.45, 77);
  const int k = 4;
  const std::uint64_t nk = BruteCliques(g, k);
  const std::uint64_t choose[] = {0, 4, 6, 4, 1};
  for (int t = 1; t <= k; ++t) {
    std::uint64_t sum = 0;
    for (const auto& c : BruteCliqueList(g, t)) sum += ComputeCliqueStats(g, c, k).c_k;
    EXPECT_EQ(sum, choose[t] * nk);
  }
}

TEST(CombinatoricsTest, BinomialAndFactorial) {
  EXPECT_EQ(Binomial(5, 3), 10u);
  EXPECT_EQ(Binomial(3, 5), 0u);
  EXPECT_EQ(Binomial(20, 10), 184756u);
  EXPECT_EQ(Factorial(0), 1u);
  EXPECT_EQ(Factorial(5), 120u);
}

}  // namespace
}  // namespace arbocount
