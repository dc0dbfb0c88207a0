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

#include "arbocount/sampler.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "arbocount/exact.h"
#include "arbocount/generators.h"
#include "arbocount/reference.h"
#include "test_util.h"

namespace arbocount {
namespace {

// Upper 1e-3 quantile of chi-square with `df` degrees of freedom
// (Wilson-Hilferty; z = 3.0902).
double ChiSquareCritical(double df) {
  const double a = 2.0 / (9.0 * df);
  return df * std::pow(1.0 - a + 3.0902 * std::sqrt(a), 3);
}

TEST(AliasTableTest, Examples) {
  const double uniform[] = {1, 1, 1, 1};
  const AliasTable u = AliasTable::Build(uniform);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(u.Probability(i), 0.25);

  const double skew[] = {3, 1};
  const AliasTable s = AliasTable::Build(skew);
  EXPECT_DOUBLE_EQ(s.Probability(0), 0.75);
  EXPECT_DOUBLE_EQ(s.Probability(1), 0.25);

  const double one[] = {0, 5};
  const AliasTable o = AliasTable::Build(one);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(o.Sample(rng), 1u);
}

TEST(AliasTableTest, RejectsBadWeights) {
  const double zeros[] = {0, 0};
  const double negative[] = {1, -1};
  const double nan[] = {1, NAN};
  EXPECT_THROW(AliasTable::Build(zeros), std::invalid_argument);
  EXPECT_THROW(AliasTable::Build(negative), std::invalid_argument);
  EXPECT_THROW(AliasTable::Build(nan), std::invalid_argument);
  EXPECT_THROW(AliasTable::Build(std::span<const double>()), std::invalid_argument);
}

TEST(AliasTableTest, TableProbabilitiesMatchWeights) {
  std::mt19937 gen(4);
  std::uniform_real_distribution<double> w(0.0, 10.0);
  std::vector<double> weights(200);
  for (double& x : weights) x = w(gen);
  weights[7] = 0;
  double total = 0;
  for (double x : weights) total += x;
  const AliasTable t = AliasTable::Build(weights);
  for (std::size_t i = 0; i < weights.size(); ++i) EXPECT_NEAR(t.Probability(i), weights[i] / total, 1e-12);
}

TEST(AliasTableTest, DrawsPassChiSquare) {
  const double weights[] = {5, 1, 3, 8, 2, 2, 9, 4, 1, 6, 7, 3};
  double total = 0;
  for (double x : weights) total += x;
  const AliasTable t = AliasTable::Build(weights);
  Rng rng(17);
  const int draws = 200000;
  std::vector<int> counts(std::size(weights));
  for (int i = 0; i < draws; ++i) ++counts[t.Sample(rng)];
  double chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double e = draws * weights[i] / total;
    chi += (counts[i] - e) * (counts[i] - e) / e;
  }
  EXPECT_LT(chi, ChiSquareCritical(static_cast<double>(counts.size() - 1)));
}

TEST(RngTest, UniformIntStaysInRangeAndIsReproducible) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.UniformInt(3, 9);
    EXPECT_GE(x, 3u);
    EXPECT_LE(x, 9u);
    EXPECT_EQ(x, b.UniformInt(3, 9));
    const double r = a.UniformReal();
    EXPECT_GE(r, 0.0);
    EXPECT_LT(r, 1.0);
    b.UniformReal();
  }
  Rng c(5);
  Rng child = c.Split();
  Rng c2(5);
  Rng child2 = c2.Split();
  EXPECT_EQ(child.NextU64(), child2.NextU64());
}

CliqueSample Single(QuerySession& s, std::initializer_list<Vertex> tuple) {
  CliqueSample r(static_cast<int>(tuple.size()));
  r.Add(s, std::vector<Vertex>(tuple));
  return r;
}

TEST(SampleSetTest, TriangleFromVertex) {
  const Graph tri = GenNamed("complete", 3);
  QuerySession s(tri);
  const CliqueSample r1 = Single(s, {0});
  Rng rng(3);
  const auto r2 = SampleSet(s, r1, 4, rng);
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(r2->size(), 4u);
  EXPECT_EQ(r2->level(), 2);
  // One degree query for Add; per trial a member re-query, the neighbor,
  // one pair check and the new vertex's degree.
  EXPECT_EQ(s.stats().degree, 1u + 4 * 2);
  EXPECT_EQ(s.stats().neighbor, 4u);
  EXPECT_EQ(s.stats().pair, 4u);
}

TEST(SampleSetTest, StarCenterAlwaysExtends) {
  const Graph star = GenNamed("star", 8);
  QuerySession s(star);
  Rng rng(4);
  const auto r2 = SampleSet(s, Single(s, {0}), 10, rng);
  ASSERT_TRUE(r2.has_value());
  EXPECT_EQ(r2->size(), 10u);
  for (std::size_t i = 0; i < r2->size(); ++i) {
    EXPECT_EQ(r2->item(i)[0], 0u);
    // Leaves have degree 1, so they become the least vertex.
    EXPECT_EQ(r2->least_vertex(i), r2->item(i)[1]);
    EXPECT_EQ(r2->degree(i), 1u);
  }
}

TEST(SampleSetTest, PathRepeatIsRejectedWithoutPairQueries) {
  const Graph path = GenNamed("path", 3);
  QuerySession s(path);
  const CliqueSample r2 = Single(s, {1, 0});
  EXPECT_EQ(r2.least_vertex(0), 0u);
  EXPECT_EQ(r2.degree(0), 1u);
  Rng rng(5);
  const auto r3 = SampleSet(s, r2, 5, rng);
  ASSERT_TRUE(r3.has_value());
  EXPECT_EQ(r3->size(), 0u);
  EXPECT_EQ(s.stats().pair, 0u);
}

TEST(SampleSetTest, ZeroDegreeSignalsEmpty) {
  const Graph g = Graph::FromEdges(std::vector<Edge>{{1, 2}}, 3);
  QuerySession s(g);
  Rng rng(6);
  EXPECT_FALSE(SampleSet(s, Single(s, {0}), 3, rng).has_value());
}

TEST(CliqueSampleTest, AddValidates) {
  const Graph path = GenNamed("path", 3);
  QuerySession s(path);
  CliqueSample r(2);
  const Vertex bad[] = {0, 2};
  const Vertex wrong_size[] = {0};
  EXPECT_THROW(r.Add(s, bad), std::invalid_argument);
  EXPECT_THROW(r.Add(s, wrong_size), std::invalid_argument);
}

// All ordered t-cliques of g as one sample.
CliqueSample AllOrdered(QuerySession& s, const Graph& g, int t) {
  CliqueSample r(t);
  for (auto c : testing::BruteCliqueList(g, t)) {
    do {
      r.Add(s, c);
    } while (std::next_permutation(c.begin(), c.end()));
  }
  return r;
}

TEST(SampleSetTest, EveryMemberIsAValidExtension) {
  for (std::uint32_t seed = 0; seed < 5; ++seed) {
    const Graph g = testing::RandomGraph(18, 0.4, seed);
    QuerySession s(g);
    for (int t = 1; t <= 3; ++t) {
      const CliqueSample rt = AllOrdered(s, g, t);
      if (rt.empty()) continue;
      std::set<std::vector<Vertex>> parents;
      for (std::size_t i = 0; i < rt.size(); ++i) parents.emplace(rt.item(i).begin(), rt.item(i).end());
      Rng rng(seed * 10 + static_cast<std::uint32_t>(t));
      const auto next = SampleSet(s, rt, 3000, rng);
      ASSERT_TRUE(next.has_value());
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < next->size(); ++i) {
        const auto item = next->item(i);
        ASSERT_EQ(item.size(), static_cast<std::size_t>(t) + 1);
        EXPECT_TRUE(parents.count(std::vector<Vertex>(item.begin(), item.end() - 1)));
        std::set<Vertex> distinct(item.begin(), item.end());
        EXPECT_EQ(distinct.size(), item.size());
        const auto m = testing::ToMatrix(g);
        for (std::size_t a = 0; a < item.size(); ++a) {
          for (std::size_t b = a + 1; b < item.size(); ++b) EXPECT_TRUE(m[item[a]][item[b]]);
        }
        // Cached least vertex: minimum degree, smallest id on ties.
        Vertex best = item[0];
        for (Vertex v : item) {
          if (g.degree(v) < g.degree(best) || (g.degree(v) == g.degree(best) && v < best)) best = v;
        }
        EXPECT_EQ(next->least_vertex(i), best);
        EXPECT_EQ(next->degree(i), g.degree(best));
        total += next->degree(i);
      }
      EXPECT_EQ(next->total_degree(), total);
    }
  }
}

// A small fixed graph: a K_5 on {0..4} sharing vertex 4 with a K_4 on
// {4..7}, plus a pendant path and a chord.
Graph TwelveVertexGraph() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = a + 1; b < 5; ++b) e.emplace_back(a, b);
  }
  for (Vertex a = 4; a < 8; ++a) {
    for (Vertex b = a + 1; b < 8; ++b) e.emplace_back(a, b);
  }
  e.insert(e.end(), {{7, 8}, {8, 9}, {9, 10}, {10, 11}, {8, 10}, {3, 9}, {11, 0}});
  return Graph::FromEdges(e, 12);
}

TEST(SampleSetTest, ExtensionPairsAreUniform) {
  const Graph g = TwelveVertexGraph();
  QuerySession s(g);
  const CliqueSample r2 = AllOrdered(s, g, 2);
  const std::uint64_t d = r2.total_degree();
  std::map<std::pair<std::size_t, Vertex>, std::uint64_t> counts;
  const std::function<void(std::size_t, Vertex)> record = [&](std::size_t i, Vertex v) { ++counts[{i, v}]; };
  Rng rng(2024);
  const std::uint64_t draws = 100000;
  ASSERT_TRUE(SampleSet(s, r2, draws, rng, &record).has_value());
  // Every (item, neighbor of its least vertex) pair is a category.
  double chi = 0;
  const double expected = static_cast<double>(draws) / static_cast<double>(d);
  std::uint64_t categories = 0;
  for (std::size_t i = 0; i < r2.size(); ++i) {
    for (Vertex v : g.neighbors(r2.least_vertex(i))) {
      const double c = static_cast<double>(counts[{i, v}]);
      chi += (c - expected) * (c - expected) / expected;
      ++categories;
    }
  }
  ASSERT_EQ(categories, d);
  ASSERT_EQ(counts.size(), d);  // no draw outside the categories
  EXPECT_LT(chi, ChiSquareCritical(static_cast<double>(d - 1)));
}

TEST(SampleSetTest, WeightIsUnbiased) {
  const Graph g = TwelveVertexGraph();
  const int k = 4;
  ActiveSet all(k);
  for (int t = 1; t <= k; ++t) {
    for (auto c : testing::BruteCliqueList(g, t)) {
      do {
        all.Insert(c);
      } while (std::next_permutation(c.begin(), c.end()));
    }
  }
  const WeightTable wt = ExactWeight(g, all, k);
  QuerySession s(g);
  for (int t = 1; t <= 2; ++t) {
    const CliqueSample rt = AllOrdered(s, g, t);
    double w_rt = 0;
    for (std::size_t i = 0; i < rt.size(); ++i) w_rt += static_cast<double>(wt.Weight(rt.item(i)));
    const std::uint64_t s_next = 3;
    const double want = w_rt / static_cast<double>(rt.total_degree()) * s_next;
    Rng rng(77 + static_cast<std::uint64_t>(t));
    double sum = 0;
    const int runs = 100000;
    for (int r = 0; r < runs; ++r) {
      Rng child = rng.Split();
      const auto next = SampleSet(s, rt, s_next, child);
      for (std::size_t i = 0; i < next->size(); ++i) sum += static_cast<double>(wt.Weight(next->item(i)));
    }
    EXPECT_NEAR(sum / runs / want, 1.0, 0.05) << "level " << t;
  }
}

}  // namespace
}  // namespace arbocount
