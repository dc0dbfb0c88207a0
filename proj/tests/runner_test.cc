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

#include "arbocount/runner.h"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "arbocount/exact.h"

namespace arbocount {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Graph TwoK5() {
  std::vector<Edge> edges;
  for (Vertex base : {0u, 5u}) {
    for (Vertex a = 0; a < 5; ++a) {
      for (Vertex b = a + 1; b < 5; ++b) edges.emplace_back(base + a, base + b);
    }
  }
  return Graph::FromEdges(edges, 14);
}

TEST(RunEstimateTest, MainModeRecord) {
  const Graph g = TwoK5();
  RunConfig c;
  c.nk_guess = 20;
  c.compute_exact = true;
  const RunOutput out = RunEstimate(g, c, 3);
  const auto& r = out.record;
  EXPECT_EQ(r.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(r.at("status"), "ok");
  EXPECT_EQ(r.at("mode"), "main");
  EXPECT_EQ(r.at("exact"), 20);
  EXPECT_EQ(r.at("alpha"), 4.0);  // degeneracy of two K5
  EXPECT_EQ(r.at("m_strategy"), "exact-sidechannel");
  EXPECT_TRUE(r.at("m_side_channel").get<bool>());
  EXPECT_EQ(r.at("m_used"), 20.0);
  EXPECT_DOUBLE_EQ(r.at("eps_used").get<double>(), ClampEpsilon(0.25, 3));
  EXPECT_EQ(r.at("estimate").get<double>(), out.estimate);
  EXPECT_EQ(r.at("queries").at("raw_total"), out.queries.raw_total());
  EXPECT_FALSE(r.contains("trace"));
  EXPECT_FALSE(out.budget_exceeded);
}

TEST(RunEstimateTest, SearchModeRecordAndDeterminism) {
  const Graph g = TwoK5();
  RunConfig c;
  c.include_trace = true;
  const RunOutput a = RunEstimate(g, c, 11);
  const RunOutput b = RunEstimate(g, c, 11);
  EXPECT_EQ(a.record.dump(), b.record.dump());
  EXPECT_EQ(a.record.at("mode"), "search");
  EXPECT_TRUE(a.record.at("search_steps").is_array());
  EXPECT_TRUE(a.record.at("trace").is_array());
  EXPECT_EQ(a.record.at("exact"), nullptr);
  const auto& steps = a.record.at("search_steps");
  EXPECT_DOUBLE_EQ(steps.front().at("nk_guess").get<double>(), 14.0 * 14.0 * 14.0);
  EXPECT_EQ(a.record.at("nk_guess_final"), steps.back().at("nk_guess"));
}

TEST(RunEstimateTest, BudgetOverrunIsReported) {
  const Graph g = TwoK5();
  RunConfig c;
  c.nk_guess = 20;
  c.budget = 50;
  const RunOutput out = RunEstimate(g, c, 1);
  EXPECT_TRUE(out.budget_exceeded);
  EXPECT_EQ(out.record.at("status"), "budget-exceeded");
  EXPECT_EQ(out.record.at("budget"), 50);
  EXPECT_EQ(out.record.at("estimate"), nullptr);
  EXPECT_EQ(out.queries.raw_total(), 51u);  // includes the refused query
}

TEST(RunConfigTest, ParsesAndValidates) {
  const RunConfig c = RunConfigFromJson({{"k", 4},
                                         {"eps", 0.1},
                                         {"scale", 2.5},
                                         {"profile", "analysis"},
                                         {"m_strategy", "degree-sampling"},
                                         {"alpha", 3},
                                         {"nk_guess", 9},
                                         {"budget", 1000},
                                         {"exact", false}});
  EXPECT_EQ(c.estimator.k, 4);
  EXPECT_EQ(c.estimator.eps, 0.1);
  EXPECT_EQ(c.estimator.scale, 2.5);
  EXPECT_EQ(c.estimator.profile, ConstantProfile::kAnalysis);
  EXPECT_EQ(c.estimator.edge_strategy, EdgeStrategy::kDegreeSampling);
  EXPECT_EQ(c.alpha, 3.0);
  EXPECT_EQ(c.nk_guess, 9.0);
  EXPECT_EQ(c.budget, 1000u);
  EXPECT_FALSE(c.compute_exact);

  EXPECT_TRUE(RunConfigFromJson(nlohmann::json::object()).compute_exact);
  EXPECT_THROW(RunConfigFromJson({{"k", 1}}), std::invalid_argument);
  EXPECT_THROW(RunConfigFromJson({{"eps", 1.5}}), std::invalid_argument);
  EXPECT_THROW(RunConfigFromJson({{"delta", 0}}), std::invalid_argument);
  EXPECT_THROW(RunConfigFromJson({{"profile", "fast"}}), std::invalid_argument);
  EXPECT_THROW(RunConfigFromJson({{"k", "three"}}), std::invalid_argument);
  EXPECT_THROW(RunConfigFromJson(nlohmann::json::array()), std::invalid_argument);
}

nlohmann::json SmallManifest() {
  return {{"repetitions", 2},
          {"seed_base", 100},
          {"jobs",
           {{{"graph", {{"family", "complete"}, {"size", 6}}}, {"estimator", {{"nk_guess", 20}}}},
            {{"graph", {{"family", "cliques"}, {"n", 60}, {"m", 60}, {"alpha", 4}, {"clique_sizes", {5}}}},
             {"estimator", {{"nk_guess", 10}, {"budget", 10}}}}}}};
}

TEST(ManifestTest, ParseAndReject) {
  const SweepManifest m = ParseManifest(SmallManifest());
  EXPECT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.repetitions, 2u);
  EXPECT_EQ(m.seed_base, 100u);
  EXPECT_FALSE(m.record_time);
  EXPECT_EQ(m.workers, 1u);
  EXPECT_THROW(ParseManifest(nlohmann::json::array()), std::invalid_argument);
  EXPECT_THROW(ParseManifest({{"jobs", 3}}), std::invalid_argument);
  EXPECT_THROW(ParseManifest({{"jobs", {{{"estimator", nlohmann::json::object()}}}}}), std::invalid_argument);
  EXPECT_THROW(ParseManifest({{"jobs", {{{"graph", {{"family", "complete"}}}, {"estimator", {{"k", 0}}}}}}}),
               std::invalid_argument);
}

TEST(SweepTest, RowsSeedsAndColumns) {
  const SweepManifest m = ParseManifest(SmallManifest());
  std::ostringstream csv;
  RunSweep(m, csv);
  const auto lines = Lines(csv.str());
  ASSERT_EQ(lines.size(), 2u + 4u);
  EXPECT_EQ(lines[0], "# arbocount sweep csv v1");
  const auto header = Fields(lines[1]);
  EXPECT_EQ(header.size(), 23u);
  for (std::size_t job = 0; job < 4; ++job) {
    const auto f = Fields(lines[2 + job]);
    ASSERT_EQ(f.size(), header.size());
    EXPECT_EQ(f[0], std::to_string(job));
    EXPECT_EQ(f[10], std::to_string(100 + job));
    EXPECT_EQ(f[22], "");  // wall_ms only with record_time
  }
  // K6 has 20 triangles; the second entry runs out of budget.
  EXPECT_EQ(Fields(lines[2])[12], "20");
  EXPECT_EQ(Fields(lines[2])[11], "ok");
  EXPECT_EQ(Fields(lines[4])[11], "budget-exceeded");
  EXPECT_EQ(Fields(lines[4])[13], "");
  EXPECT_EQ(Fields(lines[4])[12], "10");
}

TEST(SweepTest, WorkerCountDoesNotChangeOutput) {
  SweepManifest m = ParseManifest(SmallManifest());
  std::ostringstream one;
  RunSweep(m, one);
  m.workers = 3;
  std::ostringstream three;
  RunSweep(m, three);
  EXPECT_EQ(one.str(), three.str());
}

TEST(SweepTest, RecordTimeFillsWallClock) {
  SweepManifest m = ParseManifest(SmallManifest());
  m.record_time = true;
  std::ostringstream csv;
  RunSweep(m, csv);
  const auto lines = Lines(csv.str());
  EXPECT_FALSE(Fields(lines[2])[22].empty());
}

}  // namespace
}  // namespace arbocount
