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

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <thread>

#include "arbocount/exact.h"

namespace arbocount {
namespace {

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

struct Row {
  std::string text;
};

}  // namespace

nlohmann::json QueryStatsJson(const QueryStats& q) {
  return {{"degree", q.degree},
          {"neighbor", q.neighbor},
          {"pair", q.pair},
          {"raw_total", q.raw_total()},
          {"distinct", q.distinct},
          {"materialized", q.materialized}};
}

RunOutput RunEstimate(const Graph& g, const RunConfig& config, std::uint64_t seed) {
  RunOutput out;
  EstimatorConfig est = config.estimator;
  est.alpha = config.alpha ? *config.alpha : static_cast<double>(std::max<std::size_t>(1, Degeneracy(g)));
  est.keep_traces = config.include_trace;
  if (config.compute_exact) out.exact = CountCliques(g, est.k);

  nlohmann::json& r = out.record;
  r["schema_version"] = kSchemaVersion;
  r["n"] = g.num_vertices();
  r["k"] = est.k;
  r["alpha"] = est.alpha;
  r["eps"] = est.eps;
  r["eps_used"] = ClampEpsilon(est.eps, est.k);
  r["delta"] = est.delta;
  r["scale"] = est.scale;
  r["profile"] = ProfileName(est.profile);
  r["abort_slack"] = est.abort_slack;
  r["seed"] = seed;
  r["mode"] = config.nk_guess ? "main" : "search";
  r["exact"] = out.exact ? nlohmann::json(*out.exact) : nlohmann::json(nullptr);

  QuerySession session(g, config.budget);
  Rng rng(seed);
  try {
    EdgeEstimate m;
    std::size_t runs = 0;
    std::size_t aborted = 0;
    double final_guess = 0;
    const std::vector<EstimateOutcome>* outcomes = nullptr;
    SearchResult search;
    MainResult main;
    if (config.nk_guess) {
      main = MainEstimate(session, *config.nk_guess, est, rng);
      out.estimate = main.value;
      m = main.m;
      runs = main.values.size();
      aborted = main.aborted;
      final_guess = *config.nk_guess;
      outcomes = &main.outcomes;
    } else {
      search = SearchEstimate(session, est, rng);
      out.estimate = search.estimate;
      m = search.m;
      runs = search.runs;
      aborted = search.aborted;
      final_guess = search.nk_guess_final;
      outcomes = &search.outcomes;
      auto& steps = r["search_steps"] = nlohmann::json::array();
      for (const auto& s : search.steps) {
        steps.push_back({{"nk_guess", s.nk_guess}, {"value", s.value}, {"runs", s.runs}, {"aborted", s.aborted}});
      }
      r["accepted"] = search.accepted;
    }
    r["status"] = "ok";
    r["m_used"] = m.value;
    r["m_strategy"] = EdgeStrategyName(m.strategy);
    r["m_side_channel"] = m.side_channel;
    r["nk_guess_final"] = final_guess;
    r["estimate"] = out.estimate;
    r["aborted_fraction"] = runs ? static_cast<double>(aborted) / static_cast<double>(runs) : 0.0;
    if (config.include_trace) {
      auto& trace = r["trace"] = nlohmann::json::array();
      for (const auto& o : *outcomes) trace.push_back(ToJson(o));
    }
  } catch (const QueryBudgetExceeded& e) {
    out.budget_exceeded = true;
    r["status"] = "budget-exceeded";
    r["budget"] = e.budget();
    r["estimate"] = nullptr;
    r["error"] = e.what();
  }
  out.queries = session.stats();
  r["queries"] = QueryStatsJson(out.queries);
  return out;
}

RunConfig RunConfigFromJson(const nlohmann::json& j) {
  RunConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw std::invalid_argument("estimator config must be an object");
  try {
    auto& e = c.estimator;
    e.k = j.value("k", e.k);
    e.eps = j.value("eps", e.eps);
    e.delta = j.value("delta", e.delta);
    e.scale = j.value("scale", e.scale);
    e.abort_slack = j.value("abort_slack", e.abort_slack);
    if (j.contains("profile")) e.profile = ParseProfile(j.at("profile").get<std::string>());
    if (j.contains("m_strategy")) e.edge_strategy = ParseEdgeStrategy(j.at("m_strategy").get<std::string>());
    if (j.contains("alpha") && !j.at("alpha").is_null()) c.alpha = j.at("alpha").get<double>();
    if (j.contains("nk_guess") && !j.at("nk_guess").is_null()) c.nk_guess = j.at("nk_guess").get<double>();
    if (j.contains("budget") && !j.at("budget").is_null()) c.budget = j.at("budget").get<std::uint64_t>();
    c.compute_exact = j.value("exact", true);
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed estimator config: ") + ex.what());
  }
  if (c.estimator.k < 2) throw std::invalid_argument("k must be >= 2");
  if (!(c.estimator.eps > 0 && c.estimator.eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(c.estimator.delta > 0 && c.estimator.delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  return c;
}

SweepManifest ParseManifest(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("manifest must be a JSON object");
  if (!j.contains("jobs") || !j.at("jobs").is_array()) throw std::invalid_argument("manifest needs a jobs array");
  SweepManifest m;
  try {
    m.repetitions = j.value("repetitions", std::size_t{1});
    m.seed_base = j.value("seed_base", std::uint64_t{0});
    m.output = j.value("output", std::string());
    m.record_time = j.value("record_time", false);
    m.workers = std::max<std::size_t>(1, j.value("workers", std::size_t{1}));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
  for (const auto& job : j.at("jobs")) {
    if (!job.is_object() || !job.contains("graph")) throw std::invalid_argument("every job needs a graph spec");
    SweepEntry entry;
    entry.graph = GenSpecFromJson(job.at("graph"));
    entry.run = RunConfigFromJson(job.value("estimator", nlohmann::json::object()));
    m.entries.push_back(std::move(entry));
  }
  return m;
}

std::string CsvHeader() {
  return "# arbocount sweep csv v" + std::to_string(kCsvVersion) +
         "\njob,family,n,m,alpha,k,eps,delta,scale,profile,seed,status,exact_nk,estimate,rel_error,"
         "nk_guess_final,aborted_fraction,degree_queries,neighbor_queries,pair_queries,raw_queries,"
         "distinct_queries,wall_ms\n";
}

void RunSweep(const SweepManifest& manifest, std::ostream& csv) {
  std::vector<Graph> graphs;
  graphs.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) graphs.push_back(Generate(e.graph));

  const std::size_t jobs = manifest.entries.size() * manifest.repetitions;
  std::vector<Row> rows(jobs);
  auto run_job = [&](std::size_t job) {
    const std::size_t entry_index = job / manifest.repetitions;
    const auto& entry = manifest.entries[entry_index];
    const Graph& g = graphs[entry_index];
    const std::uint64_t seed = manifest.seed_base + job;
    const auto start = std::chrono::steady_clock::now();
    RunOutput out = RunEstimate(g, entry.run, seed);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const auto& r = out.record;
    std::string exact = out.exact ? std::to_string(*out.exact) : "";
    std::string rel;
    if (out.exact && *out.exact > 0 && !out.budget_exceeded) {
      rel = Num((out.estimate - static_cast<double>(*out.exact)) / static_cast<double>(*out.exact));
    }
    std::string line = std::to_string(job) + "," + entry.graph.family + "," + std::to_string(g.num_vertices()) +
                       "," + std::to_string(g.num_edges()) + "," + Num(r.at("alpha").get<double>()) + "," +
                       std::to_string(entry.run.estimator.k) + "," + Num(entry.run.estimator.eps) + "," +
                       Num(entry.run.estimator.delta) + "," + Num(entry.run.estimator.scale) + "," +
                       ProfileName(entry.run.estimator.profile) + "," + std::to_string(seed) + "," +
                       r.at("status").get<std::string>() + "," + exact + "," +
                       (out.budget_exceeded ? std::string() : Num(out.estimate)) + "," + rel + "," +
                       (r.contains("nk_guess_final") ? Num(r.at("nk_guess_final").get<double>()) : "") + "," +
                       (r.contains("aborted_fraction") ? Num(r.at("aborted_fraction").get<double>()) : "") + "," +
                       std::to_string(out.queries.degree) + "," + std::to_string(out.queries.neighbor) + "," +
                       std::to_string(out.queries.pair) + "," + std::to_string(out.queries.raw_total()) + "," +
                       std::to_string(out.queries.distinct) + "," + (manifest.record_time ? Num(ms) : "") + "\n";
    rows[job].text = std::move(line);
  };

  if (manifest.workers <= 1) {
    for (std::size_t job = 0; job < jobs; ++job) run_job(job);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(manifest.workers, jobs); ++w) {
      pool.emplace_back([&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
          try {
            run_job(job);
          } catch (...) {
            errors[job] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  csv << CsvHeader();
  for (const auto& row : rows) csv << row.text;
}

}  // namespace arbocount
