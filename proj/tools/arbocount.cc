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

// arbocount: generate instances, count k-cliques exactly or by sampling,
// check invariants, and run sweeps.
//
// Exit codes: 0 ok, 2 usage, 3 query budget exceeded, 4 invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbocount/edge_list.h"
#include "arbocount/estimator.h"
#include "arbocount/exact.h"
#include "arbocount/generators.h"
#include "arbocount/reference.h"
#include "arbocount/runner.h"
#include "json.hpp"

namespace {

using arbocount::Graph;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kInvariant = 4;

// Bad input that should be reported as a usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("ARBOCOUNT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("ARBOCOUNT_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

Graph LoadGraph(const std::string& path) {
  try {
    return arbocount::ReadEdgeListFile(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::uint8_t> ParseBits(const std::string& bits, const char* name) {
  std::vector<std::uint8_t> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw UsageError(std::string("--") + name + " must be a 0/1 string");
    out.push_back(c == '1');
  }
  return out;
}

struct GenerateArgs {
  std::string family;
  std::string output;
  std::optional<std::size_t> size, n, m, alpha;
  std::optional<std::uint64_t> nk;
  int k = 3;
  bool unplanted = false;
  std::vector<std::size_t> sizes;
  std::string x, y;
  std::optional<std::size_t> r;
  std::optional<std::uint64_t> seed;
};

template <typename T>
T Require(const std::optional<T>& value, const std::string& flag, const std::string& family) {
  if (!value) throw UsageError("family '" + family + "' needs " + flag);
  return *value;
}

int RunGenerate(const GenerateArgs& a) {
  arbocount::GenSpec spec;
  spec.family = a.family;
  spec.k = a.k;
  spec.seed = a.seed ? *a.seed : DefaultSeed();
  const std::string& f = a.family;
  if (f == "incremental") {
    spec.n = Require(a.n, "--n", f);
    spec.alpha = Require(a.alpha, "--alpha", f);
  } else if (f == "planted") {
    spec.n = Require(a.n, "--n", f);
    spec.m = Require(a.m, "--m", f);
    spec.alpha = Require(a.alpha, "--alpha", f);
    spec.nk = Require(a.nk, "--nk", f);
    spec.planted = !a.unplanted;
  } else if (f == "cliques") {
    spec.n = Require(a.n, "--n", f);
    spec.m = Require(a.m, "--m", f);
    spec.alpha = Require(a.alpha, "--alpha", f);
    if (a.sizes.empty()) throw UsageError("family 'cliques' needs --sizes");
    spec.clique_sizes = a.sizes;
  } else if (f == "int") {
    spec.n = Require(a.n, "--n", f);
    spec.m = Require(a.m, "--m", f);
    spec.alpha = Require(a.alpha, "--alpha", f);
    if (a.r) {
      // x all ones, y with r ones spread over the grid.
      if (*a.r > spec.m) throw UsageError("--r exceeds m");
      spec.x.assign(spec.m, 1);
      spec.y.assign(spec.m, 0);
      for (std::size_t i = 0; i < *a.r; ++i) spec.y[i * spec.m / std::max<std::size_t>(*a.r, 1)] = 1;
    } else {
      spec.x = ParseBits(a.x, "x");
      spec.y = ParseBits(a.y, "y");
    }
  } else if (f == "petersen") {
    spec.size = 10;
  } else {
    spec.size = Require(a.size, "--size", f);
  }

  Graph g;
  try {
    g = arbocount::Generate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  arbocount::WriteEdgeListFile(g, a.output);
  json sidecar = arbocount::ToJson(spec);
  sidecar["schema_version"] = arbocount::kSchemaVersion;
  sidecar["vertices"] = g.num_vertices();
  sidecar["edges"] = g.num_edges();
  std::ofstream(a.output + ".json") << sidecar.dump(2) << "\n";
  std::cout << a.output << ": n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
  return kOk;
}

int RunExact(const std::string& path, int k, bool as_json) {
  if (k < 1) throw UsageError("--k must be >= 1");
  const Graph g = LoadGraph(path);
  const std::uint64_t count = arbocount::CountCliques(g, k);
  if (as_json) {
    json r = {{"schema_version", arbocount::kSchemaVersion},
              {"n", g.num_vertices()},
              {"m", g.num_edges()},
              {"k", k},
              {"degeneracy", arbocount::Degeneracy(g)},
              {"count", count}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cout << count << "\n";
  }
  return kOk;
}

struct EstimateArgs {
  std::string path;
  int k = 3;
  double eps = 0.25;
  double delta = 1.0 / 3;
  std::optional<double> alpha;
  double scale = 16;
  std::string profile = "practical";
  std::optional<std::uint64_t> seed;
  std::string m_strategy = "exact-sidechannel";
  std::optional<double> nk_guess;
  std::optional<std::uint64_t> budget;
  bool trace = false;
  bool exact = false;
};

int RunEstimateCmd(const EstimateArgs& a) {
  arbocount::RunConfig config;
  try {
    config.estimator.k = a.k;
    config.estimator.eps = a.eps;
    config.estimator.delta = a.delta;
    config.estimator.scale = a.scale;
    config.estimator.profile = arbocount::ParseProfile(a.profile);
    config.estimator.edge_strategy = arbocount::ParseEdgeStrategy(a.m_strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.k < 2) throw UsageError("--k must be >= 2");
  if (!(a.eps > 0 && a.eps < 1)) throw UsageError("--eps must lie in (0, 1)");
  if (!(a.delta > 0 && a.delta < 1)) throw UsageError("--delta must lie in (0, 1)");
  if (!(a.scale > 0)) throw UsageError("--scale must be positive");
  if (a.alpha && *a.alpha < 1) throw UsageError("--alpha must be >= 1");
  if (a.nk_guess && *a.nk_guess < 1) throw UsageError("--nk-guess must be >= 1");
  config.alpha = a.alpha;
  config.nk_guess = a.nk_guess;
  config.budget = a.budget;
  config.include_trace = a.trace;
  config.compute_exact = a.exact;

  const Graph g = LoadGraph(a.path);
  const auto out = arbocount::RunEstimate(g, config, a.seed ? *a.seed : DefaultSeed());
  std::cout << out.record.dump(2) << "\n";
  return out.budget_exceeded ? kBudget : kOk;
}

struct VerifyArgs {
  std::string path;
  int k = 3;
  std::optional<double> eps;
  double scale = 1;
  std::string profile = "analysis";
  std::optional<double> alpha;
  std::optional<double> nk_guess;
  int tmax = 5;
  bool corrupt = false;
};

int RunVerify(const VerifyArgs& a) {
  if (a.k < 2) throw UsageError("--k must be >= 2");
  if (a.tmax < 1) throw UsageError("--tmax must be >= 1");
  arbocount::ConstantProfile profile;
  try {
    profile = arbocount::ParseProfile(a.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Graph g = LoadGraph(a.path);
  const std::uint64_t n_k = arbocount::CountCliques(g, a.k);
  const double alpha = a.alpha ? *a.alpha : static_cast<double>(std::max<std::size_t>(1, arbocount::Degeneracy(g)));
  const double eps = arbocount::ClampEpsilon(a.eps ? *a.eps : 1.0, a.k);
  const double guess = a.nk_guess ? *a.nk_guess : static_cast<double>(std::max<std::uint64_t>(1, n_k));
  const auto th = arbocount::ComputeThresholds(a.k, alpha, guess, eps, a.scale, profile);

  json report = {{"schema_version", arbocount::kSchemaVersion},
                 {"n", g.num_vertices()},
                 {"m", g.num_edges()},
                 {"k", a.k},
                 {"n_k", n_k},
                 {"alpha", alpha},
                 {"eps", eps},
                 {"nk_guess", guess},
                 {"scale", a.scale},
                 {"profile", a.profile}};
  bool pass = true;
  auto record = [&](const std::string& name, const arbocount::VerifyReport& r) {
    report["checks"][name] = r.ToJson();
    pass = pass && r.pass;
  };

  record("arboricity_bounds", arbocount::VerifyArboricityBounds(g, a.tmax));

  // Σ over t-cliques of c_k equals C(k, t) n_k.
  arbocount::VerifyReport sums;
  for (int t = 1; t <= a.k; ++t) {
    std::uint64_t total = 0;
    arbocount::ForEachClique(g, t, [&](std::span<const arbocount::Vertex> c) {
      total += arbocount::ComputeCliqueStats(g, c, a.k).c_k;
    });
    const std::uint64_t expected = arbocount::Binomial(a.k, t) * n_k;
    sums.measured["levels"].push_back({{"t", t}, {"sum_c_k", total}, {"expected", expected}});
    if (total != expected && sums.pass) {
      sums.pass = false;
      sums.counterexample = "sum of c_k over " + std::to_string(t) + "-cliques is " + std::to_string(total) +
                            ", expected " + std::to_string(expected);
    }
  }
  record("clique_sums", sums);

  const auto active = arbocount::ExactActiveSet(g, th);
  auto wt = arbocount::ExactWeight(g, active, a.k);
  if (a.corrupt) {
    // Test mode: break the telescoping sum at one vertex.
    if (wt.weights.empty()) {
      wt.weights[{0}] = 1;
    } else {
      ++wt.weights.begin()->second;
    }
    report["corrupted"] = true;
  }
  record("legal", arbocount::VerifyLegal(wt, g, a.k));
  record("good", arbocount::VerifyGood(wt, th, eps, n_k));
  report["active_set_size"] = active.size();
  report["pass"] = pass;
  std::cout << report.dump(2) << "\n";
  return pass ? kOk : kInvariant;
}

int RunSweepCmd(const std::string& manifest_path, const std::string& output, std::optional<std::size_t> workers) {
  std::ifstream in(manifest_path);
  if (!in) throw UsageError("cannot open manifest '" + manifest_path + "'");
  arbocount::SweepManifest manifest;
  try {
    manifest = arbocount::ParseManifest(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(std::string("manifest is not valid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!output.empty()) manifest.output = output;
  if (workers) manifest.workers = std::max<std::size_t>(1, *workers);

  std::ostringstream csv;
  try {
    arbocount::RunSweep(manifest, csv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (manifest.output.empty() || manifest.output == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(manifest.output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + manifest.output + "'");
    out << csv.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-clique counting in bounded-arboricity graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate->add_option("--family", gen.family,
                       "incremental, planted, cliques, int, complete, wheel, cycle, star, path, petersen")
      ->required();
  generate->add_option("-o,--output", gen.output, "Edge-list path; a .json sidecar is written next to it")
      ->required();
  generate->add_option("--size", gen.size, "Size for named graphs");
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--m", gen.m, "Scaffold edge count");
  generate->add_option("--alpha", gen.alpha, "Arboricity bound");
  generate->add_option("--nk", gen.nk, "Target k-clique count (planted)");
  generate->add_option("--k", gen.k, "Clique size");
  generate->add_flag("--planted", "Plant a clique (default)");
  generate->add_flag("--unplanted", gen.unplanted, "Leave the extra vertices independent");
  generate->add_option("--sizes", gen.sizes, "Clique sizes (cliques family)")->delimiter(',');
  generate->add_option("--x", gen.x, "Bit string x (int family)");
  generate->add_option("--y", gen.y, "Bit string y (int family)");
  generate->add_option("--r", gen.r, "Number of intersecting positions (int family, instead of --x/--y)");
  generate->add_option("--seed", gen.seed, "Seed (default ARBOCOUNT_SEED or 1)");

  std::string exact_path;
  int exact_k = 3;
  bool exact_json = false;
  auto* exact = app.add_subcommand("exact", "Count k-cliques exactly");
  exact->add_option("graph", exact_path, "Edge-list file")->required();
  exact->add_option("--k", exact_k, "Clique size")->required();
  exact->add_flag("--json", exact_json, "Print a JSON record instead of the bare count");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Estimate the k-clique count with queries only");
  estimate->add_option("graph", est.path, "Edge-list file")->required();
  estimate->add_option("--k", est.k, "Clique size")->required();
  estimate->add_option("--eps", est.eps, "Accuracy");
  estimate->add_option("--delta", est.delta, "Failure probability");
  estimate->add_option("--alpha", est.alpha, "Arboricity bound (default: degeneracy of the input)");
  estimate->add_option("--scale", est.scale, "Constant scale factor");
  estimate->add_option("--profile", est.profile, "Constant profile: practical or analysis");
  estimate->add_option("--seed", est.seed, "Seed (default ARBOCOUNT_SEED or 1)");
  estimate->add_option("--m-strategy", est.m_strategy, "exact-sidechannel or degree-sampling");
  estimate->add_option("--nk-guess", est.nk_guess, "Run once at this guess instead of searching");
  estimate->add_option("--queries-budget", est.budget, "Abort after this many raw queries");
  estimate->add_flag("--trace", est.trace, "Include per-level sampling traces");
  estimate->add_flag("--exact", est.exact, "Also report the exact count");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check exact invariants and the reference weights");
  verify->add_option("graph", ver.path, "Edge-list file")->required();
  verify->add_option("--k", ver.k, "Clique size")->required();
  verify->add_option("--eps", ver.eps, "Accuracy (clamped to 1/(2k^2))");
  verify->add_option("--scale", ver.scale, "Constant scale factor");
  verify->add_option("--profile", ver.profile, "Constant profile: analysis or practical");
  verify->add_option("--alpha", ver.alpha, "Arboricity bound (default: degeneracy)");
  verify->add_option("--nk-guess", ver.nk_guess, "Clique-count guess (default: exact count)");
  verify->add_option("--tmax", ver.tmax, "Largest clique size for the arboricity bounds");
  verify->add_flag("--corrupt", ver.corrupt, "Test mode: corrupt the weight table before checking");

  std::string manifest_path, sweep_output;
  std::optional<std::size_t> workers;
  auto* sweep = app.add_subcommand("sweep", "Run a manifest of jobs and write CSV");
  sweep->add_option("manifest", manifest_path, "Manifest JSON")->required();
  sweep->add_option("-o,--output", sweep_output, "CSV path (overrides the manifest)");
  sweep->add_option("--workers", workers, "Parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*exact) return RunExact(exact_path, exact_k, exact_json);
    if (*estimate) return RunEstimateCmd(est);
    if (*verify) return RunVerify(ver);
    if (*sweep) return RunSweepCmd(manifest_path, sweep_output, workers);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const arbocount::QueryBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
