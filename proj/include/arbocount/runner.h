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

// Result records, estimate jobs and sweeps shared by the command line tool
// and the Python module.

#ifndef ARBOCOUNT_RUNNER_H_
#define ARBOCOUNT_RUNNER_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "arbocount/estimator.h"
#include "arbocount/generators.h"
#include "arbocount/graph.h"
#include "json.hpp"

namespace arbocount {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kCsvVersion = 1;

struct RunConfig {
  EstimatorConfig estimator;
  std::optional<double> alpha;     // degeneracy of the input when absent
  std::optional<double> nk_guess;  // single Main call instead of the search
  std::optional<std::uint64_t> budget;
  bool include_trace = false;
  bool compute_exact = false;
};

struct RunOutput {
  nlohmann::json record;
  bool budget_exceeded = false;
  double estimate = 0;
  std::optional<std::uint64_t> exact;
  QueryStats queries;
};

// Runs the search (or one Main call) on a fresh session seeded with `seed`.
// A query budget overrun is caught and reported in the record.
RunOutput RunEstimate(const Graph& g, const RunConfig& config, std::uint64_t seed);

nlohmann::json QueryStatsJson(const QueryStats& q);

struct SweepEntry {
  GenSpec graph;
  RunConfig run;
};

struct SweepManifest {
  std::vector<SweepEntry> entries;
  std::size_t repetitions = 1;
  std::uint64_t seed_base = 0;
  std::string output;       // CSV path; empty means stdout
  bool record_time = false;  // wall_ms column left empty when false
  std::size_t workers = 1;
};

// Throws std::invalid_argument on malformed manifests.
SweepManifest ParseManifest(const nlohmann::json& j);
RunConfig RunConfigFromJson(const nlohmann::json& j);

// One row per (entry, repetition) in manifest order; job j uses seed
// seed_base + j.
void RunSweep(const SweepManifest& manifest, std::ostream& csv);

std::string CsvHeader();

}  // namespace arbocount

#endif  // ARBOCOUNT_RUNNER_H_
