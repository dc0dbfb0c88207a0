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

// Sublinear k-clique estimation in the degree/neighbor/pair query model.
// Everything here reads the graph only through a QuerySession, except the
// flagged exact-sidechannel edge strategy.

#ifndef ARBOCOUNT_ESTIMATOR_H_
#define ARBOCOUNT_ESTIMATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbocount/exact.h"
#include "arbocount/graph.h"
#include "arbocount/reference.h"
#include "arbocount/rng.h"
#include "json.hpp"

namespace arbocount {

// Sample multiplier for a given β and γ: 3ln(2/β)/γ² times scale under the
// analysis profile, 3ln(2/β) under the practical one.
double SampleMultiplier(double beta, double gamma, double scale, ConstantProfile profile);

struct ApproxParams {
  std::size_t n = 0;
  int k = 0;
  double alpha = 1;
  double eps = 0;  // clamped
  double delta = 1.0 / 6;
  double nk_guess = 1;
  double m_guess = 1;
  std::vector<double> tau;  // τ̄, indexed 1..k
  double gamma_A = 0;
  double beta_A = 0;
  double scale = 1;
  ConstantProfile profile = ConstantProfile::kAnalysis;
  double abort_slack = 4;
  double multiplier = 0;  // SampleMultiplier(beta_A, gamma_A, ...)
};

// Throws std::invalid_argument if delta is not in (0, 1) or m_guess < 1.
ApproxParams MakeApproxParams(const Thresholds& th, std::size_t n, double delta, double m_guess,
                              double abort_slack = 4.0);

enum class AbortKind { kNone, kSampleSize, kFinalSize };
const char* AbortName(AbortKind kind);

struct LevelTrace {
  int t = 0;
  std::uint64_t s = 0;      // s_t (0 at t = 0)
  double s_raw = 0;         // value before the ceiling
  double s_shadow = 0;      // ceiling-free sequence
  std::uint64_t d = 0;      // d(R_t), t < k
  std::uint64_t size = 0;   // |R_t|
  double w = 0;             // w̃_t, t < k
  double w_shadow = 0;
};

struct EstimateOutcome {
  std::optional<double> value;  // absent iff aborted
  AbortKind abort = AbortKind::kNone;
  bool empty_sample = false;
  std::vector<LevelTrace> trace;  // levels 0..k, truncated on early exit
  std::uint64_t assigned = 0;
  double normalization = 0;  // n Π d(R_t) / Π s_t when complete
  QueryStats queries;

  bool complete() const;
};

nlohmann::json ToJson(const EstimateOutcome& outcome);

// Activeness of an ordered prefix of size 1..k-1.
using ActivenessOracle = std::function<bool(std::span<const Vertex>)>;

// Keeps the first answer for every prefix.
class ActivenessMemo {
 public:
  explicit ActivenessMemo(ActivenessOracle oracle) : oracle_(std::move(oracle)) {}

  bool operator()(std::span<const Vertex> prefix);

  std::size_t oracle_calls() const { return memo_.size(); }

 private:
  ActivenessOracle oracle_;
  std::map<OrderedClique, bool> memo_;
};

// 1 iff `clique` (an ordered k-clique) is the lexicographically first
// ordering of its vertex set whose prefixes are all active. Orderings that
// share an inactive prefix are skipped together.
int IsAssigned(std::span<const Vertex> clique, ActivenessMemo& memo);

EstimateOutcome ApproxCliques(QuerySession& session, const ApproxParams& params, const ActivenessOracle& oracle,
                              Rng& rng);

struct ActiveCheckStats {
  std::uint64_t rounds_planned = 0;
  std::uint64_t rounds_run = 0;
  std::uint64_t votes = 0;
  std::uint64_t cost_exits = 0;
};

// Majority vote over ⌈12 ln(n^k/δ)⌉ rounds; stops as soon as the majority
// is decided.
bool IsActive(QuerySession& session, std::span<const Vertex> prefix, const Thresholds& th, double m_guess,
              double delta, Rng& rng, ActiveCheckStats* stats = nullptr);

enum class EdgeStrategy { kExactSideChannel, kDegreeSampling };
const char* EdgeStrategyName(EdgeStrategy s);
EdgeStrategy ParseEdgeStrategy(const std::string& name);

struct EdgeEstimate {
  double value = 0;
  EdgeStrategy strategy = EdgeStrategy::kExactSideChannel;
  bool side_channel = false;
};

// Median over ⌈12 ln(2/δ)⌉ batches of ⌈8√n⌉ uniform degree queries, each
// batch giving (n/2)·mean degree; or the true m through the side channel.
EdgeEstimate EstimateEdges(QuerySession& session, double delta, EdgeStrategy strategy, Rng& rng);

struct EstimatorConfig {
  int k = 3;
  double alpha = 1;
  double eps = 0.25;  // requested; clamped internally
  double delta = 1.0 / 3;
  double scale = 16;
  ConstantProfile profile = ConstantProfile::kPractical;
  EdgeStrategy edge_strategy = EdgeStrategy::kExactSideChannel;
  double abort_slack = 4;
  bool keep_traces = false;
};

struct MainResult {
  double value = 0;
  double nk_guess = 0;
  EdgeEstimate m;
  std::vector<double> values;  // one per Approx run, aborted ones as 0
  std::size_t aborted = 0;
  std::vector<EstimateOutcome> outcomes;  // kept only with keep_traces
};

// Median of ⌈18 ln(2/δ)⌉ Approx runs at guess `nk_guess`, with Is-Active
// at δ/4 memoized per run. `m_known` skips the edge estimation step.
MainResult MainEstimate(QuerySession& session, double nk_guess, const EstimatorConfig& config, Rng& rng,
                        std::optional<EdgeEstimate> m_known = std::nullopt);

struct SearchStep {
  double nk_guess = 0;
  double value = 0;
  std::size_t aborted = 0;
  std::size_t runs = 0;
};

struct SearchResult {
  double estimate = 0;
  double nk_guess_final = 0;
  bool accepted = false;  // false when the guess fell below 1
  EdgeEstimate m;
  std::vector<SearchStep> steps;
  std::size_t runs = 0;
  std::size_t aborted = 0;
  std::vector<EstimateOutcome> outcomes;  // final guess only, with keep_traces
};

// Halving search from n^k, each guess run at δ/(2⌈k log₂ n⌉ + 2). The edge
// estimate is taken once and reused across guesses.
SearchResult SearchEstimate(QuerySession& session, const EstimatorConfig& config, Rng& rng);

double Median(std::vector<double> values);

}  // namespace arbocount

#endif  // ARBOCOUNT_ESTIMATOR_H_
