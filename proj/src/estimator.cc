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

#include "arbocount/estimator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arbocount/sampler.h"

namespace arbocount {
namespace {

std::uint64_t CeilCount(double x) {
  if (!(x >= 0)) return 0;
  // Saturate instead of overflowing; such sizes trip an abort or the budget.
  if (x >= 1.8e19) return UINT64_MAX;
  return static_cast<std::uint64_t>(std::ceil(x));
}

// Lexicographic walk over orderings of `sorted`, depth first.
bool FirstFullyActive(const std::vector<Vertex>& sorted, std::vector<bool>& used, std::vector<Vertex>& prefix,
                      ActivenessMemo& memo) {
  if (prefix.size() == sorted.size()) return true;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (used[i]) continue;
    prefix.push_back(sorted[i]);
    used[i] = true;
    // The full tuple is always active.
    if ((prefix.size() == sorted.size() || memo(prefix)) && FirstFullyActive(sorted, used, prefix, memo)) {
      return true;
    }
    used[i] = false;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

double SampleMultiplier(double beta, double gamma, double scale, ConstantProfile profile) {
  const double base = 3.0 * std::log(2.0 / beta);
  return profile == ConstantProfile::kAnalysis ? scale * base / (gamma * gamma) : base;
}

ApproxParams MakeApproxParams(const Thresholds& th, std::size_t n, double delta, double m_guess,
                              double abort_slack) {
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(m_guess >= 1)) throw std::invalid_argument("edge estimate must be >= 1");
  ApproxParams p;
  p.n = n;
  p.k = th.k;
  p.alpha = th.alpha;
  p.eps = th.eps;
  p.delta = delta;
  p.nk_guess = th.nk_guess;
  p.m_guess = m_guess;
  p.tau = th.tau_hi;
  p.gamma_A = th.eps / (2.0 * th.k);
  p.beta_A = delta / (3.0 * th.k);
  p.scale = th.scale;
  p.profile = th.profile;
  p.abort_slack = abort_slack;
  p.multiplier = SampleMultiplier(p.beta_A, p.gamma_A, p.scale, p.profile);
  return p;
}

const char* AbortName(AbortKind kind) {
  switch (kind) {
    case AbortKind::kNone:
      return "none";
    case AbortKind::kSampleSize:
      return "sample-size";
    case AbortKind::kFinalSize:
      return "final-size";
  }
  return "?";
}

bool EstimateOutcome::complete() const {
  return value.has_value() && abort == AbortKind::kNone && !empty_sample;
}

nlohmann::json ToJson(const EstimateOutcome& outcome) {
  nlohmann::json out;
  out["value"] = outcome.value ? nlohmann::json(*outcome.value) : nlohmann::json(nullptr);
  out["abort"] = AbortName(outcome.abort);
  out["empty_sample"] = outcome.empty_sample;
  out["assigned"] = outcome.assigned;
  out["normalization"] = outcome.normalization;
  auto& levels = out["levels"] = nlohmann::json::array();
  for (const auto& l : outcome.trace) {
    levels.push_back({{"t", l.t},
                      {"s", l.s},
                      {"s_raw", l.s_raw},
                      {"s_shadow", l.s_shadow},
                      {"d", l.d},
                      {"size", l.size},
                      {"w", l.w},
                      {"w_shadow", l.w_shadow}});
  }
  return out;
}

bool ActivenessMemo::operator()(std::span<const Vertex> prefix) {
  OrderedClique key(prefix.begin(), prefix.end());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const bool answer = oracle_(prefix);
  memo_.emplace(std::move(key), answer);
  return answer;
}

int IsAssigned(std::span<const Vertex> clique, ActivenessMemo& memo) {
  std::vector<Vertex> sorted(clique.begin(), clique.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> used(sorted.size(), false);
  std::vector<Vertex> first;
  first.reserve(sorted.size());
  if (!FirstFullyActive(sorted, used, first, memo)) return 0;
  return std::equal(first.begin(), first.end(), clique.begin(), clique.end()) ? 1 : 0;
}

EstimateOutcome ApproxCliques(QuerySession& session, const ApproxParams& p, const ActivenessOracle& oracle,
                              Rng& rng) {
  EstimateOutcome out;
  const int k = p.k;
  const double n = static_cast<double>(p.n);
  const double M = p.multiplier;
  const double kfact2 = std::pow(static_cast<double>(Factorial(k)), 2);
  auto finish = [&]() -> EstimateOutcome& {
    out.queries = session.stats();
    return out;
  };
  if (p.n == 0) {
    out.value = 0;
    out.empty_sample = true;
    return finish();
  }

  out.trace.reserve(static_cast<std::size_t>(k) + 1);
  LevelTrace level0;
  level0.t = 0;
  level0.d = p.n;
  level0.size = p.n;
  level0.w = level0.w_shadow = (1.0 - p.eps / 2.0) * p.nk_guess;
  out.trace.push_back(level0);

  LevelTrace level1;
  level1.t = 1;
  level1.s_raw = level1.s_shadow = n * p.tau[1] / level0.w * M;
  level1.s = CeilCount(level1.s_raw);

  CliqueSample current(1);
  for (std::uint64_t i = 0; i < level1.s; ++i) {
    const Vertex v = static_cast<Vertex>(rng.UniformInt(0, p.n - 1));
    current.Add(session, std::span<const Vertex>(&v, 1));
  }
  out.trace.push_back(level1);

  for (int t = 1; t < k; ++t) {
    LevelTrace& cur = out.trace[static_cast<std::size_t>(t)];
    const LevelTrace& prev = out.trace[static_cast<std::size_t>(t) - 1];
    cur.d = current.total_degree();
    cur.size = current.size();
    if (cur.d == 0) {
      out.value = 0;
      out.empty_sample = true;
      return finish();
    }
    cur.w = (1.0 - p.gamma_A) * prev.w / static_cast<double>(prev.d) * static_cast<double>(cur.s);
    cur.w_shadow = (1.0 - p.gamma_A) * prev.w_shadow / static_cast<double>(prev.d) * cur.s_shadow;

    LevelTrace next;
    next.t = t + 1;
    const double tau_next = p.tau[static_cast<std::size_t>(t) + 1];
    next.s_raw = static_cast<double>(cur.d) * tau_next / cur.w * M;
    next.s_shadow = static_cast<double>(cur.d) * tau_next / cur.w_shadow * M;
    next.s = CeilCount(next.s_raw);
    out.trace.push_back(next);

    const double cap = 4.0 * p.m_guess * std::pow(p.alpha, t - 1) * tau_next / p.nk_guess * kfact2 * M /
                       std::pow(p.beta_A, t);
    if (static_cast<double>(next.s) > cap) {
      out.abort = AbortKind::kSampleSize;
      return finish();
    }
    auto sampled = SampleSet(session, current, next.s, rng);
    current = std::move(*sampled);  // d(R_t) > 0 was checked above
  }

  LevelTrace& last = out.trace.back();
  last.size = current.size();
  const double final_cap = p.abort_slack * kfact2 / std::pow(p.beta_A, k) * p.tau[static_cast<std::size_t>(k)] * 4.0 * M;
  if (static_cast<double>(current.size()) > final_cap) {
    out.abort = AbortKind::kFinalSize;
    return finish();
  }

  long double norm = static_cast<long double>(n) / static_cast<long double>(out.trace[1].s);
  for (int t = 1; t < k; ++t) {
    norm *= static_cast<long double>(out.trace[static_cast<std::size_t>(t)].d) /
            static_cast<long double>(out.trace[static_cast<std::size_t>(t) + 1].s);
  }
  out.normalization = static_cast<double>(norm);

  ActivenessMemo memo(oracle);
  for (std::size_t i = 0; i < current.size(); ++i) out.assigned += IsAssigned(current.item(i), memo);
  out.value = static_cast<double>(norm * static_cast<long double>(out.assigned));
  return finish();
}

bool IsActive(QuerySession& session, std::span<const Vertex> prefix, const Thresholds& th, double m_guess,
              double delta, Rng& rng, ActiveCheckStats* stats) {
  const int k = th.k;
  const int i = static_cast<int>(prefix.size());
  if (i < 1 || i >= k) throw std::invalid_argument("activeness is defined for prefixes of size 1..k-1");
  const double n = static_cast<double>(session.num_vertices());
  const double beta = th.beta_I;
  const double gamma = th.gamma_I;
  const double M = SampleMultiplier(beta, gamma, th.scale, th.profile);
  const double cost_mult = th.profile == ConstantProfile::kAnalysis
                               ? th.scale * 12.0 * std::log(1.0 / beta) / (std::pow(beta, k) * std::pow(gamma, 3))
                               : 12.0 * std::log(1.0 / beta) / (std::pow(beta, k) * gamma);

  const std::uint64_t q = CeilCount(12.0 * (k * std::log(std::max(n, 1.0)) - std::log(delta)));
  const std::uint64_t needed = (q + 1) / 2;  // votes >= q/2
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  std::uint64_t cost_exits = 0;

  while (ones < needed && zeros <= q - needed) {
    CliqueSample current(i);
    current.Add(session, prefix);
    double w = (1.0 - th.eps / 2.0) * th.hi(i);
    std::uint64_t prev_d = 0;
    std::uint64_t s = 0;
    long double estimate = 1;
    bool vote = true;
    for (int t = i; t < k; ++t) {
      const std::uint64_t d = current.total_degree();
      if (d == 0) {
        estimate = 0;  // nothing extends: |R_k| = 0
        break;
      }
      if (t > i) w = (1.0 - gamma) * w / static_cast<double>(prev_d) * static_cast<double>(s);
      const double tau_next = th.hi(t + 1);
      const std::uint64_t s_next = CeilCount(static_cast<double>(d) * tau_next / w * M);
      const double cap = 2.0 * m_guess * std::pow(th.alpha, t - 1) * tau_next / th.nk_guess * cost_mult;
      if (static_cast<double>(s_next) > cap) {
        vote = false;
        ++cost_exits;
        break;
      }
      current = std::move(*SampleSet(session, current, s_next, rng));
      estimate *= static_cast<long double>(d) / static_cast<long double>(s_next);
      prev_d = d;
      s = s_next;
      if (t == k - 1) estimate *= static_cast<long double>(current.size());
    }
    if (vote) vote = estimate <= static_cast<long double>(th.hi(i)) / 4;
    (vote ? ones : zeros) += 1;
  }

  if (stats != nullptr) {
    stats->rounds_planned += q;
    stats->rounds_run += ones + zeros;
    stats->votes += ones;
    stats->cost_exits += cost_exits;
  }
  return ones >= needed;
}

const char* EdgeStrategyName(EdgeStrategy s) {
  return s == EdgeStrategy::kExactSideChannel ? "exact-sidechannel" : "degree-sampling";
}

EdgeStrategy ParseEdgeStrategy(const std::string& name) {
  if (name == "exact-sidechannel") return EdgeStrategy::kExactSideChannel;
  if (name == "degree-sampling") return EdgeStrategy::kDegreeSampling;
  throw std::invalid_argument("unknown edge strategy '" + name + "'");
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

EdgeEstimate EstimateEdges(QuerySession& session, double delta, EdgeStrategy strategy, Rng& rng) {
  EdgeEstimate out;
  out.strategy = strategy;
  if (strategy == EdgeStrategy::kExactSideChannel) {
    out.value = static_cast<double>(session.SideChannelEdgeCount());
    out.side_channel = true;
    return out;
  }
  const std::size_t n = session.num_vertices();
  if (n == 0) return out;
  const std::uint64_t batches = std::max<std::uint64_t>(1, CeilCount(12.0 * std::log(2.0 / delta)));
  const std::uint64_t per_batch = CeilCount(8.0 * std::sqrt(static_cast<double>(n)));
  std::vector<double> estimates;
  estimates.reserve(batches);
  for (std::uint64_t b = 0; b < batches; ++b) {
    double sum = 0;
    for (std::uint64_t j = 0; j < per_batch; ++j) {
      sum += static_cast<double>(session.Degree(static_cast<Vertex>(rng.UniformInt(0, n - 1))));
    }
    estimates.push_back(static_cast<double>(n) / 2.0 * sum / static_cast<double>(per_batch));
  }
  out.value = Median(std::move(estimates));
  return out;
}

MainResult MainEstimate(QuerySession& session, double nk_guess, const EstimatorConfig& config, Rng& rng,
                        std::optional<EdgeEstimate> m_known) {
  MainResult result;
  result.nk_guess = nk_guess;
  const double n = static_cast<double>(session.num_vertices());
  const double delta = config.delta;
  if (m_known) {
    result.m = *m_known;
  } else {
    // The median of ⌈12 ln(2n²/δ)⌉ batch estimates.
    Rng edge_rng = rng.Split();
    result.m = EstimateEdges(session, delta / std::max(1.0, n * n), config.edge_strategy, edge_rng);
  }
  if (n == 0 || result.m.value < 1) return result;  // no edges, no cliques

  const Thresholds th = ComputeThresholds(config.k, config.alpha, nk_guess, config.eps, config.scale, config.profile);
  const ApproxParams params = MakeApproxParams(th, session.num_vertices(), 1.0 / 6.0, result.m.value,
                                               config.abort_slack);
  const std::uint64_t q = CeilCount(18.0 * std::log(2.0 / delta));
  for (std::uint64_t run = 0; run < q; ++run) {
    Rng run_rng = rng.Split();
    Rng oracle_rng = run_rng.Split();
    ActivenessOracle oracle = [&](std::span<const Vertex> prefix) {
      Rng call_rng = oracle_rng.Split();
      return IsActive(session, prefix, th, result.m.value, delta / 4.0, call_rng);
    };
    EstimateOutcome outcome = ApproxCliques(session, params, oracle, run_rng);
    if (outcome.value) {
      result.values.push_back(*outcome.value);
    } else {
      result.values.push_back(0);
      ++result.aborted;
    }
    if (config.keep_traces) result.outcomes.push_back(std::move(outcome));
  }
  result.value = Median(result.values);
  return result;
}

SearchResult SearchEstimate(QuerySession& session, const EstimatorConfig& config, Rng& rng) {
  SearchResult result;
  const double n = static_cast<double>(session.num_vertices());
  const double rungs = n > 1 ? std::ceil(config.k * std::log2(n)) : 0.0;
  EstimatorConfig round = config;
  round.delta = config.delta / (2.0 * rungs + 2.0);

  Rng edge_rng = rng.Split();
  result.m = EstimateEdges(session, round.delta / std::max(1.0, n * n), config.edge_strategy, edge_rng);

  double guess = std::pow(n, config.k);
  double last = 0;
  while (guess >= 1) {
    Rng guess_rng = rng.Split();
    MainResult main = MainEstimate(session, guess, round, guess_rng, result.m);
    last = main.value;
    result.steps.push_back({guess, main.value, main.aborted, main.values.size()});
    result.runs += main.values.size();
    result.aborted += main.aborted;
    result.nk_guess_final = guess;
    if (config.keep_traces) result.outcomes = std::move(main.outcomes);
    if (main.value >= guess) {
      result.accepted = true;
      break;
    }
    guess /= 2;
  }
  result.estimate = last;
  return result;
}

}  // namespace arbocount
