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

#include "arbocount/reference.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace arbocount {
namespace {

using Wide = unsigned __int128;

std::string TupleString(std::span<const Vertex> tuple) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "," : "") << tuple[i];
  out << ')';
  return out.str();
}

Wide WidePow(Wide base, int e) {
  Wide r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double Ratio(Wide lhs, Wide rhs) {
  return rhs == 0 ? (lhs == 0 ? 0.0 : INFINITY) : static_cast<double>(lhs) / static_cast<double>(rhs);
}

void Fail(VerifyReport& report, std::string message) {
  if (report.pass) {
    report.pass = false;
    report.counterexample = std::move(message);
  }
}

}  // namespace

const char* ProfileName(ConstantProfile profile) {
  return profile == ConstantProfile::kAnalysis ? "analysis" : "practical";
}

ConstantProfile ParseProfile(const std::string& name) {
  if (name == "analysis") return ConstantProfile::kAnalysis;
  if (name == "practical") return ConstantProfile::kPractical;
  throw std::invalid_argument("unknown constant profile '" + name + "' (expected analysis or practical)");
}

double ClampEpsilon(double eps, int k) { return std::min(eps, 1.0 / (2.0 * k * k)); }

Thresholds ComputeThresholds(int k, double alpha, double nk_guess, double eps, double scale,
                             ConstantProfile profile) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (!(alpha >= 1)) throw std::invalid_argument("alpha must be >= 1");
  if (!(nk_guess >= 1)) throw std::invalid_argument("nk_guess must be >= 1");
  if (!(eps > 0)) throw std::invalid_argument("eps must be > 0");
  if (!(scale > 0)) throw std::invalid_argument("scale must be > 0");

  Thresholds th;
  th.k = k;
  th.alpha = alpha;
  th.nk_guess = nk_guess;
  th.eps = ClampEpsilon(eps, k);
  th.scale = scale;
  th.profile = profile;
  const double kfact = static_cast<double>(Factorial(k));
  th.gamma_I = th.eps / (8.0 * k * kfact);
  th.beta_I = 1.0 / (6.0 * k);

  const double beta_k = std::pow(th.beta_I, k);
  double middle = scale;
  double first = scale;
  if (profile == ConstantProfile::kAnalysis) {
    const double k4k = std::pow(static_cast<double>(k), 4.0 * k);
    middle = scale * k4k / (beta_k * th.gamma_I * th.gamma_I);
    first = scale * k4k / (th.gamma_I * th.gamma_I);
  }
  th.tau_hi.assign(static_cast<std::size_t>(k) + 1, 0.0);
  th.tau_lo.assign(static_cast<std::size_t>(k) + 1, 0.0);
  th.tau_hi[1] = first * std::min(std::pow(alpha, k - 1), std::pow(nk_guess, (k - 1.0) / k));
  for (int t = 2; t < k; ++t) th.tau_hi[static_cast<std::size_t>(t)] = middle * std::pow(alpha, k - t);
  th.tau_hi[static_cast<std::size_t>(k)] = 1.0;

  const double shrink = (profile == ConstantProfile::kAnalysis ? beta_k : 1.0) / (4.0 * kfact * kfact);
  for (int t = 1; t < k; ++t) th.tau_lo[static_cast<std::size_t>(t)] = shrink * th.hi(t);
  th.tau_lo[static_cast<std::size_t>(k)] = 1.0;
  return th;
}

const char* SociabilityName(Sociability s) {
  switch (s) {
    case Sociability::kSociable:
      return "sociable";
    case Sociability::kNonSociable:
      return "non-sociable";
    case Sociability::kIntermediate:
      return "intermediate";
  }
  return "?";
}

Sociability ClassifySociable(std::uint64_t c_k, int t, const Thresholds& th) {
  const double c = static_cast<double>(c_k);
  if (c > th.hi(t)) return Sociability::kSociable;
  if (c <= th.lo(t)) return Sociability::kNonSociable;
  return Sociability::kIntermediate;
}

Sociability ClassifySociable(const Graph& g, std::span<const Vertex> clique, const Thresholds& th) {
  const auto stats = ComputeCliqueStats(g, clique, th.k);
  return ClassifySociable(stats.c_k, stats.t, th);
}

bool IsCostly(const CliqueStats& stats, std::uint64_t m, const Thresholds& th) {
  if (stats.c_k == 0) return false;
  for (int j = stats.t; j < stats.k; ++j) {
    const double lhs = static_cast<double>(stats.d_c(j)) / static_cast<double>(stats.c_k);
    const double rhs = 2.0 * static_cast<double>(m) * std::pow(th.alpha, j - 1) / (th.gamma_I * th.nk_guess);
    if (lhs > rhs) return true;
  }
  return false;
}

bool IsCostly(const Graph& g, std::span<const Vertex> clique, const Thresholds& th) {
  return IsCostly(ComputeCliqueStats(g, clique, th.k), g.num_edges(), th);
}

ActiveSet ExactActiveSet(const Graph& g, const Thresholds& th) {
  ActiveSet active(th.k);
  std::vector<Vertex> perm;
  auto insert_orderings = [&](std::span<const Vertex> sorted) {
    perm.assign(sorted.begin(), sorted.end());
    do {
      active.Insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  for (int t = 1; t < th.k; ++t) {
    ForEachClique(g, t, [&](std::span<const Vertex> clique) {
      const auto stats = ComputeCliqueStats(g, clique, th.k);
      if (ClassifySociable(stats.c_k, t, th) == Sociability::kSociable) return;
      if (IsCostly(stats, g.num_edges(), th)) return;
      insert_orderings(clique);
    });
  }
  ForEachClique(g, th.k, insert_orderings);
  return active;
}

std::uint64_t WeightTable::Weight(std::span<const Vertex> tuple) const {
  auto it = weights.find(OrderedClique(tuple.begin(), tuple.end()));
  return it == weights.end() ? 0 : it->second;
}

WeightTable ExactWeight(const Graph& g, const ActiveSet& active, int k) {
  WeightTable wt;
  wt.k = k;
  std::vector<Vertex> perm;
  ForEachClique(g, k, [&](std::span<const Vertex> clique) {
    perm.assign(clique.begin(), clique.end());
    do {
      bool fully_active = true;
      for (int j = 1; j <= k && fully_active; ++j) {
        fully_active = active.Contains(std::span<const Vertex>(perm.data(), static_cast<std::size_t>(j)));
      }
      if (fully_active) {
        for (int j = 1; j <= k; ++j) ++wt.weights[OrderedClique(perm.begin(), perm.begin() + j)];
        ++wt.total;
        return;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return wt;
}

nlohmann::json VerifyReport::ToJson() const {
  nlohmann::json out;
  out["pass"] = pass;
  out["counterexample"] = counterexample.empty() ? nlohmann::json(nullptr) : nlohmann::json(counterexample);
  out["measured"] = measured;
  return out;
}

VerifyReport VerifyLegal(const WeightTable& wt, const Graph& g, int k) {
  VerifyReport report;
  std::map<Clique, std::uint64_t> assigned;  // unordered k-clique -> weight-1 orderings
  std::map<OrderedClique, std::uint64_t> child_sum;
  std::uint64_t level_one = 0;

  for (const auto& [tuple, w] : wt.weights) {
    const int t = static_cast<int>(tuple.size());
    if (t < 1 || t > k) {
      Fail(report, "entry " + TupleString(tuple) + " has size outside [1, k]");
      continue;
    }
    if (t == 1) level_one += w;
    if (t > 1) child_sum[OrderedClique(tuple.begin(), tuple.end() - 1)] += w;
    if (t != k) continue;
    if (w > 1) Fail(report, "k-level weight " + std::to_string(w) + " at " + TupleString(tuple));
    if (!IsClique(g, tuple)) Fail(report, TupleString(tuple) + " is not an ordered k-clique");
    if (w == 1) {
      Clique key = tuple;
      std::sort(key.begin(), key.end());
      if (++assigned[key] > 1) Fail(report, "second weight-1 ordering " + TupleString(tuple) + " of one k-clique");
    }
  }

  // Telescoping: every prefix that has weighted children, and every entry
  // below level k, must match the sum of its one-longer extensions.
  std::set<OrderedClique> parents;
  for (const auto& [tuple, w] : wt.weights) {
    if (!tuple.empty() && static_cast<int>(tuple.size()) < k) parents.insert(tuple);
  }
  for (const auto& [prefix, s] : child_sum) parents.insert(prefix);
  for (const auto& prefix : parents) {
    const std::uint64_t own = wt.Weight(prefix);
    auto it = child_sum.find(prefix);
    const std::uint64_t below = it == child_sum.end() ? 0 : it->second;
    if (own != below) {
      Fail(report, "wt" + TupleString(prefix) + " = " + std::to_string(own) + " but its extensions sum to " +
                       std::to_string(below));
    }
  }
  if (wt.total != level_one) {
    Fail(report, "wt(V) = " + std::to_string(wt.total) + " but vertex weights sum to " + std::to_string(level_one));
  }
  const std::uint64_t n_k = CountCliques(g, k);
  if (wt.total > n_k) {
    Fail(report, "wt(V) = " + std::to_string(wt.total) + " exceeds n_k = " + std::to_string(n_k));
  }
  report.measured["wt_V"] = wt.total;
  report.measured["n_k"] = n_k;
  report.measured["entries"] = wt.weights.size();
  return report;
}

VerifyReport VerifyGood(const WeightTable& wt, const Thresholds& th, double eps, std::uint64_t n_k) {
  VerifyReport report;
  bool bounded = true;
  double worst = 0.0;
  for (const auto& [tuple, w] : wt.weights) {
    const int t = static_cast<int>(tuple.size());
    if (t < 1 || t > th.k) continue;
    worst = std::max(worst, static_cast<double>(w) / th.hi(t));
    if (static_cast<double>(w) > th.hi(t)) {
      if (bounded) {
        Fail(report, "wt" + TupleString(tuple) + " = " + std::to_string(w) + " exceeds tau_" + std::to_string(t));
      }
      bounded = false;
    }
  }
  const double floor = (1.0 - eps / 2.0) * static_cast<double>(n_k);
  const bool enough = static_cast<double>(wt.total) >= floor;
  if (!enough) {
    Fail(report, "wt(V) = " + std::to_string(wt.total) + " below (1-eps/2) n_k = " + std::to_string(floor));
  }
  report.measured["tau_bounded"] = bounded;
  report.measured["max_weight_over_tau"] = worst;
  report.measured["mass_condition"] = enough;
  report.measured["wt_V"] = wt.total;
  report.measured["mass_floor"] = floor;
  return report;
}

VerifyReport VerifyArboricityBounds(const Graph& g, int tmax) {
  VerifyReport report;
  const Wide D = Degeneracy(g);
  const Wide m = g.num_edges();
  report.measured["degeneracy"] = static_cast<std::uint64_t>(D);

  std::vector<Wide> n_t(static_cast<std::size_t>(tmax) + 1, 0);
  n_t[0] = 1;
  nlohmann::json degree_sums = nlohmann::json::array();
  for (int t = 1; t <= tmax; ++t) {
    Wide count = 0;
    Wide sum = 0;
    ForEachClique(g, t, [&](std::span<const Vertex> c) {
      ++count;
      sum += LeastDegreeMember(g, c).degree;
    });
    n_t[static_cast<std::size_t>(t)] = count;
    const Wide bound = 2 * m * WidePow(D, t - 1);
    degree_sums.push_back({{"t", t},
                           {"sum_d", static_cast<std::uint64_t>(sum)},
                           {"bound", static_cast<double>(bound)},
                           {"ratio", Ratio(sum, bound)}});
    if (sum > bound) Fail(report, "sum of d(T) over " + std::to_string(t) + "-cliques exceeds 2mD^(t-1)");
  }
  report.measured["degree_sums"] = degree_sums;

  nlohmann::json growth = nlohmann::json::array();
  for (int t = 2; t <= tmax; ++t) {
    const Wide lhs = static_cast<Wide>(t) * n_t[static_cast<std::size_t>(t)];
    const Wide rhs = 2 * D * n_t[static_cast<std::size_t>(t) - 1];
    growth.push_back({{"t", t}, {"ratio", Ratio(lhs, rhs)}});
    if (lhs > rhs) Fail(report, "n_" + std::to_string(t) + " exceeds (2D/t) n_" + std::to_string(t - 1));
  }
  report.measured["growth"] = growth;

  nlohmann::json chain = nlohmann::json::array();
  for (int k = 2; k <= tmax; ++k) {
    for (int t = 1; t < k; ++t) {
      const Wide lhs = static_cast<Wide>(Factorial(k)) * n_t[static_cast<std::size_t>(k)];
      const Wide rhs = static_cast<Wide>(Factorial(t)) * n_t[static_cast<std::size_t>(t)] * WidePow(2 * D, k - t);
      chain.push_back({{"t", t}, {"k", k}, {"ratio", Ratio(lhs, rhs)}});
      if (lhs > rhs) {
        Fail(report, "n_" + std::to_string(k) + " exceeds (t!/k!) n_t (2D)^(k-t) at t=" + std::to_string(t));
      }
    }
  }
  report.measured["chain"] = chain;
  report.measured["counts"] = nlohmann::json::array();
  for (int t = 0; t <= tmax; ++t) {
    report.measured["counts"].push_back(static_cast<std::uint64_t>(n_t[static_cast<std::size_t>(t)]));
  }
  return report;
}

}  // namespace arbocount
