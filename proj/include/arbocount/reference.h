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

// Exact versions of the thresholds, sociable/costly classification, active
// set and assignment weights. Ground truth for the randomized estimator.

#ifndef ARBOCOUNT_REFERENCE_H_
#define ARBOCOUNT_REFERENCE_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "arbocount/exact.h"
#include "arbocount/graph.h"
#include "json.hpp"

namespace arbocount {

// How the analysis constants are applied.
//
// kAnalysis: the formulas as stated, with `scale` multiplying τ̄_t (t < k) and
// the sample multiplier 3ln(2/β)/γ².
//
// kPractical: the prefactors k^{4k}/(β^k γ²) and k^{4k}/γ² are replaced by
// `scale`, the sample multiplier is 3ln(2/β) and τ̲_t = τ̄_t/(4(k!)²). Abort
// caps keep their β and (k!)² slack but lose the γ powers; the costliness
// cap keeps a single 1/γ.
enum class ConstantProfile { kAnalysis, kPractical };

const char* ProfileName(ConstantProfile profile);
// Throws std::invalid_argument on an unknown name.
ConstantProfile ParseProfile(const std::string& name);

struct Thresholds {
  int k = 0;
  double alpha = 0;
  double nk_guess = 0;
  double eps = 0;  // after clamping to 1/(2k²)
  double gamma_I = 0;
  double beta_I = 0;
  double scale = 1;
  ConstantProfile profile = ConstantProfile::kAnalysis;
  // Indexed by t in [1, k]; entry 0 is unused.
  std::vector<double> tau_hi;
  std::vector<double> tau_lo;

  double hi(int t) const { return tau_hi.at(static_cast<std::size_t>(t)); }
  double lo(int t) const { return tau_lo.at(static_cast<std::size_t>(t)); }
};

double ClampEpsilon(double eps, int k);

// Throws std::invalid_argument on k < 2, alpha < 1, nk_guess < 1, eps <= 0
// or scale <= 0.
Thresholds ComputeThresholds(int k, double alpha, double nk_guess, double eps, double scale = 1.0,
                             ConstantProfile profile = ConstantProfile::kAnalysis);

enum class Sociability { kSociable, kNonSociable, kIntermediate };
const char* SociabilityName(Sociability s);

Sociability ClassifySociable(std::uint64_t c_k, int t, const Thresholds& th);
Sociability ClassifySociable(const Graph& g, std::span<const Vertex> clique, const Thresholds& th);

// Costly test with the exact m of `g` and th.gamma_I. A clique in no
// k-clique is never costly.
bool IsCostly(const CliqueStats& stats, std::uint64_t m, const Thresholds& th);
bool IsCostly(const Graph& g, std::span<const Vertex> clique, const Thresholds& th);

// A set of ordered cliques of sizes 1..k.
class ActiveSet {
 public:
  explicit ActiveSet(int k) : k_(k) {}

  int k() const { return k_; }
  bool Contains(std::span<const Vertex> tuple) const {
    return members_.count(OrderedClique(tuple.begin(), tuple.end())) > 0;
  }
  void Insert(std::span<const Vertex> tuple) { members_.emplace(tuple.begin(), tuple.end()); }
  bool Erase(std::span<const Vertex> tuple) {
    return members_.erase(OrderedClique(tuple.begin(), tuple.end())) > 0;
  }
  std::size_t size() const { return members_.size(); }
  const std::set<OrderedClique>& members() const { return members_; }

 private:
  int k_;
  std::set<OrderedClique> members_;
};

// Every ordered clique of size 1..k-1 that is neither sociable nor costly,
// plus every ordered k-clique. Intermediate cliques are included.
ActiveSet ExactActiveSet(const Graph& g, const Thresholds& th);

// Weights induced by an active set. Only non-zero entries are stored; the
// map is public so tests can corrupt it.
struct WeightTable {
  int k = 0;
  std::map<OrderedClique, std::uint64_t> weights;
  std::uint64_t total = 0;  // wt(V)

  std::uint64_t Weight(std::span<const Vertex> tuple) const;
};

// Each k-clique with a fully active ordering gives 1 to its
// lexicographically first such ordering and to every prefix of it.
WeightTable ExactWeight(const Graph& g, const ActiveSet& active, int k);

struct VerifyReport {
  bool pass = true;
  std::string counterexample;  // empty on pass
  nlohmann::json measured = nlohmann::json::object();

  nlohmann::json ToJson() const;
};

// Legality: k-level weights in {0,1} on genuine ordered k-cliques, at most
// one weight-1 ordering per k-clique, telescoping sums at every level, and
// wt(V) <= n_k.
VerifyReport VerifyLegal(const WeightTable& wt, const Graph& g, int k);

// Goodness: wt(T) <= τ̄_|T| everywhere and wt(V) >= (1 - eps/2) n_k.
VerifyReport VerifyGood(const WeightTable& wt, const Thresholds& th, double eps, std::uint64_t n_k);

// Σ_{T in C_t} d(T) <= 2m D^{t-1}, n_t <= (2D/t) n_{t-1} and
// n_k <= (t!/k!) n_t (2D)^{k-t} for all t <= tmax, with D the degeneracy.
// Margins are reported in `measured`.
VerifyReport VerifyArboricityBounds(const Graph& g, int tmax);

}  // namespace arbocount

#endif  // ARBOCOUNT_REFERENCE_H_
