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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arbocount/exact.h"

namespace arbocount {

AliasTable AliasTable::Build(std::span<const double> weights) {
  const std::size_t n = weights.size();
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("alias weights must be finite and >= 0");
    total += w;
  }
  if (n == 0 || total <= 0.0) throw std::invalid_argument("alias table needs a positive weight");

  AliasTable table;
  table.slots_.assign(n, Slot{0.0, 0});
  std::vector<double> scaled(n);
  std::vector<std::size_t> small;
  std::vector<std::size_t> large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    small.pop_back();
    const std::size_t l = large.back();
    table.slots_[s] = {scaled[s], l};
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (std::size_t i : large) table.slots_[i] = {1.0, i};
  for (std::size_t i : small) table.slots_[i] = {1.0, i};
  return table;
}

double AliasTable::Probability(std::size_t i) const {
  double mass = slots_.at(i).prob;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (slots_[j].alias == i && j != i) mass += 1.0 - slots_[j].prob;
  }
  return mass / static_cast<double>(slots_.size());
}

void CliqueSample::Append(std::span<const Vertex> tuple, Vertex least, std::uint64_t degree) {
  vertices_.insert(vertices_.end(), tuple.begin(), tuple.end());
  least_.push_back(least);
  degrees_.push_back(degree);
  total_degree_ += degree;
}

void CliqueSample::Add(QuerySession& session, std::span<const Vertex> tuple) {
  if (static_cast<int>(tuple.size()) != level_) {
    throw std::invalid_argument("tuple length does not match the sample level");
  }
  if (!IsClique(session.graph(), tuple)) throw std::invalid_argument("tuple is not an ordered clique");
  Vertex least = tuple[0];
  std::uint64_t least_degree = session.Degree(tuple[0]);
  for (Vertex v : tuple.subspan(1)) {
    const std::uint64_t d = session.Degree(v);
    if (d < least_degree || (d == least_degree && v < least)) least = v, least_degree = d;
  }
  Append(tuple, least, least_degree);
}

std::optional<CliqueSample> SampleSet(QuerySession& session, const CliqueSample& current,
                                      std::uint64_t s_next, Rng& rng,
                                      const std::function<void(std::size_t, Vertex)>* on_candidate) {
  if (current.total_degree() == 0) return std::nullopt;
  const int t = current.level();
  std::vector<double> weights(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) weights[i] = static_cast<double>(current.degree(i));
  const AliasTable table = AliasTable::Build(weights);

  CliqueSample next(t + 1);
  std::vector<Vertex> tuple(static_cast<std::size_t>(t) + 1);
  // Trials run in batches: the batch's items are drawn up front and
  // prefetched, since R_t is usually far larger than the cache.
  constexpr std::uint64_t kBatch = 32;
  std::size_t batch[kBatch];
  for (std::uint64_t trial = 0; trial < s_next; ++trial) {
    const std::uint64_t slot = trial % kBatch;
    if (slot == 0) {
      const std::uint64_t count = std::min(kBatch, s_next - trial);
      for (std::uint64_t b = 0; b < count; ++b) {
        batch[b] = table.Column(rng);
        table.Prefetch(batch[b]);
      }
      for (std::uint64_t b = 0; b < count; ++b) {
        batch[b] = table.Resolve(batch[b], rng);
        current.Prefetch(batch[b]);
      }
    }
    const std::size_t index = batch[slot];
    const auto clique = current.item(index);
    // Re-query member degrees; these hit the session cache.
    for (Vertex x : clique) session.Degree(x);
    const Vertex u = current.least_vertex(index);
    const std::uint64_t du = current.degree(index);
    const Vertex v = session.Neighbor(u, rng.UniformInt(1, du));
    if (on_candidate != nullptr) (*on_candidate)(index, v);

    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    bool is_clique = true;
    for (Vertex x : clique) {
      if (!session.Pair(x, v)) {
        is_clique = false;
        break;
      }
    }
    if (!is_clique) continue;

    std::copy(clique.begin(), clique.end(), tuple.begin());
    tuple.back() = v;
    const std::uint64_t dv = session.Degree(v);
    if (dv < du || (dv == du && v < u)) {
      next.Append(tuple, v, dv);
    } else {
      next.Append(tuple, u, du);
    }
  }
  return next;
}

}  // namespace arbocount
