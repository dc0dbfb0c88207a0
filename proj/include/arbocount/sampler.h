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

#ifndef ARBOCOUNT_SAMPLER_H_
#define ARBOCOUNT_SAMPLER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arbocount/graph.h"
#include "arbocount/rng.h"

namespace arbocount {

// Walker's alias method (Vose's linear-time construction).
class AliasTable {
 public:
  // Throws std::invalid_argument unless every weight is finite and
  // non-negative and at least one is positive.
  static AliasTable Build(std::span<const double> weights);

  std::size_t Sample(Rng& rng) const { return Resolve(Column(rng), rng); }

  // Sample() in two steps, so callers can prefetch the column's slot.
  std::size_t Column(Rng& rng) const { return rng.UniformInt(0, slots_.size() - 1); }
  void Prefetch(std::size_t column) const { __builtin_prefetch(slots_.data() + column); }
  std::size_t Resolve(std::size_t column, Rng& rng) const {
    const Slot& slot = slots_[column];
    return rng.UniformReal() < slot.prob ? column : slot.alias;
  }

  // Exact probability of drawing index i, read back from the table.
  double Probability(std::size_t i) const;

  std::size_t size() const { return slots_.size(); }

 private:
  // Threshold and alias share a slot so a draw touches one cache line.
  struct Slot {
    double prob;
    std::size_t alias;
  };
  std::vector<Slot> slots_;
};

// Multiset R_t of ordered t-cliques. Each item caches its least-degree
// member (ties broken by id) and that member's degree d(T).
class CliqueSample {
 public:
  explicit CliqueSample(int level) : level_(level) {}

  // Appends an ordered clique given by the caller, querying the degree of
  // each member through the session. Throws std::invalid_argument if the
  // tuple has the wrong length or is not a clique of the session's graph.
  void Add(QuerySession& session, std::span<const Vertex> tuple);

  int level() const { return level_; }
  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }

  std::span<const Vertex> item(std::size_t i) const {
    return {vertices_.data() + i * static_cast<std::size_t>(level_), static_cast<std::size_t>(level_)};
  }
  Vertex least_vertex(std::size_t i) const { return least_[i]; }
  void Prefetch(std::size_t i) const {
    __builtin_prefetch(vertices_.data() + i * static_cast<std::size_t>(level_));
    __builtin_prefetch(least_.data() + i);
    __builtin_prefetch(degrees_.data() + i);
  }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }

  // d(R_t).
  std::uint64_t total_degree() const { return total_degree_; }

 private:
  friend std::optional<CliqueSample> SampleSet(QuerySession&, const CliqueSample&, std::uint64_t, Rng&,
                                               const std::function<void(std::size_t, Vertex)>*);
  void Append(std::span<const Vertex> tuple, Vertex least, std::uint64_t degree);

  int level_;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> least_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t total_degree_ = 0;
};

// One round of Sample-a-Set: `s_next` trials, each drawing T ∝ d(T) from
// `current`, then a uniform neighbor v of T's least-degree vertex, keeping
// (T, v) when it is an ordered (t+1)-clique. Every candidate pair is drawn
// with probability exactly 1/d(R_t) per trial.
//
// Returns nullopt when d(R_t) = 0. `on_candidate`, if given, sees the item
// index and neighbor of every trial (used by tests).
std::optional<CliqueSample> SampleSet(QuerySession& session, const CliqueSample& current,
                                      std::uint64_t s_next, Rng& rng,
                                      const std::function<void(std::size_t, Vertex)>* on_candidate = nullptr);

}  // namespace arbocount

#endif  // ARBOCOUNT_SAMPLER_H_
