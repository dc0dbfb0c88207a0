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

#ifndef ARBOCOUNT_GRAPH_H_
#define ARBOCOUNT_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace arbocount {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in CSR form. Adjacency lists are strictly
// increasing; the structure is safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Deduplicates and symmetrizes `edges`. Throws std::invalid_argument on a
  // self-loop or an id outside [0, n).
  static Graph FromEdges(std::span<const Edge> edges, std::size_t n);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  // Offset of v's first slot in the flattened adjacency array.
  std::size_t slot_offset(Vertex v) const { return offsets_[v]; }

  // Binary search on the shorter of the two lists.
  bool has_edge(Vertex u, Vertex v) const;

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

struct QueryStats {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t pair = 0;
  std::uint64_t distinct = 0;
  bool materialized = false;

  std::uint64_t raw_total() const { return degree + neighbor + pair; }
};

class QueryBudgetExceeded : public std::runtime_error {
 public:
  explicit QueryBudgetExceeded(std::uint64_t budget)
      : std::runtime_error("query budget of " + std::to_string(budget) + " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

// The degree/neighbor/pair query model over a Graph, with raw and
// deduplicated accounting.
//
// A probe is distinct the first time it is made. Pair probes are charged
// until m of them have been charged; the next fresh pair probe materializes
// the whole graph (every unseen degree and neighbor slot is charged once) and
// from then on nothing is charged. Hence distinct <= n + 2m + m.
//
// Not thread-safe; use one session per run.
class QuerySession {
 public:
  explicit QuerySession(const Graph& graph, std::optional<std::uint64_t> budget = std::nullopt);

  std::size_t num_vertices() const { return graph_->num_vertices(); }

  std::size_t Degree(Vertex v);
  // 1-based index into v's sorted adjacency list, 1 <= i <= d(v).
  Vertex Neighbor(Vertex v, std::size_t i);
  bool Pair(Vertex u, Vertex v);

  // The true edge count, outside the query model. Callers must flag its use.
  std::size_t SideChannelEdgeCount() const { return graph_->num_edges(); }

  const QueryStats& stats() const { return stats_; }
  const Graph& graph() const { return *graph_; }

 private:
  void CheckVertex(Vertex v) const;
  void ChargeRaw();
  void Materialize();

  const Graph* graph_;
  std::optional<std::uint64_t> budget_;
  QueryStats stats_;
  std::vector<bool> degree_seen_;
  std::vector<bool> slot_seen_;
  std::unordered_set<std::uint64_t> pairs_seen_;
  std::uint64_t degree_seen_count_ = 0;
  std::uint64_t slot_seen_count_ = 0;
  std::uint64_t pairs_charged_ = 0;
};

}  // namespace arbocount

#endif  // ARBOCOUNT_GRAPH_H_
