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

#include "arbocount/graph.h"

#include <algorithm>

namespace arbocount {

Graph Graph::FromEdges(std::span<const Edge> edges, std::size_t n) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") has an id outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : directed) ++g.offsets_[e.first + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.reserve(directed.size());
  for (const auto& e : directed) g.adjacency_.push_back(e.second);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto a = neighbors(u);
  auto b = neighbors(v);
  if (a.size() > b.size()) {
    std::swap(a, b);
    std::swap(u, v);
  }
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

QuerySession::QuerySession(const Graph& graph, std::optional<std::uint64_t> budget)
    : graph_(&graph),
      budget_(budget),
      degree_seen_(graph.num_vertices(), false),
      slot_seen_(2 * graph.num_edges(), false) {}

void QuerySession::CheckVertex(Vertex v) const {
  if (v >= graph_->num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(graph_->num_vertices()) + ")");
  }
}

void QuerySession::ChargeRaw() {
  if (budget_ && stats_.raw_total() > *budget_) throw QueryBudgetExceeded(*budget_);
}

void QuerySession::Materialize() {
  stats_.distinct += (graph_->num_vertices() - degree_seen_count_) +
                     (slot_seen_.size() - slot_seen_count_);
  degree_seen_count_ = graph_->num_vertices();
  slot_seen_count_ = slot_seen_.size();
  stats_.materialized = true;
  // Per-probe bookkeeping is no longer needed.
  degree_seen_.clear();
  slot_seen_.clear();
  pairs_seen_.clear();
}

std::size_t QuerySession::Degree(Vertex v) {
  CheckVertex(v);
  ++stats_.degree;
  ChargeRaw();
  if (!stats_.materialized && !degree_seen_[v]) {
    degree_seen_[v] = true;
    ++degree_seen_count_;
    ++stats_.distinct;
  }
  return graph_->degree(v);
}

Vertex QuerySession::Neighbor(Vertex v, std::size_t i) {
  CheckVertex(v);
  const std::size_t d = graph_->degree(v);
  if (i < 1 || i > d) {
    throw std::out_of_range("neighbor index " + std::to_string(i) + " outside [1, " +
                            std::to_string(d) + "] for vertex " + std::to_string(v));
  }
  ++stats_.neighbor;
  ChargeRaw();
  const std::size_t slot = graph_->slot_offset(v) + (i - 1);
  if (!stats_.materialized && !slot_seen_[slot]) {
    slot_seen_[slot] = true;
    ++slot_seen_count_;
    ++stats_.distinct;
  }
  return graph_->neighbors(v)[i - 1];
}

bool QuerySession::Pair(Vertex u, Vertex v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw std::invalid_argument("pair query on identical vertices " + std::to_string(u));
  ++stats_.pair;
  ChargeRaw();
  if (!stats_.materialized) {
    const auto lo = std::min(u, v);
    const auto hi = std::max(u, v);
    const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    if (!pairs_seen_.contains(key)) {
      if (pairs_charged_ >= graph_->num_edges()) {
        Materialize();
      } else {
        pairs_seen_.insert(key);
        ++pairs_charged_;
        ++stats_.distinct;
      }
    }
  }
  return graph_->has_edge(u, v);
}

}  // namespace arbocount
