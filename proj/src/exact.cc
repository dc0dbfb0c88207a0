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

#include "arbocount/exact.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace arbocount {
namespace {

// Out-neighbors along the peeling order: every edge points from the vertex
// peeled first to the one peeled later, so out-degree <= degeneracy.
struct Orientation {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> out;  // sorted by vertex id within each list

  std::span<const Vertex> Out(Vertex v) const {
    return {out.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};

Orientation Orient(const Graph& g) {
  const auto order = DegeneracyOrder(g);
  std::vector<std::size_t> rank(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  Orientation o;
  o.offsets.assign(g.num_vertices() + 1, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (rank[u] > rank[v]) ++o.offsets[v + 1];
    }
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) o.offsets[v + 1] += o.offsets[v];
  o.out.reserve(o.offsets.back());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (rank[u] > rank[v]) o.out.push_back(u);
    }
  }
  return o;
}

std::vector<Vertex> Intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::uint64_t CountRec(const Orientation& o, std::span<const Vertex> candidates, int remaining) {
  if (remaining == 1) return candidates.size();
  std::uint64_t total = 0;
  for (Vertex v : candidates) {
    auto next = Intersect(candidates, o.Out(v));
    if (static_cast<int>(next.size()) + 1 >= remaining) total += CountRec(o, next, remaining - 1);
  }
  return total;
}

void VisitRec(const Orientation& o, std::span<const Vertex> candidates, int remaining,
              std::vector<Vertex>& stack, std::vector<Vertex>& scratch,
              const std::function<void(std::span<const Vertex>)>& visit) {
  for (Vertex v : candidates) {
    stack.push_back(v);
    if (remaining == 1) {
      scratch.assign(stack.begin(), stack.end());
      std::sort(scratch.begin(), scratch.end());
      visit(scratch);
    } else {
      auto next = Intersect(candidates, o.Out(v));
      if (static_cast<int>(next.size()) + 1 >= remaining) {
        VisitRec(o, next, remaining - 1, stack, scratch, visit);
      }
    }
    stack.pop_back();
  }
}

// Cliques S inside `candidates` (pairwise adjacent, ascending), reported by
// size together with the minimum degree over `base` ∪ S.
void ExtendRec(const Graph& g, std::span<const Vertex> candidates, int depth, int max_depth,
               std::size_t min_degree, CliqueStats& stats) {
  const int j = stats.t + depth;
  if (j == stats.k) {
    ++stats.c_k;
    return;
  }
  stats.d_cj[static_cast<std::size_t>(j - stats.t)] += min_degree;
  if (depth == max_depth) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    auto rest = candidates.subspan(i + 1);
    auto next = Intersect(rest, g.neighbors(v));
    ExtendRec(g, next, depth + 1, max_depth, std::min(min_degree, g.degree(v)), stats);
  }
}

}  // namespace

std::vector<Vertex> DegeneracyOrder(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  // Bucket queue keyed by current degree.
  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t cursor = 0;
  while (order.size() < n) {
    while (buckets[cursor].empty()) ++cursor;
    const Vertex v = buckets[cursor].back();
    buckets[cursor].pop_back();
    if (removed[v] || degree[v] != cursor) continue;  // stale entry
    removed[v] = true;
    order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      --degree[u];
      buckets[degree[u]].push_back(u);
      cursor = std::min(cursor, degree[u]);
    }
  }
  return order;
}

std::size_t Degeneracy(const Graph& g) {
  const auto order = DegeneracyOrder(g);
  std::vector<bool> removed(g.num_vertices(), false);
  std::size_t best = 0;
  for (Vertex v : order) {
    std::size_t remaining = 0;
    for (Vertex u : g.neighbors(v)) remaining += removed[u] ? 0 : 1;
    best = std::max(best, remaining);
    removed[v] = true;
  }
  return best;
}

std::uint64_t CountCliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be >= 1");
  if (k == 1) return g.num_vertices();
  if (k == 2) return g.num_edges();
  const auto o = Orient(g);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto out = o.Out(v);
    if (static_cast<int>(out.size()) + 1 >= k) total += CountRec(o, out, k - 1);
  }
  return total;
}

std::vector<std::uint64_t> CountCliquesUpTo(const Graph& g, int kmax) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(kmax, 0)) + 1, 0);
  counts[0] = 1;
  for (int t = 1; t <= kmax; ++t) counts[static_cast<std::size_t>(t)] = CountCliques(g, t);
  return counts;
}

void ForEachClique(const Graph& g, int t, const std::function<void(std::span<const Vertex>)>& visit) {
  if (t < 1) throw std::invalid_argument("clique size must be >= 1");
  const auto o = Orient(g);
  std::vector<Vertex> stack;
  std::vector<Vertex> scratch;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    stack.assign(1, v);
    if (t == 1) {
      visit(stack);
      continue;
    }
    auto out = o.Out(v);
    if (static_cast<int>(out.size()) + 1 >= t) VisitRec(o, out, t - 1, stack, scratch, visit);
  }
}

std::vector<Clique> EnumerateCliques(const Graph& g, int t) {
  std::vector<Clique> out;
  ForEachClique(g, t, [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

bool IsClique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

LeastDegree LeastDegreeMember(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty clique has no degree");
  LeastDegree best{vertices[0], g.degree(vertices[0])};
  for (Vertex v : vertices.subspan(1)) {
    const std::size_t d = g.degree(v);
    if (d < best.degree || (d == best.degree && v < best.vertex)) best = {v, d};
  }
  return best;
}

LeastDegree CliqueDegree(const Graph& g, std::span<const Vertex> clique) {
  if (!IsClique(g, clique)) throw std::invalid_argument("vertex set is not a clique");
  return LeastDegreeMember(g, clique);
}

CliqueStats ComputeCliqueStats(const Graph& g, std::span<const Vertex> clique, int k) {
  const int t = static_cast<int>(clique.size());
  if (t < 1 || t > k) throw std::invalid_argument("clique size must lie in [1, k]");
  if (!IsClique(g, clique)) throw std::invalid_argument("vertex set is not a clique");
  CliqueStats stats;
  stats.t = t;
  stats.k = k;
  stats.d_cj.assign(static_cast<std::size_t>(k - t), 0);

  std::vector<Vertex> common(g.neighbors(clique[0]).begin(), g.neighbors(clique[0]).end());
  for (Vertex v : clique.subspan(1)) common = Intersect(common, g.neighbors(v));
  ExtendRec(g, common, 0, k - t, LeastDegreeMember(g, clique).degree, stats);
  return stats;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace arbocount
