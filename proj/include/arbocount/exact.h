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

// Exact ground truth. These routines read the Graph directly and are not
// part of the query model.

#ifndef ARBOCOUNT_EXACT_H_
#define ARBOCOUNT_EXACT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arbocount/graph.h"

namespace arbocount {

// A t-clique as a tuple of distinct vertices. Unordered cliques are kept in
// canonical (ascending) form; ordered cliques keep their tuple order.
using Clique = std::vector<Vertex>;
using OrderedClique = std::vector<Vertex>;

// Smallest D such that every subgraph has a vertex of degree <= D, by
// min-degree peeling. Upper-bounds the arboricity.
std::size_t Degeneracy(const Graph& g);

// Peeling order (first peeled first).
std::vector<Vertex> DegeneracyOrder(const Graph& g);

std::uint64_t CountCliques(const Graph& g, int k);

// counts[t] = n_t for t in [0, kmax]; counts[0] = 1.
std::vector<std::uint64_t> CountCliquesUpTo(const Graph& g, int kmax);

// Calls `visit` once per t-clique. The span is sorted ascending and only
// valid during the call.
void ForEachClique(const Graph& g, int t, const std::function<void(std::span<const Vertex>)>& visit);

// All t-cliques, canonical form, lexicographically sorted.
std::vector<Clique> EnumerateCliques(const Graph& g, int t);

bool IsClique(const Graph& g, std::span<const Vertex> vertices);

struct LeastDegree {
  Vertex vertex = 0;
  std::size_t degree = 0;
};

// The minimum-degree member of a clique, smallest id on ties. Throws
// std::invalid_argument if `clique` is empty or not a clique.
LeastDegree CliqueDegree(const Graph& g, std::span<const Vertex> clique);

// Same as CliqueDegree without the clique check.
LeastDegree LeastDegreeMember(const Graph& g, std::span<const Vertex> vertices);

struct CliqueStats {
  int t = 0;
  int k = 0;
  // Number of k-cliques containing the clique.
  std::uint64_t c_k = 0;
  // d_cj[j - t] = sum of d(J) over j-cliques J containing the clique, for j
  // in [t, k-1].
  std::vector<std::uint64_t> d_cj;

  std::uint64_t d_c(int j) const { return d_cj.at(static_cast<std::size_t>(j - t)); }
};

// Enumerates inside the common neighborhood of `clique`. Requires a clique
// with 1 <= |clique| <= k.
CliqueStats ComputeCliqueStats(const Graph& g, std::span<const Vertex> clique, int k);

std::uint64_t Binomial(std::uint64_t n, std::uint64_t r);
std::uint64_t Factorial(int n);

}  // namespace arbocount

#endif  // ARBOCOUNT_EXACT_H_
