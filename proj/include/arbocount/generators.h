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

// Bounded-arboricity graph families, including the lower-bound instances
// used as adversarial inputs.

#ifndef ARBOCOUNT_GENERATORS_H_
#define ARBOCOUNT_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arbocount/graph.h"
#include "json.hpp"

namespace arbocount {

// Vertex i joins min(alpha, i) distinct predecessors chosen uniformly, so
// the degeneracy is at most alpha.
Graph GenIncrementalDegenerate(std::size_t n, std::size_t alpha, std::uint64_t seed);

// Largest w with C(w, k) <= nk_target.
std::size_t PlantedCliqueSize(std::uint64_t nk_target, int k);

// Bipartite α-regular circulant on 2·⌊m/α⌋ vertices (side-u vertex i is
// joined to side-w vertices i..i+α-1 mod ⌊m/α⌋), padded with isolated
// vertices to n, plus one clique per entry of `clique_sizes`. The n + Σ
// sizes labels are shuffled with `seed`. Throws std::invalid_argument when
// the scaffold does not fit in n or ⌊m/α⌋ < α.
Graph GenScaffoldWithCliques(std::size_t n, std::size_t m, std::size_t alpha,
                             std::span<const std::size_t> clique_sizes, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;
  std::size_t w = 0;
  std::uint64_t expected_nk = 0;  // C(w, k) if planted, else 0
};

// The scaffold plus a w-vertex set H, a clique if `planted` and independent
// otherwise. Throws std::invalid_argument when w > alpha or m > n·alpha.
PlantedInstance GenPlantedClique(std::size_t n, std::size_t m, std::size_t alpha, std::uint64_t nk_target, int k,
                                 bool planted, std::uint64_t seed);

// Sets A, A', B, B' of size L = m/α, S_1..S_{k-2} of size α/k, C of size
// n - L. x and y have length m and are read as an L×α grid. Throws
// std::invalid_argument on divisibility or length violations.
Graph GenIntConstruction(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y, std::size_t n,
                         std::size_t m, std::size_t alpha, int k);

// complete(size), wheel(size rim vertices plus a hub), cycle(size),
// star(size vertices), path(size vertices), petersen.
Graph GenNamed(const std::string& name, std::size_t size);

// Generator parameters as carried in sidecars and sweep manifests.
struct GenSpec {
  std::string family;  // incremental, planted, cliques, int, or a named graph
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t alpha = 0;
  std::uint64_t nk = 0;
  int k = 3;
  bool planted = true;
  std::size_t size = 0;
  std::vector<std::size_t> clique_sizes;
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;
  std::uint64_t seed = 0;
};

nlohmann::json ToJson(const GenSpec& spec);
// Throws std::invalid_argument on missing or malformed fields.
GenSpec GenSpecFromJson(const nlohmann::json& j);

// Dispatches on spec.family.
Graph Generate(const GenSpec& spec);

}  // namespace arbocount

#endif  // ARBOCOUNT_GENERATORS_H_
