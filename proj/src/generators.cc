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

#include "arbocount/generators.h"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "arbocount/exact.h"
#include "arbocount/rng.h"

namespace arbocount {
namespace {

void AddClique(std::vector<Edge>& edges, Vertex first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      edges.emplace_back(static_cast<Vertex>(first + i), static_cast<Vertex>(first + j));
    }
  }
}

std::vector<Vertex> Shuffled(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.UniformInt(0, i - 1)]);
  return perm;
}

}  // namespace

Graph GenIncrementalDegenerate(std::size_t n, std::size_t alpha, std::uint64_t seed) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::unordered_set<Vertex> picked;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t want = std::min(alpha, v);
    picked.clear();
    // Floyd's sampling of `want` distinct ids from [0, v).
    for (std::size_t j = v - want; j < v; ++j) {
      const Vertex t = static_cast<Vertex>(rng.UniformInt(0, j));
      if (!picked.insert(t).second) picked.insert(static_cast<Vertex>(j));
    }
    for (Vertex u : picked) edges.emplace_back(u, static_cast<Vertex>(v));
  }
  return Graph::FromEdges(edges, n);
}

std::size_t PlantedCliqueSize(std::uint64_t nk_target, int k) {
  std::size_t w = static_cast<std::size_t>(std::max(k - 1, 0));
  while (Binomial(w + 1, static_cast<std::uint64_t>(k)) <= nk_target) ++w;
  return w;
}

Graph GenScaffoldWithCliques(std::size_t n, std::size_t m, std::size_t alpha,
                             std::span<const std::size_t> clique_sizes, std::uint64_t seed) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  const std::size_t side = m / alpha;
  if (2 * side > n) {
    throw std::invalid_argument("scaffold needs 2*floor(m/alpha) = " + std::to_string(2 * side) +
                                " vertices but n = " + std::to_string(n));
  }
  if (side > 0 && side < alpha) {
    throw std::invalid_argument("floor(m/alpha) must be >= alpha for a simple alpha-regular scaffold");
  }
  std::vector<Edge> edges;
  edges.reserve(side * alpha);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < alpha; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(side + (i + j) % side));
    }
  }
  std::size_t total = n;
  for (std::size_t size : clique_sizes) {
    AddClique(edges, static_cast<Vertex>(total), size);
    total += size;
  }
  Rng rng(seed);
  const auto perm = Shuffled(total, rng);
  for (auto& [u, v] : edges) u = perm[u], v = perm[v];
  return Graph::FromEdges(edges, total);
}

PlantedInstance GenPlantedClique(std::size_t n, std::size_t m, std::size_t alpha, std::uint64_t nk_target, int k,
                                 bool planted, std::uint64_t seed) {
  if (m > n * alpha) throw std::invalid_argument("m must be <= n*alpha");
  PlantedInstance out;
  out.w = PlantedCliqueSize(nk_target, k);
  if (out.w > alpha) {
    throw std::invalid_argument("w = " + std::to_string(out.w) + " exceeds alpha = " + std::to_string(alpha) +
                                ": this family covers n_k <= C(alpha, k) only");
  }
  const std::size_t sizes[] = {out.w};
  if (planted) {
    out.graph = GenScaffoldWithCliques(n, m, alpha, sizes, seed);
    out.expected_nk = Binomial(out.w, static_cast<std::uint64_t>(k));
  } else {
    // Same scaffold; H stays an independent set.
    out.graph = GenScaffoldWithCliques(n + out.w, m, alpha, {}, seed);
  }
  return out;
}

Graph GenIntConstruction(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y, std::size_t n,
                         std::size_t m, std::size_t alpha, int k) {
  if (k < 3) throw std::invalid_argument("the construction needs k >= 3");
  if (alpha == 0 || m % alpha != 0) throw std::invalid_argument("m must be a positive multiple of alpha");
  if (alpha % static_cast<std::size_t>(k) != 0) throw std::invalid_argument("alpha must be divisible by k");
  if (x.size() != m || y.size() != m) throw std::invalid_argument("x and y must have length m");
  const std::size_t L = m / alpha;
  if (L < alpha) throw std::invalid_argument("m/alpha must be >= alpha so the wiring is simple");
  if (n < L) throw std::invalid_argument("n must be >= m/alpha");
  const std::size_t part = alpha / static_cast<std::size_t>(k);
  const std::size_t parts = static_cast<std::size_t>(k - 2);

  const Vertex a0 = 0;
  const Vertex a1 = static_cast<Vertex>(L);      // A'
  const Vertex b0 = static_cast<Vertex>(2 * L);  // B
  const Vertex b1 = static_cast<Vertex>(3 * L);  // B'
  const Vertex s0 = static_cast<Vertex>(4 * L);
  const std::size_t total = 4 * L + parts * part + (n - L);
  auto a = [&](std::size_t i) { return static_cast<Vertex>(a0 + i % L); };
  auto ap = [&](std::size_t i) { return static_cast<Vertex>(a1 + i % L); };
  auto b = [&](std::size_t i) { return static_cast<Vertex>(b0 + i % L); };
  auto bp = [&](std::size_t i) { return static_cast<Vertex>(b1 + i % L); };

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 1; j <= alpha; ++j) {
      const std::size_t idx = i * alpha + (j - 1);
      if (x[idx] != 0 && y[idx] != 0) {
        edges.emplace_back(a(i), b(i + j));
        edges.emplace_back(ap(i + j), bp(i));
      } else {
        edges.emplace_back(a(i), ap(i + j));
        edges.emplace_back(b(i + j), bp(i));
      }
    }
  }
  for (std::size_t s = 0; s < parts * part; ++s) {
    const Vertex sv = static_cast<Vertex>(s0 + s);
    for (std::size_t i = 0; i < L; ++i) {
      edges.emplace_back(a(i), sv);
      edges.emplace_back(b(i), sv);
    }
    // Complete multipartite among the S parts.
    for (std::size_t t = s + 1; t < parts * part; ++t) {
      if (t / part != s / part) edges.emplace_back(sv, static_cast<Vertex>(s0 + t));
    }
  }
  return Graph::FromEdges(edges, total);
}

Graph GenNamed(const std::string& name, std::size_t size) {
  std::vector<Edge> edges;
  std::size_t n = size;
  if (name == "complete") {
    AddClique(edges, 0, size);
  } else if (name == "cycle") {
    if (size < 3) throw std::invalid_argument("cycle needs size >= 3");
    for (std::size_t i = 0; i < size; ++i) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % size));
    }
  } else if (name == "wheel") {
    if (size < 3) throw std::invalid_argument("wheel needs a rim of size >= 3");
    n = size + 1;
    for (std::size_t i = 0; i < size; ++i) {
      edges.emplace_back(static_cast<Vertex>(1 + i), static_cast<Vertex>(1 + (i + 1) % size));
      edges.emplace_back(0, static_cast<Vertex>(1 + i));
    }
  } else if (name == "star") {
    for (std::size_t i = 1; i < size; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  } else if (name == "path") {
    for (std::size_t i = 1; i < size; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  } else if (name == "petersen") {
    n = 10;
    for (Vertex i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);             // outer cycle
      edges.emplace_back(i, 5 + i);                   // spokes
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);     // inner pentagram
    }
  } else {
    throw std::invalid_argument("unknown named graph '" + name + "'");
  }
  return Graph::FromEdges(edges, n);
}

nlohmann::json ToJson(const GenSpec& s) {
  nlohmann::json j;
  j["family"] = s.family;
  j["seed"] = s.seed;
  if (s.family == "incremental") {
    j["n"] = s.n;
    j["alpha"] = s.alpha;
  } else if (s.family == "planted") {
    j.update({{"n", s.n}, {"m", s.m}, {"alpha", s.alpha}, {"nk", s.nk}, {"k", s.k}, {"planted", s.planted}});
  } else if (s.family == "cliques") {
    j.update({{"n", s.n}, {"m", s.m}, {"alpha", s.alpha}, {"clique_sizes", s.clique_sizes}});
  } else if (s.family == "int") {
    j.update({{"n", s.n}, {"m", s.m}, {"alpha", s.alpha}, {"k", s.k}, {"x", s.x}, {"y", s.y}});
  } else {
    j["size"] = s.size;
  }
  return j;
}

GenSpec GenSpecFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family")) throw std::invalid_argument("generator spec needs a family");
  try {
    GenSpec s;
    s.family = j.at("family").get<std::string>();
    s.seed = j.value("seed", std::uint64_t{0});
    s.n = j.value("n", std::size_t{0});
    s.m = j.value("m", std::size_t{0});
    s.alpha = j.value("alpha", std::size_t{0});
    s.nk = j.value("nk", std::uint64_t{0});
    s.k = j.value("k", 3);
    s.planted = j.value("planted", true);
    s.size = j.value("size", std::size_t{0});
    if (j.contains("clique_sizes")) s.clique_sizes = j.at("clique_sizes").get<std::vector<std::size_t>>();
    if (j.contains("x")) s.x = j.at("x").get<std::vector<std::uint8_t>>();
    if (j.contains("y")) s.y = j.at("y").get<std::vector<std::uint8_t>>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed generator spec: ") + e.what());
  }
}

Graph Generate(const GenSpec& s) {
  if (s.family == "incremental") return GenIncrementalDegenerate(s.n, s.alpha, s.seed);
  if (s.family == "planted") return GenPlantedClique(s.n, s.m, s.alpha, s.nk, s.k, s.planted, s.seed).graph;
  if (s.family == "cliques") return GenScaffoldWithCliques(s.n, s.m, s.alpha, s.clique_sizes, s.seed);
  if (s.family == "int") return GenIntConstruction(s.x, s.y, s.n, s.m, s.alpha, s.k);
  return GenNamed(s.family, s.size);
}

}  // namespace arbocount
