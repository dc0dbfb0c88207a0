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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "arbocount/edge_list.h"
#include "arbocount/estimator.h"
#include "arbocount/exact.h"
#include "arbocount/generators.h"
#include "arbocount/reference.h"
#include "arbocount/runner.h"

namespace py = pybind11;
using arbocount::Graph;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
py::object FromJson(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json ToJsonValue(const py::object& obj) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_arbocount, m) {
  m.doc() = "k-clique counting in bounded-arboricity graphs";

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](const std::vector<std::pair<arbocount::Vertex, arbocount::Vertex>>& edges, std::size_t n) {
            return Graph::FromEdges(edges, n);
          },
          py::arg("edges"), py::arg("n"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def(
          "neighbors",
          [](const Graph& g, arbocount::Vertex v) {
            auto s = g.neighbors(v);
            return std::vector<arbocount::Vertex>(s.begin(), s.end());
          },
          py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("edges", &Graph::edges);

  m.def("read_edge_list", &arbocount::ReadEdgeListFile, py::arg("path"));
  m.def("write_edge_list", &arbocount::WriteEdgeListFile, py::arg("graph"), py::arg("path"));
  m.def("count_cliques", &arbocount::CountCliques, py::arg("graph"), py::arg("k"));
  m.def("degeneracy", &arbocount::Degeneracy, py::arg("graph"));
  m.def("enumerate_cliques", &arbocount::EnumerateCliques, py::arg("graph"), py::arg("t"));
  m.def(
      "generate", [](const py::dict& spec) { return arbocount::Generate(arbocount::GenSpecFromJson(ToJsonValue(spec))); },
      py::arg("spec"));
  m.def(
      "thresholds",
      [](int k, double alpha, double nk_guess, double eps, double scale, const std::string& profile) {
        const auto th = arbocount::ComputeThresholds(k, alpha, nk_guess, eps, scale, arbocount::ParseProfile(profile));
        nlohmann::json j = {{"k", th.k},         {"alpha", th.alpha},     {"nk_guess", th.nk_guess},
                            {"eps", th.eps},     {"gamma", th.gamma_I},   {"beta", th.beta_I},
                            {"tau_hi", th.tau_hi}, {"tau_lo", th.tau_lo}, {"scale", th.scale}};
        return FromJson(j);
      },
      py::arg("k"), py::arg("alpha"), py::arg("nk_guess"), py::arg("eps"), py::arg("scale") = 1.0,
      py::arg("profile") = "analysis");
  m.def(
      "estimate",
      [](const Graph& g, int k, double eps, double delta, std::optional<double> alpha, double scale,
         const std::string& profile, std::uint64_t seed, const std::string& m_strategy,
         std::optional<double> nk_guess, std::optional<std::uint64_t> budget, bool trace, bool exact) {
        arbocount::RunConfig c;
        c.estimator.k = k;
        c.estimator.eps = eps;
        c.estimator.delta = delta;
        c.estimator.scale = scale;
        c.estimator.profile = arbocount::ParseProfile(profile);
        c.estimator.edge_strategy = arbocount::ParseEdgeStrategy(m_strategy);
        c.alpha = alpha;
        c.nk_guess = nk_guess;
        c.budget = budget;
        c.include_trace = trace;
        c.compute_exact = exact;
        arbocount::RunOutput out;
        {
          py::gil_scoped_release release;
          out = arbocount::RunEstimate(g, c, seed);
        }
        return FromJson(out.record);
      },
      py::arg("graph"), py::arg("k"), py::arg("eps") = 0.25, py::arg("delta") = 1.0 / 3, py::arg("alpha") = py::none(),
      py::arg("scale") = 16.0, py::arg("profile") = "practical", py::arg("seed") = 1,
      py::arg("m_strategy") = "exact-sidechannel", py::arg("nk_guess") = py::none(), py::arg("budget") = py::none(),
      py::arg("trace") = false, py::arg("exact") = false);
}
