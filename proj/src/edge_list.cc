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

#include "arbocount/edge_list.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace arbocount {
namespace {

using Row = std::vector<std::uint64_t>;

Row ParseRow(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  Row row;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad token '" + token + "'");
    }
    row.push_back(value);
  }
  return row;
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Row row = ParseRow(line, line_no);
    if (row.size() != 2) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected two ids");
    }
    rows.push_back(std::move(row));
  }

  std::size_t body_begin = 0;
  std::uint64_t n = 0;
  if (!rows.empty()) {
    std::uint64_t body_max = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      body_max = std::max({body_max, rows[i][0] + 1, rows[i][1] + 1});
    }
    const bool header = rows[0][1] == rows.size() - 1 && body_max <= rows[0][0];
    if (header) {
      body_begin = 1;
      n = rows[0][0];
    } else {
      n = std::max({body_max, rows[0][0] + 1, rows[0][1] + 1});
    }
  }
  if (n > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(rows.size() - body_begin);
  for (std::size_t i = body_begin; i < rows.size(); ++i) {
    edges.emplace_back(static_cast<Vertex>(rows[i][0]), static_cast<Vertex>(rows[i][1]));
  }
  return Graph::FromEdges(edges, static_cast<std::size_t>(n));
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ReadEdgeList(in);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << "# arbocount edge list\n";
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void WriteEdgeListFile(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  WriteEdgeList(g, out);
}

}  // namespace arbocount
