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

// Plain-text edge lists: one "u v" pair per line, '#' starts a comment line,
// and an optional leading "n m" header line.
//
// The header is recognized when the first non-comment line has two tokens,
// the second equals the number of edge lines that follow, and every id in the
// body is below the first. Without a header, n is one past the largest id.

#ifndef ARBOCOUNT_EDGE_LIST_H_
#define ARBOCOUNT_EDGE_LIST_H_

#include <iosfwd>
#include <string>

#include "arbocount/graph.h"

namespace arbocount {

Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::string& path);

void WriteEdgeList(const Graph& g, std::ostream& out);
void WriteEdgeListFile(const Graph& g, const std::string& path);

}  // namespace arbocount

#endif  // ARBOCOUNT_EDGE_LIST_H_
