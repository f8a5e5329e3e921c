// Copyright 2026 The cyclesmith Authors.
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

#ifndef CYCLESMITH_GRAPH_IO_HPP
#define CYCLESMITH_GRAPH_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "cyclesmith/graph.hpp"

namespace cyclesmith {

inline constexpr int kMaxGraph6Order = 62;

/// Parses a single-byte-size graph6 string (n <= 62). Edge ids are assigned in
/// lexicographic (u, v) order. Trailing newline/whitespace is ignored.
/// Throws Error(MalformedGraph6) or Error(Unsupported).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" followed by m lines "u v" with 0 <= u < v < n. Edge ids follow file
/// order. Throws Error(MalformedEdgeList).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Detects the format: an edge list starts with two integers on its first
/// non-empty line, anything else is read as graph6.
Graph parse_graph_text(std::string_view text);

/// Graphviz export. When `part_of_edge` is given, each edge gets a colour and
/// a `part` attribute from it (-1 for edges that belong to no part).
std::string write_dot(const Graph& g, std::span<const int> part_of_edge = {});

}  // namespace cyclesmith

#endif  // CYCLESMITH_GRAPH_IO_HPP
