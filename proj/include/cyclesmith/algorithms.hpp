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

#ifndef CYCLESMITH_ALGORITHMS_HPP
#define CYCLESMITH_ALGORITHMS_HPP

#include <optional>
#include <span>
#include <vector>

#include "cyclesmith/error.hpp"
#include "cyclesmith/graph.hpp"

namespace cyclesmith {

// Foundational graph algorithms. Everything here is deterministic: ties are
// broken towards the lowest vertex / edge index.

struct Components {
  int count = 0;
  std::vector<int> of_vertex;  // component index per vertex, numbered by lowest vertex
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Components of the graph formed by `edges` only (vertices not incident to
/// any of them are singletons).
Components edge_components(const Graph& g, std::span<const EdgeId> edges);

struct BlockDecomposition {
  std::vector<EdgeSet> blocks;      // maximal 2-connected pieces; bridges are 1-edge blocks
  std::vector<Vertex> cut_vertices; // ascending
};

BlockDecomposition cut_vertices_and_blocks(const Graph& g);

bool is_even(const Graph& g);
std::vector<Vertex> odd_vertices(const Graph& g);
bool is_forest(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Closed walk using every edge of the component containing `start` exactly
/// once. A start vertex without edges yields the one-vertex walk.
/// Throws Error(NotEven) if that component has an odd-degree vertex.
Walk eulerian_circuit(const Graph& g, Vertex start);

/// Edge set of a cycle through both edges, found as two internally
/// vertex-disjoint paths between virtual midpoints of e1 and e2.
/// Throws Error(NoSuchCycle) when no such cycle exists (the graph is not
/// 2-connected around them) and Error(Precondition) when e1 == e2.
EdgeSet cycle_through_two_edges(const Graph& g, EdgeId e1, EdgeId e2);

/// Lowest (center, leaves) induced claw, if any.
std::optional<Claw> find_claw(const Graph& g);

/// Shortest path from `from` to `to` using only edges with `allowed[e]`.
/// Lowest-index BFS parents; nullopt if unreachable.
std::optional<Walk> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed);

/// Marks the allowed edges that lie on no cycle of the allowed subgraph.
std::vector<char> bridge_mask(const Graph& g, const std::vector<char>& allowed);

/// Any cycle in the subgraph of allowed edges, found by lowest-index DFS.
/// Returned as a closed walk.
std::optional<Walk> find_cycle(const Graph& g, const std::vector<char>& allowed);

/// Splits a closed trail into edge-disjoint cycles, each peeled at the first
/// vertex the trail revisits.
std::vector<Walk> split_circuit(const Walk& circuit);

}  // namespace cyclesmith

#endif  // CYCLESMITH_ALGORITHMS_HPP
