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

// Brute-force reference implementations used only by the tests. None of them
// call into the algorithm modules; they rely on Graph for storage only.

#ifndef CYCLESMITH_TESTS_SUPPORT_ORACLES_HPP
#define CYCLESMITH_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"

namespace testing {

using cyclesmith::Edge;
using cyclesmith::EdgeId;
using cyclesmith::Graph;
using cyclesmith::Part;
using cyclesmith::Vertex;

/// Graph6 written straight from the format description: N(n) then the upper
/// triangle column by column, six bits per byte, offset 63.
std::string encode_graph6(int n, const std::vector<Edge>& edges);

/// Every labeled graph on n vertices (connected or not), edges in
/// lexicographic order.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

int count_components(int n, const std::vector<Edge>& edges);
bool connected(const Graph& g);
bool acyclic(const Graph& g);

/// Scans all 4-subsets for a K4 whose removal leaves four trees, one
/// through each K4 vertex, covering all vertices.
bool k4_with_trees(const Graph& g);

/// Scans every vertex and every triple of its neighbours.
bool has_claw(const Graph& g);

/// Shortest cycle by testing every edge subset that forms a connected
/// 2-regular graph. Small graphs only (m <= 20). -1 for forests.
int girth_by_subsets(const Graph& g);

/// Edges whose removal disconnects their endpoints.
std::vector<char> bridges_by_removal(const Graph& g);

/// Minimum total length over all systems of paths pairing up the odd
/// vertices (every pairing, every simple path per pair). Paths may share
/// edges. -1 when no system exists.
int min_path_system(const Graph& g);

/// Same minimum restricted to pairwise edge-disjoint path systems.
int min_edge_disjoint_path_system(const Graph& g);

/// Multiset check: every edge id appears in exactly one part.
bool naive_is_partition(const Graph& g, const std::vector<Part>& parts);
/// Every edge id appears in at least one part.
bool naive_is_covering(const Graph& g, const std::vector<Part>& parts);
/// Degree / connectivity check of one part against its kind.
bool naive_part_ok(const Graph& g, const Part& p);

/// Minimum number of cycles and single edges partitioning E, by trying
/// every way to pull one cycle containing the lowest remaining edge.
int brute_ce(const Graph& g);

}  // namespace testing

#endif  // CYCLESMITH_TESTS_SUPPORT_ORACLES_HPP
