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

#ifndef CYCLESMITH_ODD_LINKAGE_HPP
#define CYCLESMITH_ODD_LINKAGE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

/// A set of paths whose endpoints are exactly the odd-degree vertices, each
/// odd vertex ending exactly one path.
struct PathLinkage {
  std::vector<Walk> paths;

  std::size_t total_edges() const;
  /// Sorted union of the path edges (with repetitions removed).
  EdgeSet edge_union() const;
};

/// Totals recorded by the reduction routines: the starting total, then the
/// total after every rewrite that was applied.
struct RewriteLog {
  std::vector<std::size_t> totals;
};

/// Paths are simple, non-trivial walks in `g` and their endpoints are the odd
/// vertices of `g`, each used once. On failure `why` (if given) says which
/// condition broke.
bool is_linkage(const Graph& g, const PathLinkage& l, std::string* why = nullptr);
bool is_edge_disjoint(const Graph& g, const PathLinkage& l);
bool is_vertex_disjoint(const Graph& g, const PathLinkage& l);

/// Pairs consecutive odd vertices (ascending) inside each component and joins
/// each pair by a BFS path.
PathLinkage initial_pairing(const Graph& g);

/// While two paths share an edge, swaps their halves across that edge and
/// shortcuts repeated vertices. Each rewrite lowers the total length by at
/// least 2, so the loop terminates.
PathLinkage edge_disjoint_reduce(const Graph& g, PathLinkage l, RewriteLog* log = nullptr);

/// Makes the linkage vertex-disjoint by local rewrites around a shared vertex
/// w that is internal to one path. Each rewrite strictly lowers the total.
/// Throws NotClawFreeError when the neighbourhood of w forms an induced claw,
/// which is the only way no rewrite applies.
PathLinkage vertex_disjoint_reduce(const Graph& g, PathLinkage l, RewriteLog* log = nullptr);

/// A linkage of minimum total length, i.e. a minimum T-join for T = odd
/// vertices split into shortest paths. Among the optimal pairings it prefers
/// one in which some path passes through a maximum-degree vertex.
/// Throws Error(TooManyOddVertices) above limits.max_odd_vertices and
/// Error(Precondition) if some component has an odd number of odd vertices
/// (impossible for a valid graph).
PathLinkage min_linkage_exact(const Graph& g, const ExactLimits& limits = {});

/// Edge set of min_linkage_exact.
EdgeSet min_t_join(const Graph& g, const ExactLimits& limits = {});

}  // namespace cyclesmith

#endif  // CYCLESMITH_ODD_LINKAGE_HPP
