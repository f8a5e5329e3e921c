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

#ifndef CYCLESMITH_EVEN_SPLIT_HPP
#define CYCLESMITH_EVEN_SPLIT_HPP

#include <array>
#include <optional>
#include <string_view>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

enum class Classification {
  HasNoCycle,  // the graph is a forest
  TypeI,       // the forest part has at most n-3 edges
  TypeII,      // K4 with a tree hanging from each of its vertices
  Unresolved,  // cyclic, |F| = n-2; even_forest_split does not look further
};

std::string_view to_string(Classification c);

/// The K4 vertices (ascending) and, for each, the edges of the tree attached
/// to it. Together the trees are exactly the edges outside the K4.
struct K4Witness {
  std::array<Vertex, 4> vertices{};
  std::array<EdgeSet, 4> trees;
};

/// E = H + F with H even and F a forest.
struct SplitCertificate {
  EdgeSet even;
  EdgeSet forest;
  Classification classification = Classification::HasNoCycle;
  std::optional<K4Witness> k4;

  /// One Even part (if H is non-empty) followed by one SingleEdge per forest edge.
  Decomposition as_decomposition() const;
};

/// Grows an even subgraph H until G - H is a forest that is not a spanning
/// tree of any component containing H edges. For a graph with a cycle this
/// gives |F| <= n - 2.
SplitCertificate even_forest_split(const Graph& g);

/// Decides whether a connected graph with a cycle has an even/forest split
/// with |F| <= n - 3 (TypeI) or is a K4 with trees hanging off it (TypeII).
/// F is a minimum T-join, so TypeI is certified whenever it exists.
/// Throws Error(Precondition) for disconnected graphs and forests and
/// Error(TooManyOddVertices) beyond the linkage limit.
SplitCertificate classify_n3(const Graph& g, const ExactLimits& limits = {});

/// Checks that `vertices` span a K4 in g and that g minus the K4 edges is a
/// forest of four trees, one through each K4 vertex. Fills the trees on success.
std::optional<K4Witness> check_k4_with_trees(const Graph& g, std::array<Vertex, 4> vertices);

}  // namespace cyclesmith

#endif  // CYCLESMITH_EVEN_SPLIT_HPP
