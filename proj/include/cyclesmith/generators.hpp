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

#ifndef CYCLESMITH_GENERATORS_HPP
#define CYCLESMITH_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cyclesmith/graph.hpp"

namespace cyclesmith {

// Named graph families. Invalid parameters throw Error(InvalidParams).

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();
/// Vertex i joined to i +- j (mod n) for every jump j.
Graph circulant_graph(int n, const std::vector<int>& jumps);

/// K4 on vertices 0..3 with a tree of sizes[i] extra vertices hanging from
/// vertex i. Tree shapes are random recursive trees drawn from `seed`.
Graph k4_with_trees(const std::array<int, 4>& sizes, std::uint64_t seed = 0);

/// Uniform simple k-regular graph from the pairing model, retrying until the
/// pairing has no loop or parallel edge. Requires n * k even and k < n.
Graph random_regular(int n, int k, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Line graph: one vertex per edge of g, adjacent when the edges share an
/// endpoint. Line graphs are claw-free.
Graph line_graph(const Graph& g);

}  // namespace cyclesmith

#endif  // CYCLESMITH_GENERATORS_HPP
