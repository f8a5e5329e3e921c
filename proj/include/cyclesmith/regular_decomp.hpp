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

#ifndef CYCLESMITH_REGULAR_DECOMP_HPP
#define CYCLESMITH_REGULAR_DECOMP_HPP

#include <cstdint>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"

namespace cyclesmith {

/// Bipartite multigraph built from Euler circuits: left copy v1 and right
/// copy v2 of every vertex, one edge u1 w2 per circuit step u -> w, and
/// (delta - deg v) / 2 slack edges v1 v2 that pad every vertex to delta / 2.
struct TransitionGraph {
  struct Arc {
    Vertex left;
    Vertex right;
    EdgeId edge;  // -1 for slack
  };
  int sides = 0;  // vertices per side
  std::vector<Arc> arcs;
};

/// Throws Error(NotEven) if some degree is odd.
TransitionGraph build_transition_graph(const Graph& g);

/// Decomposes an even graph into max_degree / 2 two-regular parts. Parts
/// that touch every vertex are flagged `spanning`. An edgeless graph gives
/// no parts. Throws Error(NotEven).
Decomposition even_to_two_regular(const Graph& g);

/// 2-factorization of a 2k-regular graph into k spanning parts.
/// Throws Error(NotRegularEven) unless every vertex has the same even degree.
Decomposition petersen_two_factorization(const Graph& g);

struct GirthBoundResult {
  Decomposition decomposition;  // Cycle parts
  int k = 0;                    // half the degree
  int girth = 0;
  std::int64_t bound_num = 0;   // k * n / girth, reduced
  std::int64_t bound_den = 1;

  bool within_bound() const {
    return static_cast<std::int64_t>(decomposition.size()) * bound_den <= bound_num;
  }
};

/// Splits each 2-factor of a 2k-regular graph (k >= 1) into its cycles; a
/// factor on n vertices has at most n / girth of them.
/// Throws Error(NotRegularEven).
GirthBoundResult girth_bound_decompose(const Graph& g);

}  // namespace cyclesmith

#endif  // CYCLESMITH_REGULAR_DECOMP_HPP
