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

#ifndef CYCLESMITH_COVER_HPP
#define CYCLESMITH_COVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

/// One cut-vertex split G = G1 + G2 made by the cover recursion, with the
/// part counts of both sides. Orders count vertices of each side including
/// the cut vertex.
struct SplitRecord {
  Vertex cut_vertex = -1;
  int order1 = 0;
  int order2 = 0;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
};

/// How a 2-connected piece (or a bridge) was covered.
struct BlockRecord {
  EdgeSet edges;
  int order = 0;
  std::size_t count = 0;
  std::string method;  // "bridge", "k4", "split" or "split-heuristic"
};

struct CoverResult {
  Cover cover;
  std::vector<SplitRecord> splits;
  std::vector<BlockRecord> blocks;
  /// False when some piece exceeded an exact limit and a heuristic was used.
  bool bound_guaranteed = true;
};

/// Covers every edge by cycles and single edges: at most n - 2 parts for a
/// connected graph with a cycle and n - 1 for a tree. Splits at cut vertices
/// and covers each 2-connected block from an even/forest split.
CoverResult cover_cycles_edges(const Graph& g, const ExactLimits& limits = {});

struct EvenCoverResult {
  Cover cover;       // Cycle parts
  bool minimum = true;  // false when some component was above the exact limit
};

/// Covers an even graph by cycles, using the fewest cycles per component up
/// to limits.max_cover_edges edges and an Euler-circuit split beyond.
/// Throws Error(NotEven).
EvenCoverResult even_cycle_cover(const Graph& g, const ExactLimits& limits = {});

}  // namespace cyclesmith

#endif  // CYCLESMITH_COVER_HPP
