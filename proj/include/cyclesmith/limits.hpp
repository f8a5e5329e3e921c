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

#ifndef CYCLESMITH_LIMITS_HPP
#define CYCLESMITH_LIMITS_HPP

#include <cstddef>
#include <string_view>

namespace cyclesmith {

/// Size thresholds for every exponential-time routine. Above a threshold the
/// routine either falls back to a heuristic (and says so in its result) or
/// throws Error(LimitExceeded / TooManyOddVertices).
struct ExactLimits {
  /// min_linkage_exact: largest odd-vertex set handled by the subset DP.
  int max_odd_vertices = 18;
  /// even_cycle_cover: largest component (in edges) solved to optimality.
  int max_cover_edges = 28;
  /// Oracles refuse graphs with more edges than this...
  int oracle_max_edges = 20;
  /// ...or with more enumerated candidate subgraphs than this.
  std::size_t oracle_max_candidates = 100000;
  /// decompose_greedy searches for a true longest cycle up to this order.
  int longest_cycle_max_order = 10;
  /// Optimal pairings inspected when looking for a linkage through a
  /// maximum-degree vertex.
  std::size_t max_optimal_pairings = 4096;

  /// Comma-separated key=value overrides, e.g. "linkage=20,cover=24".
  /// Keys: linkage, cover, oracle_edges, oracle_candidates, longest_cycle,
  /// pairings. Throws Error(InvalidParams) on unknown keys or bad numbers.
  static ExactLimits parse(std::string_view spec, ExactLimits base);
  static ExactLimits parse(std::string_view spec) { return parse(spec, ExactLimits{}); }

  /// Defaults overridden by CYCLESMITH_EXACT_LIMITS when set.
  static ExactLimits from_env();
};

}  // namespace cyclesmith

#endif  // CYCLESMITH_LIMITS_HPP
