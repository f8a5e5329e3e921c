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

#ifndef CYCLESMITH_DECOMPOSER_HPP
#define CYCLESMITH_DECOMPOSER_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

enum class Method { MaxDegree4, ClawFree, EvenTwoRegular, Greedy };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view name);

struct DecomposeResult {
  Decomposition decomposition;
  Method method = Method::Greedy;
  /// True when the method's size bound (n - 1, or max_degree / 2 for even
  /// graphs) is guaranteed; false for greedy and for heuristic fallbacks.
  bool bound_guaranteed = false;
};

/// Observations of the max-degree-4 loop: for each recursive call, the pair
/// (number of cycles k, vertex count of the last cycle) at every iteration.
/// The pairs of one call increase strictly in lexicographic order.
struct MaxDeg4Trace {
  std::vector<std::vector<std::pair<int, int>>> calls;
};

/// Edge-disjoint cycles C1..Ck in which every Ci (i >= 2) shares at least one
/// vertex with C1..Ci-1. Returns false (with a reason) otherwise.
bool is_cycle_sequence(const Graph& g, const std::vector<Walk>& cycles, std::string* why = nullptr);

/// At most n - 1 cycles and single edges for graphs with max degree <= 4.
/// Throws Error(DegreeTooHigh) otherwise.
Decomposition decompose_maxdeg4(const Graph& g, MaxDeg4Trace* trace = nullptr);

/// At most n - 1 two-regular parts and single edges for claw-free graphs:
/// a vertex-disjoint odd-vertex linkage as single edges plus a 2-regular
/// decomposition of the rest. Throws NotClawFreeError with a claw witness.
DecomposeResult decompose_clawfree(const Graph& g, const ExactLimits& limits = {});

/// Repeatedly removes a longest cycle (exact up to limits.longest_cycle_max_order
/// vertices, DFS back-edge heuristic beyond), then emits the rest as single
/// edges. No size guarantee.
Decomposition decompose_greedy(const Graph& g, const ExactLimits& limits = {});

/// even -> 2-regular parts, max degree <= 4 -> max-degree-4 method,
/// claw-free -> claw-free method, otherwise greedy.
DecomposeResult decompose_auto(const Graph& g, const ExactLimits& limits = {});

/// Runs one named method; Error/NotClawFreeError propagate when the graph
/// does not meet the method's precondition.
DecomposeResult decompose_with(const Graph& g, Method method, const ExactLimits& limits = {});

}  // namespace cyclesmith

#endif  // CYCLESMITH_DECOMPOSER_HPP
