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

#ifndef CYCLESMITH_VERIFY_HPP
#define CYCLESMITH_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"

namespace cyclesmith {

enum class Rule {
  InvalidEdgeId,
  EmptyPart,
  DuplicateInPart,
  KindNotAllowed,
  NotCycle,
  NotSingleEdge,
  NotTwoRegular,
  NotEven,
  EdgeRepeated,
  EdgeUncovered,
};

std::string_view to_string(Rule rule);

struct Violation {
  int part = -1;  // -1 for whole-certificate rules
  Rule rule = Rule::InvalidEdgeId;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
  /// One line per violation, for diagnostics.
  std::string describe() const;
};

// Kind invariants are recomputed from the edge sets alone; producer metadata
// (including the `spanning` flag) is never trusted.

/// Checks one part against its kind: Cycle is a single connected 2-regular
/// edge set, SingleEdge has exactly one edge, TwoRegular has every touched
/// vertex at degree 2, Even has every touched vertex at even degree.
std::vector<Violation> check_part(const Graph& g, const Part& part, int index);

Verdict verify_decomposition(const Graph& g, const Decomposition& d, PartKindSet allowed);
Verdict verify_cover(const Graph& g, const Cover& c, PartKindSet allowed);

}  // namespace cyclesmith

#endif  // CYCLESMITH_VERIFY_HPP
