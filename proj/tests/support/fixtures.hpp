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

#ifndef CYCLESMITH_TESTS_SUPPORT_FIXTURES_HPP
#define CYCLESMITH_TESTS_SUPPORT_FIXTURES_HPP

#include "cyclesmith/graph.hpp"

namespace testing {

/// Triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline cyclesmith::Graph bowtie() { return cyclesmith::Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline cyclesmith::Graph k13() { return cyclesmith::Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline cyclesmith::EdgeId eid(const cyclesmith::Graph& g, int u, int v) { return *g.edge_between(u, v); }

}  // namespace testing

#endif  // CYCLESMITH_TESTS_SUPPORT_FIXTURES_HPP
