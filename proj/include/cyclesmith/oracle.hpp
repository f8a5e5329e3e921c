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

#ifndef CYCLESMITH_ORACLE_HPP
#define CYCLESMITH_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

// Exact minimum part counts on small graphs. These share no search code with
// the constructive algorithms so they can be used to check them.

enum class Metric {
  CE,   // fewest cycles and single edges partitioning E
  RE,   // fewest 2-regular subgraphs and single edges partitioning E
  GCE,  // fewest cycles and single edges covering E
};

std::string_view to_string(Metric m);
std::optional<Metric> metric_from_string(std::string_view name);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t candidates = 0;  // enumerated cycles (or 2-regular subgraphs)
  double seconds = 0;
};

struct OracleResult {
  Metric metric = Metric::CE;
  std::size_t value = 0;
  std::vector<Part> witness;  // exactly `value` parts
  SearchStats stats;
};

/// All throw Error(LimitExceeded) when the graph has more than
/// limits.oracle_max_edges edges or more than limits.oracle_max_candidates
/// candidate subgraphs; they never return an unproven value.
OracleResult exact_ce(const Graph& g, const ExactLimits& limits = {});
OracleResult exact_re(const Graph& g, const ExactLimits& limits = {});
OracleResult exact_gce(const Graph& g, const ExactLimits& limits = {});

OracleResult exact(const Graph& g, Metric metric, const ExactLimits& limits = {});

}  // namespace cyclesmith

#endif  // CYCLESMITH_ORACLE_HPP
