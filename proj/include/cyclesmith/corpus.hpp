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

#ifndef CYCLESMITH_CORPUS_HPP
#define CYCLESMITH_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclesmith/graph.hpp"
#include "cyclesmith/limits.hpp"

namespace cyclesmith {

/// Graph classes a sweep can be restricted to. Every class also requires the
/// graph to be connected.
enum class CorpusFilter { Connected, MaxDeg4, ClawFree, Even, NonTree, Tree };

/// Bound checks a sweep can run on each graph.
enum class TheoremCheck {
  MaxDeg4,    // decompose_maxdeg4: <= n-1 cycles and edges
  EvenDelta,  // even_to_two_regular: exactly max_degree/2 two-regular parts
  Eulerian,   // even_forest_split: forest part <= n-2 edges on cyclic graphs
  N3,         // classify_n3: type I has <= n-3 forest edges, type II is K4 with trees
  ClawFree,   // decompose_clawfree: <= n-1 two-regular parts and edges
  Cover,      // cover_cycles_edges: <= n-2 parts (n-1 for trees)
  Fan,        // even_cycle_cover: <= floor((n-1)/2) cycles
};

std::string_view to_string(CorpusFilter f);
std::optional<CorpusFilter> corpus_filter_from_string(std::string_view name);
std::string_view to_string(TheoremCheck c);
std::optional<TheoremCheck> theorem_check_from_string(std::string_view name);

/// True if g is connected and belongs to the class.
bool passes_filter(const Graph& g, CorpusFilter filter);

/// Largest order swept exhaustively for the filter (8 for even graphs, which
/// are enumerated through their first n-1 vertices only, 7 otherwise).
int max_exhaustive_order(CorpusFilter filter);

/// Visits every labeled graph on n vertices that passes the filter, in
/// increasing edge-mask order, restricted to masks with mask % shards == shard.
/// Returns how many labeled graphs were generated before filtering: 2^(n
/// choose 2) in total over all shards, or 2^(n-1 choose 2) for the even filter.
std::uint64_t for_each_labeled_graph(int n, CorpusFilter filter, const std::function<void(const Graph&)>& visit,
                                     unsigned shard = 0, unsigned shards = 1);

struct CorpusRecord {
  std::string graph6;
  int order = 0;
  std::string method;
  std::size_t parts = 0;
  std::size_t bound = 0;
  bool ok = false;
  std::string detail;  // why the record failed, empty when ok
};

/// Runs one bound check on one graph. Exceptions become failed records.
CorpusRecord check_theorem(const Graph& g, TheoremCheck check, const ExactLimits& limits = {});

struct CorpusOptions {
  int min_n = 1;
  int max_n = 5;
  CorpusFilter filter = CorpusFilter::Connected;
  TheoremCheck check = TheoremCheck::MaxDeg4;
  /// 0 selects exhaustive mode when max_n allows it; otherwise this many
  /// random graphs per order are drawn (1000 when 0 and max_n is too large).
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool keep_records = false;
  ExactLimits limits;
};

struct CorpusReport {
  bool exhaustive = true;
  std::vector<CorpusRecord> records;   // all checked graphs if keep_records, sorted by graph6
  std::vector<CorpusRecord> failures;  // sorted by graph6
  std::vector<std::uint64_t> generated;  // per order, before filtering
  std::vector<std::uint64_t> checked;    // per order, after filtering
  double max_ratio = 0;  // largest parts / (n - 1)

  bool ok() const { return failures.empty(); }
  std::uint64_t total_checked() const;
};

/// Throws Error(InvalidParams) for bad option combinations.
CorpusReport run_corpus(const CorpusOptions& options);

}  // namespace cyclesmith

#endif  // CYCLESMITH_CORPUS_HPP
