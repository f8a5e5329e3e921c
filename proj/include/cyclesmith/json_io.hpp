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

#ifndef CYCLESMITH_JSON_IO_HPP
#define CYCLESMITH_JSON_IO_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclesmith/certificate.hpp"
#include "cyclesmith/corpus.hpp"
#include "cyclesmith/cover.hpp"
#include "cyclesmith/decomposer.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/even_split.hpp"
#include "cyclesmith/graph.hpp"
#include "cyclesmith/odd_linkage.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/verify.hpp"

namespace cyclesmith {

using Json = nlohmann::json;

/// A graph6 string when n <= 62, else {"n": n, "edges": [[u, v], ...]}.
Json graph_to_json(const Graph& g);
/// Accepts both forms. Throws Error(MalformedGraph6 / MalformedEdgeList).
Graph graph_from_json(const Json& j);

/// [[u, v], ...] in the order of the set.
Json edges_to_json(const Graph& g, const EdgeSet& edges);

/// {"graph": ..., "mode": "decomposition"|"cover", "parts": [{"kind", "edges", "spanning"?}]}
Json certificate_to_json(const Graph& g, const std::vector<Part>& parts, std::string_view mode);

struct ParsedCertificate {
  Graph graph;
  std::string mode;
  std::vector<Part> parts;
};

/// Edge pairs that are not edges of the graph map to id -1 so the verifier
/// reports them. Throws Error(InvalidParams) on a malformed document.
ParsedCertificate certificate_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json decompose_to_json(const Graph& g, const DecomposeResult& r);
Json cover_to_json(const Graph& g, const CoverResult& r);
Json split_to_json(const Graph& g, const SplitCertificate& s);
/// A list of vertex sequences.
Json linkage_to_json(const PathLinkage& l);
Json oracle_to_json(const Graph& g, const OracleResult& r);
Json corpus_to_json(const CorpusOptions& o, const CorpusReport& r);
Json claw_to_json(const Claw& c);

}  // namespace cyclesmith

#endif  // CYCLESMITH_JSON_IO_HPP
