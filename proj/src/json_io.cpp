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

#include "cyclesmith/json_io.hpp"

#include <algorithm>
#include <string>

#include "cyclesmith/error.hpp"
#include "cyclesmith/graph_io.hpp"

namespace cyclesmith {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidParams, "certificate: " + what); }

std::pair<Vertex, Vertex> read_pair(const Json& p) {
  if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
    bad("edge must be a [u, v] pair");
  }
  return {p[0].get<Vertex>(), p[1].get<Vertex>()};
}

}  // namespace

Json graph_to_json(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return write_graph6(g);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (j.is_string()) return parse_graph6(j.get<std::string>());
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
      !j["edges"].is_array()) {
    throw Error(ErrorKind::MalformedEdgeList, "graph must be a graph6 string or {\"n\", \"edges\"}");
  }
  std::vector<Edge> edges;
  for (const Json& p : j["edges"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw Error(ErrorKind::MalformedEdgeList, "edge must be a [u, v] pair");
    }
    edges.push_back({p[0].get<Vertex>(), p[1].get<Vertex>()});
  }
  try {
    return Graph(j["n"].get<int>(), edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedEdgeList, e.what());
  }
}

Json edges_to_json(const Graph& g, const EdgeSet& edges) {
  Json out = Json::array();
  for (EdgeId e : edges) out.push_back({g.edge(e).u, g.edge(e).v});
  return out;
}

Json certificate_to_json(const Graph& g, const std::vector<Part>& parts, std::string_view mode) {
  Json jp = Json::array();
  for (const Part& p : parts) {
    Json part{{"kind", std::string(to_string(p.kind))}, {"edges", edges_to_json(g, p.edges)}};
    if (p.kind == PartKind::TwoRegular) part["spanning"] = p.spanning;
    jp.push_back(std::move(part));
  }
  return {{"graph", graph_to_json(g)}, {"mode", std::string(mode)}, {"parts", jp}};
}

ParsedCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("document must be an object");
  if (!j.contains("graph")) bad("missing \"graph\"");
  ParsedCertificate c;
  c.graph = graph_from_json(j["graph"]);
  c.mode = j.value("mode", std::string("decomposition"));
  if (c.mode != "decomposition" && c.mode != "cover") bad("mode must be decomposition or cover");
  if (!j.contains("parts") || !j["parts"].is_array()) bad("missing \"parts\" array");
  for (const Json& jp : j["parts"]) {
    if (!jp.is_object() || !jp.contains("kind") || !jp["kind"].is_string()) bad("part needs a \"kind\"");
    const auto kind = part_kind_from_string(jp["kind"].get<std::string>());
    if (!kind) bad("unknown part kind " + jp["kind"].get<std::string>());
    Part p{*kind, {}, jp.value("spanning", false)};
    if (!jp.contains("edges") || !jp["edges"].is_array()) bad("part needs an \"edges\" array");
    for (const Json& pair : jp["edges"]) {
      const auto [u, v] = read_pair(pair);
      const bool in_range = u >= 0 && v >= 0 && u < c.graph.order() && v < c.graph.order();
      const auto e = in_range ? c.graph.edge_between(u, v) : std::nullopt;
      p.edges.push_back(e ? *e : -1);
    }
    std::sort(p.edges.begin(), p.edges.end());
    c.parts.push_back(std::move(p));
  }
  return c;
}

Json verdict_to_json(const Verdict& v) {
  Json list = Json::array();
  for (const Violation& x : v.violations) {
    list.push_back({{"part", x.part}, {"rule", std::string(to_string(x.rule))}, {"detail", x.detail}});
  }
  return {{"ok", v.ok()}, {"violations", list}};
}

Json decompose_to_json(const Graph& g, const DecomposeResult& r) {
  Json j = certificate_to_json(g, r.decomposition.parts, "decomposition");
  j["method"] = std::string(to_string(r.method));
  j["bound_guaranteed"] = r.bound_guaranteed;
  return j;
}

Json cover_to_json(const Graph& g, const CoverResult& r) {
  Json j = certificate_to_json(g, r.cover.parts, "cover");
  j["bound_guaranteed"] = r.bound_guaranteed;
  Json splits = Json::array();
  for (const SplitRecord& s : r.splits) {
    splits.push_back({{"cut_vertex", s.cut_vertex},
                      {"order1", s.order1},
                      {"order2", s.order2},
                      {"count1", s.count1},
                      {"count2", s.count2}});
  }
  Json blocks = Json::array();
  for (const BlockRecord& b : r.blocks) {
    blocks.push_back({{"edges", edges_to_json(g, b.edges)}, {"order", b.order}, {"count", b.count}, {"method", b.method}});
  }
  j["splits"] = splits;
  j["blocks"] = blocks;
  return j;
}

Json split_to_json(const Graph& g, const SplitCertificate& s) {
  Json j = certificate_to_json(g, s.as_decomposition().parts, "decomposition");
  j["classification"] = std::string(to_string(s.classification));
  j["even"] = edges_to_json(g, s.even);
  j["forest"] = edges_to_json(g, s.forest);
  if (s.k4) {
    Json trees = Json::array();
    for (const EdgeSet& t : s.k4->trees) trees.push_back(edges_to_json(g, t));
    j["k4"] = {{"vertices", s.k4->vertices}, {"trees", trees}};
  }
  return j;
}

Json linkage_to_json(const PathLinkage& l) {
  Json out = Json::array();
  for (const Walk& p : l.paths) out.push_back(p.vertices);
  return out;
}

Json oracle_to_json(const Graph& g, const OracleResult& r) {
  Json j = certificate_to_json(g, r.witness, r.metric == Metric::GCE ? "cover" : "decomposition");
  j["metric"] = std::string(to_string(r.metric));
  j["value"] = r.value;
  j["stats"] = {{"nodes", r.stats.nodes}, {"candidates", r.stats.candidates}, {"seconds", r.stats.seconds}};
  return j;
}

Json corpus_to_json(const CorpusOptions& o, const CorpusReport& r) {
  auto record = [](const CorpusRecord& c) {
    Json j{{"graph", c.graph6}, {"n", c.order}, {"method", c.method},
           {"parts", c.parts},  {"bound", c.bound}, {"ok", c.ok}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
  };
  Json per_order = Json::array();
  for (int n = o.min_n; n <= o.max_n; ++n) {
    per_order.push_back({{"n", n}, {"generated", r.generated[n]}, {"checked", r.checked[n]}});
  }
  Json failures = Json::array();
  for (const CorpusRecord& c : r.failures) failures.push_back(record(c));
  Json j{{"check", std::string(to_string(o.check))},
         {"filter", std::string(to_string(o.filter))},
         {"mode", r.exhaustive ? "exhaustive" : "random"},
         {"orders", per_order},
         {"checked", r.total_checked()},
         {"max_ratio", r.max_ratio},
         {"failures", failures},
         {"ok", r.ok()}};
  if (o.keep_records) {
    Json records = Json::array();
    for (const CorpusRecord& c : r.records) records.push_back(record(c));
    j["records"] = records;
  }
  return j;
}

Json claw_to_json(const Claw& c) { return {{"center", c.center}, {"leaves", c.leaves}}; }

}  // namespace cyclesmith
