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

#include "cyclesmith/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclesmith {

std::string_view to_string(PartKind kind) {
  switch (kind) {
    case PartKind::Cycle: return "Cycle";
    case PartKind::SingleEdge: return "SingleEdge";
    case PartKind::TwoRegular: return "TwoRegular";
    case PartKind::Even: return "Even";
  }
  return "Unknown";
}

std::optional<PartKind> part_kind_from_string(std::string_view name) {
  for (PartKind k : {PartKind::Cycle, PartKind::SingleEdge, PartKind::TwoRegular, PartKind::Even}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<int> part_of_edge(const Graph& g, const std::vector<Part>& parts) {
  std::vector<int> out(g.size(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (EdgeId e : parts[p].edges) {
      if (e >= 0 && e < g.size()) out[e] = static_cast<int>(p);
    }
  }
  return out;
}

std::string_view to_string(Rule rule) {
  switch (rule) {
    case Rule::InvalidEdgeId: return "InvalidEdgeId";
    case Rule::EmptyPart: return "EmptyPart";
    case Rule::DuplicateInPart: return "DuplicateInPart";
    case Rule::KindNotAllowed: return "KindNotAllowed";
    case Rule::NotCycle: return "NotCycle";
    case Rule::NotSingleEdge: return "NotSingleEdge";
    case Rule::NotTwoRegular: return "NotTwoRegular";
    case Rule::NotEven: return "NotEven";
    case Rule::EdgeRepeated: return "EdgeRepeated";
    case Rule::EdgeUncovered: return "EdgeUncovered";
  }
  return "Unknown";
}

std::string Verdict::describe() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << "part " << v.part << ": " << to_string(v.rule) << ": " << v.detail << '\n';
  }
  return out.str();
}

namespace {

std::string edge_name(const Graph& g, EdgeId e) {
  return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

// Number of connected pieces formed by `edges`, counting only touched vertices.
int touched_components(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<Vertex> verts;
  for (EdgeId e : edges) {
    verts.push_back(g.edge(e).u);
    verts.push_back(g.edge(e).v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = static_cast<int>(verts.size());
  for (EdgeId e : edges) {
    const int a = find(index(g.edge(e).u)), b = find(index(g.edge(e).v));
    if (a != b) {
      parent[a] = b;
      --pieces;
    }
  }
  return pieces;
}

std::vector<Violation> check_parts(const Graph& g, const std::vector<Part>& parts,
                                   PartKindSet allowed, std::vector<int>& uses) {
  std::vector<Violation> out;
  uses.assign(g.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const int index = static_cast<int>(p);
    if (!allowed.contains(parts[p].kind)) {
      out.push_back({index, Rule::KindNotAllowed, std::string(to_string(parts[p].kind))});
    }
    auto part_violations = check_part(g, parts[p], index);
    out.insert(out.end(), part_violations.begin(), part_violations.end());
    std::vector<EdgeId> sorted = parts[p].edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (EdgeId e : sorted) {
      if (e >= 0 && e < g.size()) ++uses[e];
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> check_part(const Graph& g, const Part& part, int index) {
  std::vector<Violation> out;
  if (part.edges.empty()) {
    out.push_back({index, Rule::EmptyPart, "part has no edges"});
    return out;
  }
  std::vector<EdgeId> edges;
  for (EdgeId e : part.edges) {
    if (e < 0 || e >= g.size()) {
      out.push_back({index, Rule::InvalidEdgeId, "edge id " + std::to_string(e)});
    } else {
      edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      out.push_back({index, Rule::DuplicateInPart, "edge " + edge_name(g, edges[i])});
    }
  }
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (!out.empty()) return out;

  std::vector<std::pair<Vertex, int>> degree;  // (vertex, degree within part)
  {
    std::vector<Vertex> ends;
    for (EdgeId e : edges) {
      ends.push_back(g.edge(e).u);
      ends.push_back(g.edge(e).v);
    }
    std::sort(ends.begin(), ends.end());
    for (Vertex v : ends) {
      if (degree.empty() || degree.back().first != v) degree.emplace_back(v, 0);
      ++degree.back().second;
    }
  }
  auto first_bad = [&](auto&& pred) -> std::optional<std::pair<Vertex, int>> {
    for (const auto& vd : degree) {
      if (pred(vd.second)) return vd;
    }
    return std::nullopt;
  };
  auto degree_detail = [](const std::pair<Vertex, int>& vd) {
    return "vertex " + std::to_string(vd.first) + " has degree " + std::to_string(vd.second);
  };

  switch (part.kind) {
    case PartKind::SingleEdge:
      if (edges.size() != 1) {
        out.push_back({index, Rule::NotSingleEdge, std::to_string(edges.size()) + " edges"});
      }
      break;
    case PartKind::Cycle: {
      if (auto bad = first_bad([](int d) { return d != 2; })) {
        out.push_back({index, Rule::NotCycle, degree_detail(*bad)});
      } else if (touched_components(g, edges) != 1) {
        out.push_back({index, Rule::NotCycle, "edges form more than one cycle"});
      }
      break;
    }
    case PartKind::TwoRegular:
      if (auto bad = first_bad([](int d) { return d != 2; })) {
        out.push_back({index, Rule::NotTwoRegular, degree_detail(*bad)});
      }
      break;
    case PartKind::Even:
      if (auto bad = first_bad([](int d) { return d % 2 != 0; })) {
        out.push_back({index, Rule::NotEven, degree_detail(*bad)});
      }
      break;
  }
  return out;
}

Verdict verify_decomposition(const Graph& g, const Decomposition& d, PartKindSet allowed) {
  std::vector<int> uses;
  Verdict verdict{check_parts(g, d.parts, allowed, uses)};
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (uses[e] == 0) {
      verdict.violations.push_back({-1, Rule::EdgeUncovered, "edge " + edge_name(g, e)});
    } else if (uses[e] > 1) {
      verdict.violations.push_back({-1, Rule::EdgeRepeated, "edge " + edge_name(g, e) + " in " +
                                                                std::to_string(uses[e]) +
                                                                " parts"});
    }
  }
  return verdict;
}

Verdict verify_cover(const Graph& g, const Cover& c, PartKindSet allowed) {
  std::vector<int> uses;
  Verdict verdict{check_parts(g, c.parts, allowed, uses)};
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (uses[e] == 0) {
      verdict.violations.push_back({-1, Rule::EdgeUncovered, "edge " + edge_name(g, e)});
    }
  }
  return verdict;
}

}  // namespace cyclesmith
