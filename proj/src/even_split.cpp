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

#include "cyclesmith/even_split.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/odd_linkage.hpp"

namespace cyclesmith {
namespace {

EdgeSet edges_where(const std::vector<char>& mask, char value) {
  EdgeSet out;
  for (EdgeId e = 0; e < static_cast<EdgeId>(mask.size()); ++e) {
    if (mask[e] == value) out.push_back(e);
  }
  return out;
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::HasNoCycle: return "has_no_cycle";
    case Classification::TypeI: return "type_i";
    case Classification::TypeII: return "type_ii";
    case Classification::Unresolved: return "unresolved";
  }
  return "?";
}

Decomposition SplitCertificate::as_decomposition() const {
  Decomposition d;
  if (!even.empty()) d.parts.push_back(Part{PartKind::Even, even, false});
  for (EdgeId e : forest) d.parts.push_back(Part{PartKind::SingleEdge, {e}, false});
  return d;
}

SplitCertificate even_forest_split(const Graph& g) {
  const int m = g.size();
  const Components comps = connected_components(g);
  std::vector<char> in_h(m, 0);
  for (;;) {
    std::vector<char> in_f(m);
    for (EdgeId e = 0; e < m; ++e) in_f[e] = !in_h[e];
    if (auto cycle = find_cycle(g, in_f)) {
      for (EdgeId e : cycle->edges) in_h[e] = 1;
      continue;
    }
    // G - H is a forest. Look for a component where it is a spanning tree
    // even though H has edges there.
    const EdgeSet forest = edges_where(in_h, 0);
    const Components fc = edge_components(g, forest);
    std::vector<int> f_label(comps.count, -1);
    std::vector<char> spans(comps.count, 1);
    for (Vertex v = 0; v < g.order(); ++v) {
      int& label = f_label[comps.of_vertex[v]];
      if (label < 0) label = fc.of_vertex[v];
      if (label != fc.of_vertex[v]) spans[comps.of_vertex[v]] = 0;
    }
    EdgeId pick = -1;
    for (EdgeId e = 0; e < m && pick < 0; ++e) {
      if (in_h[e] && spans[comps.of_vertex[g.edge(e).u]]) pick = e;
    }
    if (pick < 0) break;
    // The tree path joins the ends of `pick` and closes a cycle with it:
    // H + path - pick is still even and strictly larger.
    const Walk path = *shortest_path(g, g.edge(pick).u, g.edge(pick).v, in_f);
    for (EdgeId e : path.edges) in_h[e] = 1;
    in_h[pick] = 0;
  }

  SplitCertificate cert;
  cert.even = edges_where(in_h, 1);
  cert.forest = edges_where(in_h, 0);
  if (cert.even.empty() && is_forest(g)) {
    cert.classification = Classification::HasNoCycle;
  } else if (static_cast<int>(cert.forest.size()) <= g.order() - 3) {
    cert.classification = Classification::TypeI;
  } else {
    cert.classification = Classification::Unresolved;
  }
  return cert;
}

std::optional<K4Witness> check_k4_with_trees(const Graph& g, std::array<Vertex, 4> vertices) {
  std::sort(vertices.begin(), vertices.end());
  std::vector<char> in_k4(g.size(), 0);
  for (int i = 0; i < 4; ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return std::nullopt;
    for (int j = i + 1; j < 4; ++j) {
      const auto e = g.edge_between(vertices[i], vertices[j]);
      if (!e) return std::nullopt;
      in_k4[*e] = 1;
    }
  }
  const EdgeSet rest = edges_where(in_k4, 0);
  const Components c = edge_components(g, rest);
  if (c.count != 4 || static_cast<int>(rest.size()) != g.order() - 4) return std::nullopt;
  K4Witness w;
  w.vertices = vertices;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (c.of_vertex[vertices[i]] == c.of_vertex[vertices[j]]) return std::nullopt;
    }
  }
  for (EdgeId e : rest) {
    const int comp = c.of_vertex[g.edge(e).u];
    for (int i = 0; i < 4; ++i) {
      if (c.of_vertex[vertices[i]] == comp) w.trees[i].push_back(e);
    }
  }
  return w;
}

SplitCertificate classify_n3(const Graph& g, const ExactLimits& limits) {
  if (!is_connected(g)) throw Error(ErrorKind::Precondition, "classification needs a connected graph");
  if (is_forest(g)) throw Error(ErrorKind::Precondition, "classification needs a graph with a cycle");

  SplitCertificate cert;
  cert.forest = min_t_join(g, limits);
  cert.even = complement_edges(g, cert.forest);
  // A minimum T-join has no cycle, so it is a forest with n - |F| components.
  if (static_cast<int>(cert.forest.size()) <= g.order() - 3) {
    cert.classification = Classification::TypeI;
    return cert;
  }

  std::vector<char> touched(g.order(), 0);
  for (EdgeId e : cert.even) {
    touched[g.edge(e).u] = 1;
    touched[g.edge(e).v] = 1;
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (touched[v]) core.push_back(v);
  }
  std::optional<K4Witness> w;
  if (core.size() == 4) w = check_k4_with_trees(g, {core[0], core[1], core[2], core[3]});
  if (!w) throw std::logic_error("minimum T-join leaves n-2 forest edges on a graph that is not K4 with trees");
  cert.classification = Classification::TypeII;
  cert.k4 = std::move(w);
  return cert;
}

}  // namespace cyclesmith
