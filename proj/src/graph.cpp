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

#include "cyclesmith/graph.hpp"

#include <algorithm>
#include <string>

#include "cyclesmith/error.hpp"

namespace cyclesmith {

Graph::Graph(int n) : n_(n), adjacency_(n) {
  if (n < 0) throw Error(ErrorKind::InvalidGraph, "negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range: " + std::to_string(e.u) +
                                               " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(e.u));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
  for (Vertex v = 0; v < n_; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    for (std::size_t i = 1; i < adj.size(); ++i) {
      if (adj[i].to == adj[i - 1].to) {
        throw Error(ErrorKind::InvalidGraph, "parallel edge " + std::to_string(v) + " " +
                                                 std::to_string(adj[i].to));
      }
    }
    max_degree_ = std::max(max_degree_, static_cast<int>(adj.size()));
  }
}

std::optional<EdgeId> Graph::edge_between(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Incidence& a, Vertex x) { return a.to < x; });
  if (it == adj.end() || it->to != v) return std::nullopt;
  return it->edge;
}

Walk walk_from_vertices(const Graph& g, std::span<const Vertex> vertices) {
  Walk w;
  w.vertices.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto e = g.edge_between(vertices[i - 1], vertices[i]);
    if (!e) {
      throw Error(ErrorKind::InvalidGraph, "walk steps along a non-edge " +
                                               std::to_string(vertices[i - 1]) + " " +
                                               std::to_string(vertices[i]));
    }
    w.edges.push_back(*e);
  }
  return w;
}

EdgeSet Subgraph::lift(std::span<const EdgeId> local) const {
  EdgeSet out;
  out.reserve(local.size());
  for (EdgeId e : local) out.push_back(parent_edge[e]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  Subgraph s;
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (EdgeId e : edges) {
    local.push_back(g.edge(e));
    s.parent_edge.push_back(e);
  }
  s.graph = Graph(g.order(), local);
  s.parent_vertex.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.parent_vertex[v] = v;
  return s;
}

Subgraph compact_subgraph(const Graph& g, std::span<const EdgeId> edges) {
  Subgraph s;
  std::vector<int> local_id(g.order(), -1);
  for (EdgeId e : edges) {
    local_id[g.edge(e).u] = 0;
    local_id[g.edge(e).v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (local_id[v] == 0) {
      local_id[v] = static_cast<int>(s.parent_vertex.size());
      s.parent_vertex.push_back(v);
    }
  }
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (EdgeId e : edges) {
    local.push_back({local_id[g.edge(e).u], local_id[g.edge(e).v]});
    s.parent_edge.push_back(e);
  }
  s.graph = Graph(static_cast<int>(s.parent_vertex.size()), local);
  return s;
}

EdgeSet complement_edges(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<char> in(g.size(), 0);
  for (EdgeId e : edges) in[e] = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!in[e]) out.push_back(e);
  }
  return out;
}

}  // namespace cyclesmith
