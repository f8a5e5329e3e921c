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

#ifndef CYCLESMITH_GRAPH_HPP
#define CYCLESMITH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cyclesmith {

using Vertex = int;
using EdgeId = int;

/// Sorted list of edge ids of some parent graph.
using EdgeSet = std::vector<EdgeId>;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1 with stable edge ids 0..m-1.
///
/// Immutable once built. Incidence lists are sorted by neighbour so every
/// traversal in the library visits the lowest index first.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Edge ids follow the order of `edges`. Endpoints are normalized to u < v.
  /// Throws Error(InvalidGraph) on loops, parallel edges or bad endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const { return max_degree_; }

  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Alternating vertex/edge sequence v0 e1 v1 ... et vt.
struct Walk {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// Builds the walk through consecutive vertices of `vertices`. Throws
/// Error(InvalidGraph) if two consecutive vertices are not adjacent.
Walk walk_from_vertices(const Graph& g, std::span<const Vertex> vertices);

/// The graph spanned by a subset of the edges of a parent graph, together with
/// the maps back to the parent's ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> parent_vertex;  // indexed by subgraph vertex
  std::vector<EdgeId> parent_edge;    // indexed by subgraph edge

  EdgeSet lift(std::span<const EdgeId> local) const;
};

/// Keeps all n vertices; only the edges are filtered.
Subgraph edge_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Keeps only the vertices incident to `edges`, relabelled in ascending order.
Subgraph compact_subgraph(const Graph& g, std::span<const EdgeId> edges);

/// Complement of `edges` within 0..m-1.
EdgeSet complement_edges(const Graph& g, std::span<const EdgeId> edges);

}  // namespace cyclesmith

#endif  // CYCLESMITH_GRAPH_HPP
