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

#include "cyclesmith/regular_decomp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

// Kuhn's augmenting-path matching restricted to live arcs. Returns the arc
// matched to each left vertex.
class Matcher {
 public:
  Matcher(const TransitionGraph& t, const std::vector<char>& alive) : t_(t), out_(t.sides) {
    for (std::size_t a = 0; a < t.arcs.size(); ++a) {
      if (alive[a]) out_[t.arcs[a].left].push_back(static_cast<int>(a));
    }
  }

  std::vector<int> perfect() {
    right_arc_.assign(t_.sides, -1);
    for (Vertex l = 0; l < t_.sides; ++l) {
      stamp_.assign(t_.sides, 0);
      if (!augment(l)) throw std::logic_error("regular bipartite multigraph without a perfect matching");
    }
    std::vector<int> left_arc(t_.sides, -1);
    for (Vertex r = 0; r < t_.sides; ++r) left_arc[t_.arcs[right_arc_[r]].left] = right_arc_[r];
    return left_arc;
  }

 private:
  bool augment(Vertex l) {
    for (int a : out_[l]) {
      const Vertex r = t_.arcs[a].right;
      if (stamp_[r]) continue;
      stamp_[r] = 1;
      if (right_arc_[r] < 0 || augment(t_.arcs[right_arc_[r]].left)) {
        right_arc_[r] = a;
        return true;
      }
    }
    return false;
  }

  const TransitionGraph& t_;
  std::vector<std::vector<int>> out_;
  std::vector<int> right_arc_;
  std::vector<char> stamp_;
};

bool touches_all(const Graph& g, const EdgeSet& edges) {
  std::vector<char> hit(g.order(), 0);
  for (EdgeId e : edges) {
    hit[g.edge(e).u] = 1;
    hit[g.edge(e).v] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void require_regular_even(const Graph& g) {
  const int d = g.order() > 0 ? g.degree(0) : 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) throw Error(ErrorKind::NotRegularEven, "graph is not regular");
  }
  if (d % 2 != 0) throw Error(ErrorKind::NotRegularEven, "degree " + std::to_string(d) + " is odd");
}

}  // namespace

TransitionGraph build_transition_graph(const Graph& g) {
  if (!is_even(g)) throw Error(ErrorKind::NotEven, "graph has odd-degree vertices");
  TransitionGraph t;
  t.sides = g.order();
  const int delta = g.max_degree();
  std::vector<char> done(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (done[v] || g.degree(v) == 0) continue;
    const Walk circuit = eulerian_circuit(g, v);
    for (std::size_t i = 0; i < circuit.edges.size(); ++i) {
      done[circuit.vertices[i]] = 1;
      t.arcs.push_back({circuit.vertices[i], circuit.vertices[i + 1], circuit.edges[i]});
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int s = 0; s < (delta - g.degree(v)) / 2; ++s) t.arcs.push_back({v, v, -1});
  }
  return t;
}

Decomposition even_to_two_regular(const Graph& g) {
  const TransitionGraph t = build_transition_graph(g);
  const int rounds = g.max_degree() / 2;
  std::vector<char> alive(t.arcs.size(), 1);
  Decomposition d;
  for (int r = 0; r < rounds; ++r) {
    const std::vector<int> matched = Matcher(t, alive).perfect();
    Part part{PartKind::TwoRegular, {}, false};
    for (int a : matched) {
      alive[a] = 0;
      if (t.arcs[a].edge >= 0) part.edges.push_back(t.arcs[a].edge);
    }
    std::sort(part.edges.begin(), part.edges.end());
    part.spanning = touches_all(g, part.edges);
    d.parts.push_back(std::move(part));
  }
  return d;
}

Decomposition petersen_two_factorization(const Graph& g) {
  require_regular_even(g);
  return even_to_two_regular(g);
}

GirthBoundResult girth_bound_decompose(const Graph& g) {
  require_regular_even(g);
  if (g.order() == 0 || g.degree(0) == 0) throw Error(ErrorKind::NotRegularEven, "degree must be at least 2");
  GirthBoundResult r;
  r.k = g.degree(0) / 2;
  r.girth = *girth(g);
  for (const Part& factor : petersen_two_factorization(g).parts) {
    const Components c = edge_components(g, factor.edges);
    std::vector<EdgeSet> cycles(c.count);
    for (EdgeId e : factor.edges) cycles[c.of_vertex[g.edge(e).u]].push_back(e);
    for (EdgeSet& cyc : cycles) {
      if (!cyc.empty()) r.decomposition.parts.push_back(Part{PartKind::Cycle, std::move(cyc), false});
    }
  }
  const std::int64_t num = static_cast<std::int64_t>(r.k) * g.order();
  const std::int64_t div = std::gcd(num, static_cast<std::int64_t>(r.girth));
  r.bound_num = num / div;
  r.bound_den = r.girth / div;
  return r;
}

}  // namespace cyclesmith
