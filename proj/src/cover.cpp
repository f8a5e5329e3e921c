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

#include "cyclesmith/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/even_split.hpp"

namespace cyclesmith {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxEnumeratedCycles = std::size_t{1} << 20;

Mask bit(EdgeId e) { return Mask{1} << e; }

EdgeSet mask_edges(Mask m) {
  EdgeSet out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Every cycle of a small graph as an edge mask; each cycle once, found from
// its lowest vertex with the second vertex below the last. Returns false if
// there are more than `cap`.
bool enumerate_cycles(const Graph& g, std::size_t cap, std::vector<Mask>& out) {
  const int n = g.order();
  std::vector<char> on(n, 0);
  Vertex start = 0;
  Vertex second = -1;
  bool overflow = false;
  std::function<void(Vertex, Mask, int)> dfs = [&](Vertex v, Mask used, int len) {
    for (const Incidence& inc : g.incident(v)) {
      if (overflow) return;
      if (inc.to == start) {
        if (len >= 2 && second < v) {
          if (out.size() == cap) {
            overflow = true;
            return;
          }
          out.push_back(used | bit(inc.edge));
        }
        continue;
      }
      if (inc.to < start || on[inc.to]) continue;
      if (len == 0) second = inc.to;
      on[inc.to] = 1;
      dfs(inc.to, used | bit(inc.edge), len + 1);
      on[inc.to] = 0;
    }
  };
  for (start = 0; start < n && !overflow; ++start) {
    on[start] = 1;
    dfs(start, 0, 0);
    on[start] = 0;
  }
  return !overflow;
}

// Minimum number of cycles covering a connected even graph with at most 63
// edges, by iterative deepening over the enumerated cycles.
class MinCycleCover {
 public:
  MinCycleCover(const Graph& g, std::vector<Mask> cycles) : g_(g), cycles_(std::move(cycles)) {
    all_ = g.size() == 64 ? ~Mask{0} : bit(g.size()) - 1;
    through_.resize(g.size());
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
      for (EdgeId e : mask_edges(cycles_[c])) through_[e].push_back(static_cast<int>(c));
    }
    at_vertex_.assign(g.order(), 0);
    for (EdgeId e = 0; e < g.size(); ++e) {
      at_vertex_[g.edge(e).u] |= bit(e);
      at_vertex_[g.edge(e).v] |= bit(e);
    }
  }

  std::vector<Mask> solve() {
    std::vector<Mask> best = greedy();
    int lower = (g_.max_degree() + 1) / 2;
    bool single = std::any_of(cycles_.begin(), cycles_.end(), [&](Mask c) { return c == all_; });
    if (!single) lower = std::max(lower, 2);
    for (int r = lower; r < static_cast<int>(best.size()); ++r) {
      chosen_.clear();
      if (search(0, r)) return chosen_;
    }
    return best;
  }

 private:
  std::vector<Mask> greedy() const {
    std::vector<Mask> picked;
    Mask covered = 0;
    while (covered != all_) {
      Mask top = 0;
      int gain = -1;
      for (Mask c : cycles_) {
        const int gc = std::popcount(c & ~covered);
        if (gc > gain) {
          gain = gc;
          top = c;
        }
      }
      picked.push_back(top);
      covered |= top;
    }
    return picked;
  }

  bool search(Mask covered, int r) {
    if (covered == all_) return true;
    if (r == 0) return false;
    const Mask open = all_ & ~covered;
    if (std::popcount(open) > r * g_.order()) return false;
    Vertex pivot = -1;
    int pivot_deg = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int d = std::popcount(open & at_vertex_[v]);
      if (d > 2 * r) return false;
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    if (auto it = failed_.find(covered); it != failed_.end() && it->second >= r) return false;

    const EdgeId e = std::countr_zero(open & at_vertex_[pivot]);
    std::vector<std::pair<int, Mask>> options;
    for (int c : through_[e]) options.emplace_back(-std::popcount(cycles_[c] & open), cycles_[c]);
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [neg_gain, c] : options) {
      chosen_.push_back(c);
      if (search(covered | c, r - 1)) return true;
      chosen_.pop_back();
    }
    int& worst = failed_[covered];
    worst = std::max(worst, r);
    return false;
  }

  const Graph& g_;
  std::vector<Mask> cycles_;
  Mask all_ = 0;
  std::vector<std::vector<int>> through_;
  std::vector<Mask> at_vertex_;
  std::vector<Mask> chosen_;
  std::unordered_map<Mask, int> failed_;
};

std::vector<EdgeSet> euler_split_cover(const Graph& g) {
  std::vector<EdgeSet> out;
  std::vector<char> done(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (done[v] || g.degree(v) == 0) continue;
    const Walk circuit = eulerian_circuit(g, v);
    for (Vertex x : circuit.vertices) done[x] = 1;
    for (const Walk& c : split_circuit(circuit)) {
      EdgeSet e = c.edges;
      std::sort(e.begin(), e.end());
      out.push_back(std::move(e));
    }
  }
  return out;
}

class CoverBuilder {
 public:
  CoverBuilder(const Graph& g, const ExactLimits& limits) : g_(g), limits_(limits) {}

  CoverResult take() { return std::move(result_); }

  std::size_t cover_piece(const EdgeSet& edges) {
    if (edges.size() == 1) {
      add(PartKind::SingleEdge, edges);
      result_.blocks.push_back({edges, 2, 1, "bridge"});
      return 1;
    }
    const Subgraph s = compact_subgraph(g_, edges);
    const BlockDecomposition bd = cut_vertices_and_blocks(s.graph);
    if (bd.cut_vertices.empty()) return cover_block(s, edges);

    const Vertex c = bd.cut_vertices.front();
    EdgeSet away;
    for (EdgeId e = 0; e < s.graph.size(); ++e) {
      if (s.graph.edge(e).u != c && s.graph.edge(e).v != c) away.push_back(e);
    }
    const Components comps = edge_components(s.graph, away);
    const int first = comps.of_vertex[s.graph.incident(c).front().to];
    EdgeSet side1;
    EdgeSet side2;
    std::vector<char> in1(s.graph.order(), 0);
    std::vector<char> in2(s.graph.order(), 0);
    for (EdgeId e = 0; e < s.graph.size(); ++e) {
      const Edge& ed = s.graph.edge(e);
      const Vertex x = ed.u == c ? ed.v : ed.u;
      const bool one = comps.of_vertex[x] == first;
      (one ? side1 : side2).push_back(s.parent_edge[e]);
      (one ? in1 : in2)[ed.u] = 1;
      (one ? in1 : in2)[ed.v] = 1;
    }
    std::sort(side1.begin(), side1.end());
    std::sort(side2.begin(), side2.end());
    SplitRecord rec;
    rec.cut_vertex = s.parent_vertex[c];
    rec.order1 = static_cast<int>(std::count(in1.begin(), in1.end(), 1));
    rec.order2 = static_cast<int>(std::count(in2.begin(), in2.end(), 1));
    rec.count1 = cover_piece(side1);
    rec.count2 = cover_piece(side2);
    result_.splits.push_back(rec);
    return rec.count1 + rec.count2;
  }

 private:
  void add(PartKind kind, EdgeSet edges) { result_.cover.parts.push_back(Part{kind, std::move(edges), false}); }

  std::size_t cover_block(const Subgraph& s, const EdgeSet& parent_edges) {
    const Graph& b = s.graph;
    const std::size_t before = result_.cover.size();
    std::string method = "split";
    SplitCertificate cert;
    try {
      cert = classify_n3(b, limits_);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooManyOddVertices) throw;
      cert = even_forest_split(b);
      method = "split-heuristic";
      result_.bound_guaranteed = false;
    }

    if (cert.classification == Classification::TypeII) {
      // A 2-connected K4 with trees is K4 itself: two 4-cycles cover it.
      const auto [a, bb, c, d] = cert.k4->vertices;
      auto e = [&](Vertex x, Vertex y) { return *b.edge_between(x, y); };
      EdgeSet c1{e(a, bb), e(bb, c), e(c, d), e(a, d)};
      EdgeSet c2{e(a, c), e(bb, c), e(bb, d), e(a, d)};
      std::sort(c1.begin(), c1.end());
      std::sort(c2.begin(), c2.end());
      add(PartKind::Cycle, s.lift(c1));
      add(PartKind::Cycle, s.lift(c2));
      result_.blocks.push_back({parent_edges, b.order(), 2, "k4"});
      return 2;
    }

    for (std::size_t i = 0; i + 1 < cert.forest.size(); i += 2) {
      add(PartKind::Cycle, s.lift(cycle_through_two_edges(b, cert.forest[i], cert.forest[i + 1])));
    }
    if (cert.forest.size() % 2 == 1) add(PartKind::SingleEdge, s.lift({&cert.forest.back(), 1}));

    const Subgraph h = edge_subgraph(b, cert.even);
    const EvenCoverResult hc = even_cycle_cover(h.graph, limits_);
    if (!hc.minimum) result_.bound_guaranteed = false;
    for (const Part& p : hc.cover.parts) add(PartKind::Cycle, s.lift(h.lift(p.edges)));

    const std::size_t count = result_.cover.size() - before;
    result_.blocks.push_back({parent_edges, b.order(), count, method});
    return count;
  }

  const Graph& g_;
  const ExactLimits& limits_;
  CoverResult result_;
};

}  // namespace

CoverResult cover_cycles_edges(const Graph& g, const ExactLimits& limits) {
  std::vector<EdgeId> all(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) all[e] = e;
  const Components comps = edge_components(g, all);
  std::vector<EdgeSet> pieces(comps.count);
  for (EdgeId e : all) pieces[comps.of_vertex[g.edge(e).u]].push_back(e);
  CoverBuilder builder(g, limits);
  for (const EdgeSet& piece : pieces) {
    if (!piece.empty()) builder.cover_piece(piece);
  }
  return builder.take();
}

EvenCoverResult even_cycle_cover(const Graph& g, const ExactLimits& limits) {
  if (!is_even(g)) throw Error(ErrorKind::NotEven, "graph has odd-degree vertices");
  std::vector<EdgeId> all(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) all[e] = e;
  const Components comps = edge_components(g, all);
  std::vector<EdgeSet> pieces(comps.count);
  for (EdgeId e : all) pieces[comps.of_vertex[g.edge(e).u]].push_back(e);

  EvenCoverResult r;
  for (const EdgeSet& piece : pieces) {
    if (piece.empty()) continue;
    const Subgraph s = compact_subgraph(g, piece);
    const int m = s.graph.size();
    if (m == s.graph.order()) {  // connected and 2-regular: a single cycle
      r.cover.parts.push_back(Part{PartKind::Cycle, piece, false});
      continue;
    }
    std::vector<Mask> cycles;
    if (m <= limits.max_cover_edges && m <= 63 && enumerate_cycles(s.graph, kMaxEnumeratedCycles, cycles)) {
      for (Mask c : MinCycleCover(s.graph, std::move(cycles)).solve()) {
        r.cover.parts.push_back(Part{PartKind::Cycle, s.lift(mask_edges(c)), false});
      }
      continue;
    }
    r.minimum = false;
    for (EdgeSet& c : euler_split_cover(s.graph)) {
      r.cover.parts.push_back(Part{PartKind::Cycle, s.lift(c), false});
    }
  }
  return r;
}

}  // namespace cyclesmith
