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

#include "cyclesmith/decomposer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/odd_linkage.hpp"
#include "cyclesmith/regular_decomp.hpp"

namespace cyclesmith {
namespace {

EdgeSet sorted_edges(const Walk& w) {
  EdgeSet e = w.edges;
  std::sort(e.begin(), e.end());
  return e;
}

bool is_simple_cycle(const Walk& w) {
  if (!w.closed() || w.length() < 3) return false;
  std::vector<Vertex> v(w.vertices.begin(), w.vertices.end() - 1);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// One call of the max-degree-4 method handles a connected edge set: it grows
// a cycle sequence, rewrites its last cycle against the leftover edges while
// that makes progress, then emits the cycles and recurses on the leftover
// components.
class MaxDeg4Decomposer {
 public:
  MaxDeg4Decomposer(const Graph& g, MaxDeg4Trace* trace) : g_(g), trace_(trace) {}

  Decomposition take() { return std::move(out_); }

  void run(const EdgeSet& edges) {
    const int n = g_.order();
    std::vector<char> touched(n, 0);
    int touched_count = 0;
    for (EdgeId e : edges) {
      for (Vertex x : {g_.edge(e).u, g_.edge(e).v}) {
        if (!touched[x]) ++touched_count;
        touched[x] = 1;
      }
    }
    if (static_cast<int>(edges.size()) < touched_count) {
      for (EdgeId e : edges) out_.parts.push_back(Part{PartKind::SingleEdge, {e}, false});
      return;
    }

    left_.assign(g_.size(), 0);
    deg_.assign(n, 0);
    for (EdgeId e : edges) set_left(e, true);
    seq_.clear();
    extend();

    std::vector<std::pair<int, int>>* log = nullptr;
    if (trace_ != nullptr) {
      trace_->calls.emplace_back();
      log = &trace_->calls.back();
    }
    std::pair<int, int> last{0, 0};
    for (;;) {
      const std::pair<int, int> now{static_cast<int>(seq_.size()),
                                    static_cast<int>(seq_.back().length())};
      if (now <= last) throw std::logic_error("max-degree-4 loop made no progress");
      last = now;
      if (log != nullptr) log->push_back(now);
      if (!rewrite_last()) break;
      extend();
    }

    for (const Walk& c : seq_) out_.parts.push_back(Part{PartKind::Cycle, sorted_edges(c), false});
    EdgeSet rest;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (left_[e]) rest.push_back(e);
    }
    const Components comps = edge_components(g_, rest);
    std::vector<EdgeSet> pieces(comps.count);
    for (EdgeId e : rest) pieces[comps.of_vertex[g_.edge(e).u]].push_back(e);
    for (const EdgeSet& piece : pieces) {
      if (!piece.empty()) run(piece);
    }
  }

 private:
  void set_left(EdgeId e, bool on) {
    left_[e] = on ? 1 : 0;
    const int d = on ? 1 : -1;
    deg_[g_.edge(e).u] += d;
    deg_[g_.edge(e).v] += d;
  }

  void add_cycle(Walk c) {
    for (EdgeId e : c.edges) set_left(e, false);
    seq_.push_back(std::move(c));
  }

  std::vector<char> union_of(std::size_t count) const {
    std::vector<char> in(g_.order(), 0);
    for (std::size_t i = 0; i < count; ++i) {
      for (Vertex v : seq_[i].vertices) in[v] = 1;
    }
    return in;
  }

  // DFS path from `from` to `to` over allowed edges that enters `to` only
  // after the other neighbours are exhausted, so the path runs deep.
  std::vector<Vertex> deep_path(Vertex from, Vertex to, const std::vector<char>& allowed) const {
    std::vector<char> seen(g_.order(), 0);
    std::vector<std::pair<Vertex, std::size_t>> stack{{from, 0}};
    seen[from] = 1;
    seen[to] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto inc = g_.incident(v);
      bool pushed = false;
      while (next < inc.size() && !pushed) {
        const Incidence& i = inc[next++];
        if (allowed[i.edge] && !seen[i.to]) {
          seen[i.to] = 1;
          stack.push_back({i.to, 0});
          pushed = true;
        }
      }
      if (pushed) continue;
      if (auto e = g_.edge_between(v, to); e && allowed[*e]) {
        std::vector<Vertex> path;
        for (const auto& frame : stack) path.push_back(frame.first);
        path.push_back(to);
        return path;
      }
      stack.pop_back();
    }
    throw std::logic_error("deep_path: target unreachable");
  }

  // Appends cycles of the leftover through vertices of the sequence (any
  // vertex when the sequence is empty) until none exists.
  void extend() {
    for (;;) {
      const std::vector<char> in = union_of(seq_.size());
      const std::vector<char> bridge = bridge_mask(g_, left_);
      Vertex x = -1;
      Incidence first{-1, -1};
      for (Vertex v = 0; v < g_.order() && x < 0; ++v) {
        if ((!seq_.empty() && !in[v]) || deg_[v] < 2) continue;
        for (const Incidence& inc : g_.incident(v)) {
          if (left_[inc.edge] && !bridge[inc.edge]) {
            x = v;
            first = inc;
            break;
          }
        }
      }
      if (x < 0) return;
      left_[first.edge] = 0;
      const std::vector<Vertex> back = deep_path(first.to, x, left_);
      left_[first.edge] = 1;
      std::vector<Vertex> verts{x};
      verts.insert(verts.end(), back.begin(), back.end());
      add_cycle(walk_from_vertices(g_, verts));
    }
  }

  // Returns false when the sequence is final.
  bool rewrite_last() {
    const std::size_t k = seq_.size();
    std::vector<char> acc(g_.order(), 0);
    std::vector<char> prior;
    for (std::size_t i = 0; i < k; ++i) {
      if (i + 1 == k) prior = acc;
      int meets = 0;
      for (std::size_t j = 0; j + 1 < seq_[i].vertices.size(); ++j) meets += acc[seq_[i].vertices[j]];
      if (i >= 1 && meets >= 2) return false;
      for (Vertex v : seq_[i].vertices) acc[v] = 1;
    }
    EdgeSet rest;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (left_[e]) rest.push_back(e);
    }
    if (rest.empty()) return false;
    {
      const Components comps = edge_components(g_, rest);
      const int label = comps.of_vertex[g_.edge(rest[0]).u];
      for (EdgeId e : rest) {
        if (comps.of_vertex[g_.edge(e).u] != label) return false;
      }
    }

    // Lowest edge of the last cycle with both ends new to the sequence.
    const Walk& last = seq_.back();
    const std::size_t t = last.length();
    std::size_t j = t;
    for (std::size_t i = 0; i < t; ++i) {
      const Vertex a = last.vertices[i];
      const Vertex b = last.vertices[i + 1];
      if (prior[a] || prior[b]) continue;
      if (j == t || last.edges[i] < last.edges[j]) j = i;
    }
    if (j == t) throw std::logic_error("last cycle has no edge away from earlier cycles");
    const EdgeId uv = last.edges[j];
    // p1 runs around the cycle from one end of uv to the other without uv.
    std::vector<Vertex> verts;
    for (std::size_t s = 1; s <= t; ++s) verts.push_back(last.vertices[(j + s) % t]);
    const Vertex from = verts.front();
    const Vertex to = verts.back();
    if (deg_[from] == 0 || deg_[to] == 0) return false;
    const Walk p2 = *shortest_path(g_, to, from, left_);
    verts.insert(verts.end(), p2.vertices.begin() + 1, p2.vertices.end());
    const Walk w = walk_from_vertices(g_, verts);

    for (EdgeId e : p2.edges) set_left(e, false);
    set_left(uv, true);
    seq_.pop_back();
    if (is_simple_cycle(w)) {
      seq_.push_back(w);
      return true;
    }
    std::vector<Walk> pieces = split_circuit(w);
    std::vector<char> marked = prior;
    bool any = std::find(marked.begin(), marked.end(), 1) != marked.end();
    while (!pieces.empty()) {
      std::size_t pick = 0;
      if (any) {
        auto touches = [&](const Walk& c) {
          return std::any_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return marked[v] != 0; });
        };
        while (pick < pieces.size() && !touches(pieces[pick])) ++pick;
        if (pick == pieces.size()) throw std::logic_error("closed walk split into unattached cycles");
      }
      for (Vertex v : pieces[pick].vertices) marked[v] = 1;
      any = true;
      seq_.push_back(std::move(pieces[pick]));
      pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return true;
  }

  const Graph& g_;
  MaxDeg4Trace* trace_;
  Decomposition out_;
  std::vector<char> left_;
  std::vector<int> deg_;
  std::vector<Walk> seq_;
};

// Longest cycle among the allowed edges by exhaustive DFS from each start
// vertex through higher-numbered vertices only.
std::optional<Walk> longest_cycle_exact(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.order();
  std::vector<int> deg(n, 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (allowed[e]) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
  }
  std::vector<Vertex> best;
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  Vertex start = -1;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    for (const Incidence& inc : g.incident(v)) {
      if (!allowed[inc.edge]) continue;
      if (inc.to == start) {
        if (path.size() >= 3 && path.size() > best.size()) best = path;
        continue;
      }
      if (inc.to < start || on[inc.to] || deg[inc.to] < 2) continue;
      on[inc.to] = 1;
      path.push_back(inc.to);
      dfs(inc.to);
      path.pop_back();
      on[inc.to] = 0;
    }
  };
  for (start = 0; start < n; ++start) {
    if (deg[start] < 2) continue;
    int reachable = 0;
    for (Vertex v = start; v < n; ++v) reachable += deg[v] >= 2;
    if (static_cast<int>(best.size()) >= reachable) break;
    on[start] = 1;
    path.assign(1, start);
    dfs(start);
    on[start] = 0;
  }
  if (best.empty()) return std::nullopt;
  best.push_back(best.front());
  return walk_from_vertices(g, best);
}

// Longest cycle closed by a single back edge of a DFS tree, over all roots.
std::optional<Walk> long_cycle_heuristic(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.order();
  std::vector<Vertex> best;
  std::vector<int> depth(n);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    std::vector<Frame> stack{{root, 0}};
    std::vector<Vertex> path{root};
    depth[root] = 0;
    std::vector<char> active(n, 0);
    active[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.incident(f.v);
      if (f.next == adj.size()) {
        active[f.v] = 0;
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const Incidence inc = adj[f.next++];
      if (!allowed[inc.edge]) continue;
      if (depth[inc.to] < 0) {
        depth[inc.to] = depth[f.v] + 1;
        active[inc.to] = 1;
        path.push_back(inc.to);
        stack.push_back({inc.to, 0});
        continue;
      }
      const int len = depth[f.v] - depth[inc.to] + 1;
      if (active[inc.to] && len >= 3 && len > static_cast<int>(best.size())) {
        best.assign(path.begin() + depth[inc.to], path.end());
      }
    }
  }
  if (best.empty()) return std::nullopt;
  best.push_back(best.front());
  return walk_from_vertices(g, best);
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::MaxDegree4: return "maxdeg4";
    case Method::ClawFree: return "clawfree";
    case Method::EvenTwoRegular: return "even2reg";
    case Method::Greedy: return "greedy";
  }
  return "?";
}

std::optional<Method> method_from_string(std::string_view name) {
  for (Method m : {Method::MaxDegree4, Method::ClawFree, Method::EvenTwoRegular, Method::Greedy}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool is_cycle_sequence(const Graph& g, const std::vector<Walk>& cycles, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  std::vector<char> used(g.size(), 0);
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Walk& c = cycles[i];
    const std::string tag = "cycle " + std::to_string(i);
    if (!is_simple_cycle(c) || c.vertices.size() != c.edges.size() + 1) return fail(tag + " is not a simple cycle");
    bool meets = false;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      const EdgeId e = c.edges[k];
      if (e < 0 || e >= g.size()) return fail(tag + " has a bad edge id");
      const Edge& ed = g.edge(e);
      const Vertex a = c.vertices[k];
      const Vertex b = c.vertices[k + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return fail(tag + " is not a walk");
      if (used[e]) return fail(tag + " reuses edge " + std::to_string(e));
      used[e] = 1;
      meets = meets || seen[a];
    }
    if (i > 0 && !meets) return fail(tag + " shares no vertex with earlier cycles");
    for (Vertex v : c.vertices) seen[v] = 1;
  }
  return true;
}

Decomposition decompose_maxdeg4(const Graph& g, MaxDeg4Trace* trace) {
  if (g.max_degree() > 4) {
    throw Error(ErrorKind::DegreeTooHigh, "maximum degree " + std::to_string(g.max_degree()) + " exceeds 4");
  }
  MaxDeg4Decomposer d(g, trace);
  std::vector<EdgeSet> pieces;
  {
    std::vector<EdgeId> all(g.size());
    for (EdgeId e = 0; e < g.size(); ++e) all[e] = e;
    const Components comps = edge_components(g, all);
    pieces.resize(comps.count);
    for (EdgeId e : all) pieces[comps.of_vertex[g.edge(e).u]].push_back(e);
  }
  for (const EdgeSet& piece : pieces) {
    if (!piece.empty()) d.run(piece);
  }
  return d.take();
}

DecomposeResult decompose_clawfree(const Graph& g, const ExactLimits& limits) {
  if (auto claw = find_claw(g)) throw NotClawFreeError(*claw);
  DecomposeResult r;
  r.method = Method::ClawFree;
  r.bound_guaranteed = true;
  PathLinkage linkage;
  try {
    linkage = min_linkage_exact(g, limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooManyOddVertices) throw;
    linkage = initial_pairing(g);
    r.bound_guaranteed = false;
  }
  // A minimum linkage is already vertex-disjoint in a claw-free graph; the
  // reduction only does work on the heuristic fallback.
  linkage = vertex_disjoint_reduce(g, std::move(linkage));
  const EdgeSet paths = linkage.edge_union();
  for (EdgeId e : paths) r.decomposition.parts.push_back(Part{PartKind::SingleEdge, {e}, false});
  const Subgraph rest = edge_subgraph(g, complement_edges(g, paths));
  for (Part& p : even_to_two_regular(rest.graph).parts) {
    p.edges = rest.lift(p.edges);
    r.decomposition.parts.push_back(std::move(p));
  }
  return r;
}

Decomposition decompose_greedy(const Graph& g, const ExactLimits& limits) {
  const bool exact = g.order() <= limits.longest_cycle_max_order;
  std::vector<char> left(g.size(), 1);
  Decomposition d;
  for (;;) {
    const auto c = exact ? longest_cycle_exact(g, left) : long_cycle_heuristic(g, left);
    if (!c) break;
    for (EdgeId e : c->edges) left[e] = 0;
    d.parts.push_back(Part{PartKind::Cycle, sorted_edges(*c), false});
  }
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (left[e]) d.parts.push_back(Part{PartKind::SingleEdge, {e}, false});
  }
  return d;
}

DecomposeResult decompose_with(const Graph& g, Method method, const ExactLimits& limits) {
  switch (method) {
    case Method::EvenTwoRegular:
      return {even_to_two_regular(g), method, true};
    case Method::MaxDegree4:
      return {decompose_maxdeg4(g), method, true};
    case Method::ClawFree:
      return decompose_clawfree(g, limits);
    case Method::Greedy:
      return {decompose_greedy(g, limits), method, false};
  }
  throw std::logic_error("unknown method");
}

DecomposeResult decompose_auto(const Graph& g, const ExactLimits& limits) {
  if (is_even(g)) return decompose_with(g, Method::EvenTwoRegular, limits);
  if (g.max_degree() <= 4) return decompose_with(g, Method::MaxDegree4, limits);
  if (!find_claw(g)) return decompose_with(g, Method::ClawFree, limits);
  return decompose_with(g, Method::Greedy, limits);
}

}  // namespace cyclesmith
