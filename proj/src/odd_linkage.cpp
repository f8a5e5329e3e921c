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

#include "cyclesmith/odd_linkage.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

using Seq = std::vector<Vertex>;

std::vector<Seq> to_seqs(const PathLinkage& l) {
  std::vector<Seq> seqs;
  seqs.reserve(l.paths.size());
  for (const Walk& p : l.paths) seqs.push_back(p.vertices);
  return seqs;
}

PathLinkage to_linkage(const Graph& g, const std::vector<Seq>& seqs) {
  PathLinkage l;
  l.paths.reserve(seqs.size());
  for (const Seq& s : seqs) l.paths.push_back(walk_from_vertices(g, s));
  return l;
}

std::size_t total_of(const std::vector<Seq>& seqs) {
  std::size_t t = 0;
  for (const Seq& s : seqs) t += s.size() - 1;
  return t;
}

EdgeId edge_of(const Graph& g, Vertex a, Vertex b) { return *g.edge_between(a, b); }

// Cuts out every closed sub-walk, leaving a simple path with the same ends.
Seq shortcut(const Seq& seq, int n) {
  std::vector<int> pos(n, -1);
  Seq out;
  for (Vertex v : seq) {
    if (pos[v] >= 0) {
      for (std::size_t k = pos[v] + 1; k < out.size(); ++k) pos[out[k]] = -1;
      out.resize(pos[v] + 1);
    } else {
      pos[v] = static_cast<int>(out.size());
      out.push_back(v);
    }
  }
  return out;
}

Seq concat(Seq head, const Seq& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

Seq slice(const Seq& s, std::size_t from, std::size_t to) {
  return Seq(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to));
}

Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

void record(RewriteLog* log, const std::vector<Seq>& seqs) {
  if (log != nullptr) log->totals.push_back(total_of(seqs));
}

void reduce_edges(const Graph& g, std::vector<Seq>& seqs, RewriteLog* log) {
  for (;;) {
    std::vector<int> owner(g.size(), -1);
    int a = -1;
    int b = -1;
    EdgeId shared = -1;
    for (int i = 0; i < static_cast<int>(seqs.size()) && shared < 0; ++i) {
      for (std::size_t k = 0; k + 1 < seqs[i].size(); ++k) {
        const EdgeId e = edge_of(g, seqs[i][k], seqs[i][k + 1]);
        if (owner[e] >= 0) {
          a = owner[e];
          b = i;
          shared = e;
          break;
        }
        owner[e] = i;
      }
    }
    if (shared < 0) return;

    const Seq& p1 = seqs[a];
    std::size_t p = 0;
    while (edge_of(g, p1[p], p1[p + 1]) != shared) ++p;
    const Vertex x = p1[p];
    const Vertex y = p1[p + 1];
    Seq p2 = seqs[b];
    auto find_xy = [&](const Seq& s) {
      for (std::size_t q = 0; q + 1 < s.size(); ++q) {
        if (s[q] == x && s[q + 1] == y) return q;
      }
      return s.size();
    };
    std::size_t q = find_xy(p2);
    if (q == p2.size()) {
      p2 = reversed(std::move(p2));
      q = find_xy(p2);
    }
    // p1 = x1..x y..xt and p2 = y1..x y..yl, both crossing the edge from x to y.
    Seq first = concat(slice(p1, 0, p + 1), reversed(slice(p2, 0, q)));
    Seq second = concat(reversed(slice(p1, p + 1, p1.size())), slice(p2, q + 2, p2.size()));
    seqs[a] = shortcut(first, g.order());
    seqs[b] = shortcut(second, g.order());
    record(log, seqs);
  }
}

struct Bfs {
  std::vector<int> dist;
  std::vector<Vertex> parent;
};

Bfs bfs(const Graph& g, Vertex s) {
  Bfs r{std::vector<int>(g.order(), -1), std::vector<Vertex>(g.order(), -1)};
  std::queue<Vertex> queue;
  r.dist[s] = 0;
  queue.push(s);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (const Incidence& inc : g.incident(v)) {
      if (r.dist[inc.to] >= 0) continue;
      r.dist[inc.to] = r.dist[v] + 1;
      r.parent[inc.to] = v;
      queue.push(inc.to);
    }
  }
  return r;
}

// Path from `from` up the BFS tree to its root.
Seq climb(const Bfs& tree, Vertex from) {
  Seq s{from};
  while (tree.parent[s.back()] >= 0) s.push_back(tree.parent[s.back()]);
  return s;
}

}  // namespace

std::size_t PathLinkage::total_edges() const {
  std::size_t t = 0;
  for (const Walk& p : paths) t += p.length();
  return t;
}

EdgeSet PathLinkage::edge_union() const {
  EdgeSet all;
  for (const Walk& p : paths) all.insert(all.end(), p.edges.begin(), p.edges.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool is_linkage(const Graph& g, const PathLinkage& l, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  const int n = g.order();
  std::vector<int> ends(n, 0);
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    const Walk& p = l.paths[i];
    const std::string tag = "path " + std::to_string(i);
    if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) return fail(tag + " is empty or malformed");
    std::vector<char> seen(n, 0);
    for (Vertex v : p.vertices) {
      if (v < 0 || v >= n) return fail(tag + " has a bad vertex");
      if (seen[v]) return fail(tag + " repeats vertex " + std::to_string(v));
      seen[v] = 1;
    }
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      const EdgeId e = p.edges[k];
      if (e < 0 || e >= g.size()) return fail(tag + " has a bad edge id");
      const Edge& ed = g.edge(e);
      const Vertex a = p.vertices[k];
      const Vertex b = p.vertices[k + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
        return fail(tag + " edge " + std::to_string(e) + " does not join its vertices");
      }
    }
    ++ends[p.front()];
    ++ends[p.back()];
  }
  for (Vertex v = 0; v < n; ++v) {
    const int want = g.degree(v) % 2;
    if (ends[v] != want) return fail("vertex " + std::to_string(v) + " ends " + std::to_string(ends[v]) + " paths");
  }
  return true;
}

bool is_edge_disjoint(const Graph& g, const PathLinkage& l) {
  std::vector<char> used(g.size(), 0);
  for (const Walk& p : l.paths) {
    for (EdgeId e : p.edges) {
      if (used[e]) return false;
      used[e] = 1;
    }
  }
  return true;
}

bool is_vertex_disjoint(const Graph& g, const PathLinkage& l) {
  std::vector<char> used(g.order(), 0);
  for (const Walk& p : l.paths) {
    for (Vertex v : p.vertices) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

PathLinkage initial_pairing(const Graph& g) {
  const Components comps = connected_components(g);
  std::vector<std::vector<Vertex>> odd(comps.count);
  for (Vertex v : odd_vertices(g)) odd[comps.of_vertex[v]].push_back(v);
  const std::vector<char> all(g.size(), 1);
  PathLinkage l;
  for (const auto& list : odd) {
    for (std::size_t i = 0; i + 1 < list.size(); i += 2) {
      l.paths.push_back(*shortest_path(g, list[i], list[i + 1], all));
    }
  }
  return l;
}

PathLinkage edge_disjoint_reduce(const Graph& g, PathLinkage l, RewriteLog* log) {
  std::vector<Seq> seqs = to_seqs(l);
  record(log, seqs);
  reduce_edges(g, seqs, log);
  return to_linkage(g, seqs);
}

PathLinkage vertex_disjoint_reduce(const Graph& g, PathLinkage l, RewriteLog* log) {
  std::vector<Seq> seqs = to_seqs(l);
  record(log, seqs);
  reduce_edges(g, seqs, log);
  const int n = g.order();
  for (;;) {
    std::vector<int> owner(n, -1);
    int a = -1;
    int b = -1;
    Vertex w = -1;
    for (int i = 0; i < static_cast<int>(seqs.size()) && w < 0; ++i) {
      for (Vertex v : seqs[i]) {
        if (owner[v] >= 0) {
          a = owner[v];
          b = i;
          w = v;
          break;
        }
        owner[v] = i;
      }
    }
    if (w < 0) break;

    auto position = [](const Seq& s, Vertex v) {
      return static_cast<std::size_t>(std::find(s.begin(), s.end(), v) - s.begin());
    };
    // w ends at most one path, so it is internal to seqs[a] or seqs[b].
    int i1 = a;
    int i2 = b;
    {
      const std::size_t pa = position(seqs[a], w);
      if (pa == 0 || pa + 1 == seqs[a].size()) std::swap(i1, i2);
    }
    Seq p1 = seqs[i1];
    Seq p2 = seqs[i2];
    std::size_t p = position(p1, w);
    std::size_t q = position(p2, w);
    if (q == 0) {
      p2 = reversed(std::move(p2));
      q = p2.size() - 1;
    }
    const Vertex before = p1[p - 1];
    const Vertex after = p1[p + 1];
    const Vertex c = p2[q - 1];  // distinct from before/after: the paths share no edge

    if (g.adjacent(before, after)) {
      p1.erase(p1.begin() + static_cast<std::ptrdiff_t>(p));
      seqs[i1] = std::move(p1);
    } else {
      if (!g.adjacent(before, c)) {
        if (!g.adjacent(after, c)) {
          std::array<Vertex, 3> leaves{before, after, c};
          std::sort(leaves.begin(), leaves.end());
          throw NotClawFreeError(Claw{w, leaves});
        }
        p1 = reversed(std::move(p1));
        p = p1.size() - 1 - p;
      }
      // p1[p-1] is now adjacent to c: join x1..p1[p-1] c..y1 and xt..w ..yl.
      Seq first = concat(slice(p1, 0, p), reversed(slice(p2, 0, q)));
      Seq second = concat(reversed(slice(p1, p, p1.size())), slice(p2, q + 1, p2.size()));
      seqs[i1] = shortcut(first, n);
      seqs[i2] = shortcut(second, n);
    }
    record(log, seqs);
    reduce_edges(g, seqs, log);
  }
  return to_linkage(g, seqs);
}

PathLinkage min_linkage_exact(const Graph& g, const ExactLimits& limits) {
  const std::vector<Vertex> odd = odd_vertices(g);
  const int k = static_cast<int>(odd.size());
  if (k > limits.max_odd_vertices) {
    throw Error(ErrorKind::TooManyOddVertices,
                std::to_string(k) + " odd vertices exceed the exact limit of " +
                    std::to_string(limits.max_odd_vertices));
  }
  if (k == 0) return {};

  std::vector<Bfs> trees;
  trees.reserve(k);
  for (Vertex s : odd) trees.push_back(bfs(g, s));
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  auto dist = [&](int i, int j) {
    const int d = trees[i].dist[odd[j]];
    return d < 0 ? kInf : d;
  };

  // best[mask] = cheapest perfect pairing of the odd vertices in mask.
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<int> best(full + 1, kInf);
  best[0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    for (int j = i + 1; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const int rest = best[mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j)];
      best[mask] = std::min(best[mask], std::min(kInf, dist(i, j) + rest));
    }
  }
  if (best[full] >= kInf) {
    throw Error(ErrorKind::Precondition, "odd vertices cannot be paired within components");
  }

  const int max_deg = g.max_degree();
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == max_deg) hubs.push_back(v);
  }

  using Pairing = std::vector<std::pair<int, int>>;
  Pairing chosen;
  Pairing lex_first;
  int via_pair = -1;
  Vertex via_hub = -1;
  std::size_t seen = 0;
  Pairing current;
  // Walks the optimal pairings in lexicographic order until one routes a path
  // through a maximum-degree vertex or the cap is reached.
  std::function<bool(std::size_t)> walk = [&](std::size_t mask) -> bool {
    if (mask == 0) {
      if (seen++ == 0) lex_first = current;
      for (std::size_t pi = 0; pi < current.size(); ++pi) {
        const auto [i, j] = current[pi];
        for (Vertex u : hubs) {
          const int du = trees[i].dist[u];
          const int dv = trees[j].dist[u];
          if (du >= 0 && dv >= 0 && du + dv == dist(i, j)) {
            chosen = current;
            via_pair = static_cast<int>(pi);
            via_hub = u;
            return true;
          }
        }
      }
      return seen >= limits.max_optimal_pairings;
    }
    const int i = std::countr_zero(mask);
    for (int j = i + 1; j < k; ++j) {
      if (!(mask >> j & 1)) continue;
      const std::size_t rest = mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << j);
      if (dist(i, j) + best[rest] != best[mask]) continue;
      current.emplace_back(i, j);
      const bool stop = walk(rest);
      current.pop_back();
      if (stop) return true;
    }
    return false;
  };
  walk(full);
  if (via_pair < 0) chosen = lex_first;

  std::vector<Seq> seqs;
  for (std::size_t pi = 0; pi < chosen.size(); ++pi) {
    const auto [i, j] = chosen[pi];
    if (static_cast<int>(pi) == via_pair) {
      Seq head = reversed(climb(trees[i], via_hub));  // odd[i] .. hub
      Seq tail = climb(trees[j], via_hub);            // hub .. odd[j]
      head.insert(head.end(), tail.begin() + 1, tail.end());
      seqs.push_back(std::move(head));
    } else {
      seqs.push_back(reversed(climb(trees[i], odd[j])));
    }
  }
  // Shortest paths of a minimum pairing never share an edge (their symmetric
  // difference would be a cheaper join), so this is a no-op safeguard.
  reduce_edges(g, seqs, nullptr);
  return to_linkage(g, seqs);
}

EdgeSet min_t_join(const Graph& g, const ExactLimits& limits) {
  return min_linkage_exact(g, limits).edge_union();
}

}  // namespace cyclesmith
