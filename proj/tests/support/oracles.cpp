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

#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace testing {
namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

std::vector<Edge> all_edges(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// Is the edge subset `mask` a single cycle?
bool subset_is_cycle(const Graph& g, std::uint32_t mask) {
  std::vector<int> deg(g.order(), 0);
  Dsu d(g.order());
  int touched = 0;
  int joins = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!(mask >> e & 1)) continue;
    const Edge& ed = g.edge(e);
    touched += (deg[ed.u]++ == 0) + (deg[ed.v]++ == 0);
    joins += d.join(ed.u, ed.v);
  }
  for (int x : deg) {
    if (x != 0 && x != 2) return false;
  }
  return touched >= 3 && joins == touched - 1;
}

void simple_paths(const Graph& g, Vertex at, Vertex target, std::vector<char>& on, std::vector<EdgeId>& path,
                  const std::function<void(const std::vector<EdgeId>&)>& visit) {
  if (at == target) {
    visit(path);
    return;
  }
  for (const auto& inc : g.incident(at)) {
    if (on[inc.to]) continue;
    on[inc.to] = 1;
    path.push_back(inc.edge);
    simple_paths(g, inc.to, target, on, path, visit);
    path.pop_back();
    on[inc.to] = 0;
  }
}

std::vector<std::vector<std::vector<EdgeId>>> paths_between_pairs(const Graph& g, const std::vector<Vertex>& odd) {
  const int k = static_cast<int>(odd.size());
  std::vector<std::vector<std::vector<EdgeId>>> table(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<char> on(g.order(), 0);
      on[odd[i]] = 1;
      std::vector<EdgeId> path;
      simple_paths(g, odd[i], odd[j], on, path, [&](const std::vector<EdgeId>& p) { table[i * k + j].push_back(p); });
    }
  }
  return table;
}

int path_system(const Graph& g, bool disjoint) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2) odd.push_back(v);
  }
  const int k = static_cast<int>(odd.size());
  if (k == 0) return 0;
  const auto table = paths_between_pairs(g, odd);
  int best = std::numeric_limits<int>::max();
  std::vector<int> used(g.size(), 0);
  std::function<void(std::uint32_t, int)> pair_up = [&](std::uint32_t left, int total) {
    if (left == 0) {
      best = std::min(best, total);
      return;
    }
    const int i = std::countr_zero(left);
    for (int j = i + 1; j < k; ++j) {
      if (!(left >> j & 1)) continue;
      for (const auto& p : table[i * k + j]) {
        bool clash = false;
        for (EdgeId e : p) clash = clash || (disjoint && used[e]);
        if (clash) continue;
        for (EdgeId e : p) ++used[e];
        pair_up(left & ~(1u << i) & ~(1u << j), total + static_cast<int>(p.size()));
        for (EdgeId e : p) --used[e];
      }
    }
  };
  pair_up((1u << k) - 1, 0);
  return best == std::numeric_limits<int>::max() ? -1 : best;
}

}  // namespace

std::string encode_graph6(int n, const std::vector<Edge>& edges) {
  std::string out(1, static_cast<char>(n + 63));
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : edges) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t b = 0; b < bits.size(); b += 6) {
    int value = 0;
    for (int k = 0; k < 6; ++k) value = value * 2 + bits[b + k];
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    visit(Graph(n, edges));
  }
}

int count_components(int n, const std::vector<Edge>& edges) {
  Dsu d(n);
  int c = n;
  for (const Edge& e : edges) c -= d.join(e.u, e.v);
  return c;
}

bool connected(const Graph& g) { return count_components(g.order(), all_edges(g)) <= 1; }

bool acyclic(const Graph& g) { return count_components(g.order(), all_edges(g)) == g.order() - g.size(); }

bool k4_with_trees(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          bool clique = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) clique = clique && g.adjacent(q[i], q[j]);
          if (!clique) continue;
          std::vector<Edge> rest;
          for (const Edge& e : g.edges()) {
            const bool inside = std::count(q, q + 4, e.u) && std::count(q, q + 4, e.v);
            if (!inside) rest.push_back(e);
          }
          Dsu dsu(n);
          bool forest = true;
          for (const Edge& e : rest) forest = forest && dsu.join(e.u, e.v);
          if (!forest) continue;
          std::vector<int> roots;
          for (int v = 0; v < n; ++v) roots.push_back(dsu.find(v));
          std::sort(roots.begin(), roots.end());
          roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
          if (roots.size() != 4) continue;
          bool separated = true;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) separated = separated && dsu.find(q[i]) != dsu.find(q[j]);
          if (separated) return true;
        }
  return false;
}

bool has_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    std::vector<Vertex> nb;
    for (const auto& inc : g.incident(c)) nb.push_back(inc.to);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[j]) && !g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return true;
        }
  }
  return false;
}

int girth_by_subsets(const Graph& g) {
  int best = -1;
  for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
    const int len = std::popcount(mask);
    if ((best < 0 || len < best) && subset_is_cycle(g, mask)) best = len;
  }
  return best;
}

std::vector<char> bridges_by_removal(const Graph& g) {
  std::vector<char> out(g.size(), 0);
  const std::vector<Edge> edges = all_edges(g);
  const int base = count_components(g.order(), edges);
  for (EdgeId e = 0; e < g.size(); ++e) {
    std::vector<Edge> rest = edges;
    rest.erase(rest.begin() + e);
    out[e] = count_components(g.order(), rest) > base;
  }
  return out;
}

int min_path_system(const Graph& g) { return path_system(g, false); }
int min_edge_disjoint_path_system(const Graph& g) { return path_system(g, true); }

bool naive_is_partition(const Graph& g, const std::vector<Part>& parts) {
  std::vector<EdgeId> all;
  for (const Part& p : parts) all.insert(all.end(), p.edges.begin(), p.edges.end());
  std::sort(all.begin(), all.end());
  std::vector<EdgeId> want(g.size());
  std::iota(want.begin(), want.end(), 0);
  return all == want;
}

bool naive_is_covering(const Graph& g, const std::vector<Part>& parts) {
  std::vector<char> hit(g.size(), 0);
  for (const Part& p : parts) {
    for (EdgeId e : p.edges) {
      if (e < 0 || e >= g.size()) return false;
      hit[e] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool naive_part_ok(const Graph& g, const Part& p) {
  using cyclesmith::PartKind;
  if (p.edges.empty()) return false;
  std::vector<int> deg(g.order(), 0);
  std::vector<Edge> sub;
  for (EdgeId e : p.edges) {
    if (e < 0 || e >= g.size()) return false;
    sub.push_back(g.edge(e));
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  std::vector<EdgeId> sorted = p.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const int touched = static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d > 0; }));
  switch (p.kind) {
    case PartKind::SingleEdge: return p.edges.size() == 1;
    case PartKind::Even: return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
    case PartKind::TwoRegular: return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; });
    case PartKind::Cycle:
      return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; }) &&
             count_components(g.order(), sub) == g.order() - touched + 1;
  }
  return false;
}

int brute_ce(const Graph& g) {
  const int m = g.size();
  std::vector<std::uint32_t> cycles;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (subset_is_cycle(g, mask)) cycles.push_back(mask);
  }
  const std::uint32_t full = (1u << m) - 1;
  std::vector<int> best(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    int b = 1 + best[s & ~low];
    for (std::uint32_t c : cycles) {
      if ((c & low) && (c & ~s) == 0) b = std::min(b, 1 + best[s & ~c]);
    }
    best[s] = b;
  }
  return best[full];
}

}  // namespace testing
