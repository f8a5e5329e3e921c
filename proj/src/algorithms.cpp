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

#include "cyclesmith/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace cyclesmith {

Components connected_components(const Graph& g) {
  Components c;
  c.of_vertex.assign(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.of_vertex[s] != -1) continue;
    c.of_vertex[s] = c.count;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Incidence& inc : g.incident(queue[head])) {
        if (c.of_vertex[inc.to] == -1) {
          c.of_vertex[inc.to] = c.count;
          queue.push_back(inc.to);
        }
      }
    }
    ++c.count;
  }
  return c;
}

bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

Components edge_components(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : edges) {
    const int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Components c;
  c.of_vertex.assign(g.order(), -1);
  std::vector<int> index_of_root(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    const int r = find(v);
    if (index_of_root[r] == -1) index_of_root[r] = c.count++;
    c.of_vertex[v] = index_of_root[r];
  }
  return c;
}

BlockDecomposition cut_vertices_and_blocks(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<EdgeId> edge_stack;
  int time = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = time++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.incident(f.v);
      if (f.next < adj.size()) {
        const Incidence inc = adj[f.next++];
        if (inc.edge == f.parent_edge) continue;
        if (disc[inc.to] == -1) {
          edge_stack.push_back(inc.edge);
          disc[inc.to] = low[inc.to] = time++;
          stack.push_back({inc.to, inc.edge, 0});
        } else if (disc[inc.to] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[inc.to]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex p = stack.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        EdgeSet block;
        while (true) {
          const EdgeId e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.front() < b.front(); });
  std::vector<int> blocks_at(n, 0);
  std::vector<int> last_block(n, -1);
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (EdgeId e : out.blocks[b]) {
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (last_block[x] != static_cast<int>(b)) {
          last_block[x] = static_cast<int>(b);
          ++blocks_at[x];
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (blocks_at[v] >= 2) out.cut_vertices.push_back(v);
  }
  return out;
}

bool is_even(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

std::vector<Vertex> odd_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) out.push_back(v);
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.size() == g.order() - connected_components(g).count;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n);
  std::vector<EdgeId> via(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    via[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (const Incidence& inc : g.incident(x)) {
        if (inc.edge == via[x]) continue;
        if (dist[inc.to] == -1) {
          dist[inc.to] = dist[x] + 1;
          via[inc.to] = inc.edge;
          queue.push_back(inc.to);
        } else {
          best = std::min(best, dist[x] + dist[inc.to] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

Walk eulerian_circuit(const Graph& g, Vertex start) {
  if (start < 0 || start >= g.order()) {
    throw Error(ErrorKind::Precondition, "start vertex out of range");
  }
  {
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> queue{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (g.degree(x) % 2 != 0) {
        throw Error(ErrorKind::NotEven, "vertex " + std::to_string(x) + " has odd degree");
      }
      for (const Incidence& inc : g.incident(x)) {
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          queue.push_back(inc.to);
        }
      }
    }
  }
  std::vector<char> used(g.size(), 0);
  std::vector<std::size_t> next(g.order(), 0);
  std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
  std::vector<std::pair<Vertex, EdgeId>> popped;
  while (!stack.empty()) {
    const Vertex v = stack.back().first;
    const auto adj = g.incident(v);
    while (next[v] < adj.size() && used[adj[next[v]].edge]) ++next[v];
    if (next[v] < adj.size()) {
      const Incidence inc = adj[next[v]++];
      used[inc.edge] = 1;
      stack.emplace_back(inc.to, inc.edge);
    } else {
      popped.push_back(stack.back());
      stack.pop_back();
    }
  }
  std::reverse(popped.begin(), popped.end());
  Walk w;
  w.vertices.reserve(popped.size());
  for (std::size_t i = 0; i < popped.size(); ++i) {
    w.vertices.push_back(popped[i].first);
    if (i > 0) w.edges.push_back(popped[i].second);
  }
  return w;
}

namespace {

// Unit-capacity flow network with split vertices, used for Menger-style
// disjoint path queries.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to, EdgeId label) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1, label});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0, label});
  }

  // One BFS augmentation; returns false if the sink is unreachable.
  bool augment(int source, int sink) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<int> queue{source};
    std::vector<char> seen(adj_.size(), 0);
    seen[source] = 1;
    for (std::size_t head = 0; head < queue.size() && !seen[sink]; ++head) {
      const int x = queue[head];
      for (int a : adj_[x]) {
        const Arc& arc = arcs_[a];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = 1;
          via[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (int x = sink; x != source;) {
      const int a = via[x];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      x = arcs_[a ^ 1].to;
    }
    return true;
  }

  // Forward arcs out of `node` that carry flow.
  std::vector<int> flow_arcs_from(int node) const {
    std::vector<int> out;
    for (int a : adj_[node]) {
      if ((a & 1) == 0 && arcs_[a].cap == 0) out.push_back(a);
    }
    return out;
  }

  int head(int arc) const { return arcs_[arc].to; }
  EdgeId label(int arc) const { return arcs_[arc].label; }

 private:
  struct Arc {
    int to;
    int cap;
    EdgeId label;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

EdgeSet cycle_through_two_edges(const Graph& g, EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw Error(ErrorKind::Precondition, "cycle_through_two_edges needs two edges");
  const int n = g.order();
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  const int source = 2 * n, sink = 2 * n + 1;
  FlowNetwork net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) net.add_arc(in(v), out(v), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (e == e1 || e == e2) continue;
    net.add_arc(out(g.edge(e).u), in(g.edge(e).v), e);
    net.add_arc(out(g.edge(e).v), in(g.edge(e).u), e);
  }
  net.add_arc(source, in(g.edge(e1).u), -1);
  net.add_arc(source, in(g.edge(e1).v), -1);
  net.add_arc(out(g.edge(e2).u), sink, -1);
  net.add_arc(out(g.edge(e2).v), sink, -1);
  if (!net.augment(source, sink) || !net.augment(source, sink)) {
    throw Error(ErrorKind::NoSuchCycle, "no cycle through edges " + std::to_string(e1) + " and " +
                                            std::to_string(e2));
  }
  EdgeSet cycle{e1, e2};
  // Vertex capacities make each flow path's successor unique; a stray
  // circulation is never reached from the source.
  for (int first : net.flow_arcs_from(source)) {
    int node = net.head(first);
    while (node != sink) {
      const int a = net.flow_arcs_from(node).front();
      if (net.label(a) >= 0) cycle.push_back(net.label(a));
      node = net.head(a);
    }
  }
  std::sort(cycle.begin(), cycle.end());
  return cycle;
}

std::optional<Claw> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto adj = g.incident(c);
    const std::size_t d = adj.size();
    if (d < 3) continue;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(adj[i].to, adj[j].to)) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.adjacent(adj[i].to, adj[k].to) && !g.adjacent(adj[j].to, adj[k].to)) {
            return Claw{c, {adj[i].to, adj[j].to, adj[k].to}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Walk> shortest_path(const Graph& g, Vertex from, Vertex to,
                                  const std::vector<char>& allowed) {
  std::vector<EdgeId> via(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{from};
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
    const Vertex x = queue[head];
    for (const Incidence& inc : g.incident(x)) {
      if (!allowed[inc.edge] || seen[inc.to]) continue;
      seen[inc.to] = 1;
      via[inc.to] = inc.edge;
      queue.push_back(inc.to);
    }
  }
  if (!seen[to]) return std::nullopt;
  Walk w;
  for (Vertex x = to; x != from; x = g.edge(via[x]).other(x)) {
    w.vertices.push_back(x);
    w.edges.push_back(via[x]);
  }
  w.vertices.push_back(from);
  std::reverse(w.vertices.begin(), w.vertices.end());
  std::reverse(w.edges.begin(), w.edges.end());
  return w;
}

std::vector<char> bridge_mask(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.order();
  std::vector<char> bridge(g.size(), 0);
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> via(n, -1);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int clock = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = clock++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.incident(f.v);
      if (f.next < adj.size()) {
        const Incidence inc = adj[f.next++];
        if (!allowed[inc.edge] || inc.edge == via[f.v]) continue;
        if (disc[inc.to] >= 0) {
          low[f.v] = std::min(low[f.v], disc[inc.to]);
        } else {
          disc[inc.to] = low[inc.to] = clock++;
          via[inc.to] = inc.edge;
          stack.push_back({inc.to, 0});
        }
        continue;
      }
      const Vertex v = f.v;
      stack.pop_back();
      if (via[v] >= 0) {
        const Vertex parent = g.edge(via[v]).other(v);
        low[parent] = std::min(low[parent], low[v]);
        if (low[v] > disc[parent]) bridge[via[v]] = 1;
      }
    }
  }
  return bridge;
}

std::optional<Walk> find_cycle(const Graph& g, const std::vector<char>& allowed) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<EdgeId> via(n, -1);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto adj = g.incident(f.v);
      if (f.next == adj.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence inc = adj[f.next++];
      if (!allowed[inc.edge] || inc.edge == via[f.v]) continue;
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        via[inc.to] = inc.edge;
        stack.push_back({inc.to, 0});
        continue;
      }
      // inc.to is an ancestor of f.v: close the cycle along tree edges.
      Walk w;
      Vertex x = f.v;
      while (x != inc.to) {
        w.vertices.push_back(x);
        w.edges.push_back(via[x]);
        x = g.edge(via[x]).other(x);
      }
      w.vertices.push_back(inc.to);
      std::reverse(w.vertices.begin(), w.vertices.end());
      std::reverse(w.edges.begin(), w.edges.end());
      w.vertices.push_back(inc.to);
      w.edges.push_back(inc.edge);
      return w;
    }
  }
  return std::nullopt;
}

std::vector<Walk> split_circuit(const Walk& circuit) {
  std::vector<Walk> cycles;
  if (circuit.edges.empty()) return cycles;
  const Vertex max_vertex = *std::max_element(circuit.vertices.begin(), circuit.vertices.end());
  std::vector<int> pos(max_vertex + 1, -1);
  std::vector<std::pair<Vertex, EdgeId>> stack{{circuit.vertices[0], -1}};
  pos[circuit.vertices[0]] = 0;
  for (std::size_t i = 0; i < circuit.edges.size(); ++i) {
    const Vertex v = circuit.vertices[i + 1];
    const EdgeId e = circuit.edges[i];
    if (pos[v] == -1) {
      pos[v] = static_cast<int>(stack.size());
      stack.emplace_back(v, e);
      continue;
    }
    Walk cycle;
    const auto at = static_cast<std::size_t>(pos[v]);
    cycle.vertices.push_back(v);
    for (std::size_t j = at + 1; j < stack.size(); ++j) {
      cycle.vertices.push_back(stack[j].first);
      cycle.edges.push_back(stack[j].second);
      pos[stack[j].first] = -1;
    }
    cycle.vertices.push_back(v);
    cycle.edges.push_back(e);
    stack.resize(at + 1);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace cyclesmith
