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

#include "cyclesmith/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, e);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

Graph circulant_graph(int n, const std::vector<int>& jumps) {
  require(n >= 1, "circulant needs n >= 1");
  std::set<std::pair<int, int>> pairs;
  for (int j : jumps) {
    require(j >= 1 && 2 * j <= n, "circulant jumps must lie in 1..n/2");
    for (int i = 0; i < n; ++i) {
      const int k = (i + j) % n;
      if (k != i) pairs.insert({std::min(i, k), std::max(i, k)});
    }
  }
  std::vector<Edge> e;
  for (const auto& [a, b] : pairs) e.push_back({a, b});
  return Graph(n, e);
}

Graph k4_with_trees(const std::array<int, 4>& sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) e.push_back({i, j});
  }
  int n = 4;
  for (int i = 0; i < 4; ++i) {
    require(sizes[i] >= 0, "tree sizes must be non-negative");
    std::vector<Vertex> tree{i};
    for (int k = 0; k < sizes[i]; ++k) {
      std::uniform_int_distribution<std::size_t> pick(0, tree.size() - 1);
      e.push_back({tree[pick(rng)], n});
      tree.push_back(n++);
    }
  }
  return Graph(n, e);
}

Graph random_regular(int n, int k, std::uint64_t seed) {
  require(n >= 1 && k >= 0 && k < n, "random-regular needs 0 <= k < n");
  require((static_cast<long long>(n) * k) % 2 == 0, "random-regular needs n * k even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> shuffled;
  for (Vertex v = 0; v < n; ++v) shuffled.insert(shuffled.end(), k, v);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t i = 0; i < shuffled.size() && simple; i += 2) {
      const Vertex a = std::min(shuffled[i], shuffled[i + 1]);
      const Vertex b = std::max(shuffled[i], shuffled[i + 1]);
      simple = a != b && seen.insert({a, b}).second;
    }
    if (!simple) continue;
    std::vector<Edge> e;
    for (const auto& [a, b] : seen) e.push_back({a, b});
    return Graph(n, e);
  }
  // Dense parameters rarely give a simple pairing. Fall back to incremental
  // pairing: join two random points whose vertices are distinct and not yet
  // adjacent, restarting when no such pair remains.: repeatedly join two random points whose vertices are
  // distinct and not yet adjacent; restart when no such pair remains.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), k, v);
    std::set<std::pair<int, int>> seen;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      std::vector<std::pair<std::size_t, std::size_t>> options;
      bool found = false;
      for (int tries = 0; tries < 64 && !found; ++tries) {
        const std::size_t i = rng() % points.size();
        const std::size_t j = rng() % points.size();
        const Vertex a = std::min(points[i], points[j]);
        const Vertex b = std::max(points[i], points[j]);
        if (a != b && !seen.count({a, b})) {
          options.push_back({i, j});
          found = true;
        }
      }
      if (!found) {
        for (std::size_t i = 0; i < points.size(); ++i) {
          for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Vertex a = std::min(points[i], points[j]);
            const Vertex b = std::max(points[i], points[j]);
            if (a != b && !seen.count({a, b})) options.push_back({i, j});
          }
        }
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      auto [i, j] = options[rng() % options.size()];
      seen.insert({std::min(points[i], points[j]), std::max(points[i], points[j])});
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    }
    if (stuck) continue;
    std::vector<Edge> e;
    for (const auto& [a, b] : seen) e.push_back({a, b});
    return Graph(n, e);
  }
  throw Error(ErrorKind::InvalidParams, "no simple pairing found for random-regular");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0 && p <= 1, "gnp needs n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return Graph(n, e);
}

Graph line_graph(const Graph& g) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        e.push_back({std::min(inc[i].edge, inc[j].edge), std::max(inc[i].edge, inc[j].edge)});
      }
    }
  }
  std::sort(e.begin(), e.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return Graph(g.size(), e);
}

}  // namespace cyclesmith
