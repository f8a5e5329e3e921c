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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/odd_linkage.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace cyclesmith;

namespace {

PathLinkage linkage(const Graph& g, std::initializer_list<std::vector<Vertex>> paths) {
  PathLinkage l;
  for (const auto& p : paths) l.paths.push_back(walk_from_vertices(g, p));
  return l;
}

std::vector<std::pair<Vertex, Vertex>> endpoint_pairs(const PathLinkage& l) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Walk& w : l.paths) {
    out.push_back(std::minmax(w.vertices.front(), w.vertices.back()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_strictly_decreasing(const RewriteLog& log) {
  for (std::size_t i = 1; i < log.totals.size(); ++i) CHECK(log.totals[i] < log.totals[i - 1]);
}

PathLinkage random_pairing(const Graph& g, std::mt19937_64& rng) {
  PathLinkage l;
  for (const auto& p : testing::random_odd_pairing(g, rng)) l.paths.push_back(walk_from_vertices(g, p));
  return l;
}

}  // namespace

TEST_CASE("initial_pairing on fixtures") {
  CHECK(initial_pairing(cycle_graph(4)).paths.empty());

  const Graph p4 = path_graph(4);
  PathLinkage l = initial_pairing(p4);
  REQUIRE(l.paths.size() == 1);
  CHECK(l.paths[0].vertices == std::vector<Vertex>{0, 1, 2, 3});

  const Graph k4 = complete_graph(4);
  l = initial_pairing(k4);
  CHECK(l.paths.size() == 2);
  CHECK(is_linkage(k4, l));
}

TEST_CASE("is_linkage reports the broken condition") {
  const Graph k4 = complete_graph(4);
  std::string why;
  CHECK_FALSE(is_linkage(k4, linkage(k4, {{0, 1}}), &why));
  CHECK_FALSE(why.empty());
  CHECK_FALSE(is_linkage(k4, linkage(k4, {{0, 1}, {0, 2}}), &why));
  CHECK_FALSE(is_linkage(k4, linkage(k4, {{0, 1, 2, 0, 3}, {1, 2}})));
  CHECK(is_linkage(k4, linkage(k4, {{0, 2, 1}, {3, 0, 2}})));
}

TEST_CASE("edge_disjoint_reduce") {
  const Graph k4 = complete_graph(4);
  const PathLinkage shared = linkage(k4, {{0, 2, 1}, {3, 0, 2}});
  CHECK_FALSE(is_edge_disjoint(k4, shared));
  RewriteLog log;
  const PathLinkage r = edge_disjoint_reduce(k4, shared, &log);
  CHECK(is_linkage(k4, r));
  CHECK(is_edge_disjoint(k4, r));
  CHECK(r.total_edges() < 4);
  REQUIRE(log.totals.size() >= 2);
  CHECK(log.totals.front() == 4);
  check_strictly_decreasing(log);

  const PathLinkage disjoint = linkage(k4, {{0, 1}, {2, 3}});
  const PathLinkage same = edge_disjoint_reduce(k4, disjoint);
  CHECK(endpoint_pairs(same) == endpoint_pairs(disjoint));
  CHECK(same.total_edges() == 2);

  const Graph p4 = path_graph(4);
  CHECK(edge_disjoint_reduce(p4, initial_pairing(p4)).paths[0].vertices ==
        std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("vertex_disjoint_reduce") {
  const Graph k4 = complete_graph(4);
  RewriteLog log;
  const PathLinkage r = vertex_disjoint_reduce(k4, linkage(k4, {{0, 2, 1}, {3, 2}}), &log);
  CHECK(is_linkage(k4, r));
  CHECK(is_vertex_disjoint(k4, r));
  CHECK(r.total_edges() == 2);
  check_strictly_decreasing(log);

  const PathLinkage apart = linkage(k4, {{0, 1}, {2, 3}});
  CHECK(vertex_disjoint_reduce(k4, apart).total_edges() == 2);

  const Graph claw = testing::k13();
  try {
    vertex_disjoint_reduce(claw, linkage(claw, {{1, 0, 2}, {3, 0}}));
    FAIL("expected a claw");
  } catch (const NotClawFreeError& e) {
    CHECK(e.claw().center == 0);
    CHECK(e.claw().leaves == std::array<Vertex, 3>{1, 2, 3});
  }
}

TEST_CASE("min_linkage_exact on fixtures") {
  const Graph p4 = path_graph(4);
  CHECK(min_linkage_exact(p4).total_edges() == 3);

  const Graph k4 = complete_graph(4);
  PathLinkage l = min_linkage_exact(k4);
  CHECK(l.total_edges() == 2);
  CHECK(is_vertex_disjoint(k4, l));

  const Graph claw = testing::k13();
  l = min_linkage_exact(claw);
  CHECK(l.total_edges() == 3);
  CHECK(is_linkage(claw, l));
  CHECK(is_edge_disjoint(claw, l));

  CHECK(min_linkage_exact(complete_graph(5)).paths.empty());
  CHECK(min_t_join(k4).size() == 2);
}

TEST_CASE("min_linkage_exact respects the odd-vertex limit") {
  ExactLimits limits;
  limits.max_odd_vertices = 2;
  try {
    min_linkage_exact(complete_graph(4), limits);
    FAIL("expected TooManyOddVertices");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyOddVertices);
  }
}

TEST_CASE("min_linkage_exact matches exhaustive path systems for n <= 6") {
  int compared = 0;
  for (int n = 2; n <= 6; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      if (!testing::connected(g) || odd_vertices(g).size() > 4) return;
      const PathLinkage l = min_linkage_exact(g);
      REQUIRE(is_linkage(g, l));
      CHECK(is_edge_disjoint(g, l));
      CHECK(static_cast<int>(l.total_edges()) == testing::min_path_system(g));
      ++compared;
    });
  }
  CHECK(compared > 10000);
}

TEST_CASE("minimum linkages on claw-free graphs n <= 6 are vertex-disjoint") {
  for (int n = 2; n <= 6; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      if (!testing::connected(g) || testing::has_claw(g)) return;
      const PathLinkage l = min_linkage_exact(g);
      CHECK(is_vertex_disjoint(g, l));
      if (l.paths.empty()) return;
      Vertex u = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > g.degree(u)) u = v;
      }
      for (const Walk& w : l.paths) {
        int meets = 0;
        for (Vertex x : w.vertices) meets += g.edge_between(u, x).has_value() ? 1 : 0;
        CHECK(meets <= 2);
      }
    });
  }
}

TEST_CASE("reductions on random claw-free graphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_claw_free(rng);
    const PathLinkage start = random_pairing(g, rng);
    REQUIRE(is_linkage(g, start));
    RewriteLog elog;
    const PathLinkage e = edge_disjoint_reduce(g, start, &elog);
    CHECK(is_linkage(g, e));
    CHECK(is_edge_disjoint(g, e));
    check_strictly_decreasing(elog);
    RewriteLog vlog;
    const PathLinkage v = vertex_disjoint_reduce(g, e, &vlog);
    CHECK(is_linkage(g, v));
    CHECK(is_vertex_disjoint(g, v));
    check_strictly_decreasing(vlog);
    CHECK(v.total_edges() <= e.total_edges());
    CHECK(e.total_edges() <= start.total_edges());
  }
}
