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

#include <set>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/corpus.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph_io.hpp"
#include "support/oracles.hpp"

using namespace cyclesmith;

TEST_CASE("exhaustive enumeration generates every labeled graph") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    const std::uint64_t generated =
        for_each_labeled_graph(n, CorpusFilter::Connected, [&](const Graph& g) { seen.insert(write_graph6(g)); });
    CHECK(generated == (std::uint64_t{1} << (n * (n - 1) / 2)));
    std::size_t connected = 0;
    testing::for_each_graph(n, [&](const Graph& g) { connected += testing::connected(g) ? 1 : 0; });
    CHECK(seen.size() == connected);
  }
}

TEST_CASE("filters agree with independent predicates for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      const bool conn = testing::connected(g);
      bool even = true;
      for (Vertex v = 0; v < n; ++v) even = even && g.degree(v) % 2 == 0;
      CHECK(passes_filter(g, CorpusFilter::Connected) == conn);
      CHECK(passes_filter(g, CorpusFilter::MaxDeg4) == (conn && g.max_degree() <= 4));
      CHECK(passes_filter(g, CorpusFilter::ClawFree) == (conn && !testing::has_claw(g)));
      CHECK(passes_filter(g, CorpusFilter::Even) == (conn && even));
      CHECK(passes_filter(g, CorpusFilter::Tree) == (conn && testing::acyclic(g)));
      CHECK(passes_filter(g, CorpusFilter::NonTree) == (conn && !testing::acyclic(g)));
    });
  }
}

TEST_CASE("even filter enumeration visits exactly the even connected graphs") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> fast, slow;
    for_each_labeled_graph(n, CorpusFilter::Even, [&](const Graph& g) { fast.insert(write_graph6(g)); });
    testing::for_each_graph(n, [&](const Graph& g) {
      if (passes_filter(g, CorpusFilter::Even)) slow.insert(write_graph6(g));
    });
    CHECK(fast == slow);
  }
}

TEST_CASE("sharded enumeration covers the same graphs") {
  std::set<std::string> all, sharded;
  for_each_labeled_graph(5, CorpusFilter::ClawFree, [&](const Graph& g) { all.insert(write_graph6(g)); });
  for (unsigned s = 0; s < 3; ++s) {
    for_each_labeled_graph(5, CorpusFilter::ClawFree, [&](const Graph& g) { sharded.insert(write_graph6(g)); }, s, 3);
  }
  CHECK(all == sharded);
}

TEST_CASE("run_corpus reports") {
  CorpusOptions opt;
  opt.max_n = 5;
  opt.filter = CorpusFilter::MaxDeg4;
  opt.check = TheoremCheck::MaxDeg4;
  CorpusReport r = run_corpus(opt);
  CHECK(r.ok());
  CHECK(r.exhaustive);
  CHECK(r.generated[5] == 1024);
  CHECK(r.max_ratio <= 1.0);

  opt.max_n = 6;
  opt.filter = CorpusFilter::NonTree;
  opt.check = TheoremCheck::Cover;
  opt.threads = 2;
  opt.keep_records = true;
  r = run_corpus(opt);
  CHECK(r.ok());
  CHECK(r.records.size() == r.total_checked());
  CHECK(std::is_sorted(r.records.begin(), r.records.end(), [](const CorpusRecord& a, const CorpusRecord& b) {
    return a.order != b.order ? a.order < b.order : a.graph6 < b.graph6;
  }));
  for (const CorpusRecord& rec : r.records) CHECK(static_cast<int>(rec.parts) <= rec.order - 2);

  opt = CorpusOptions{};
  opt.min_n = 9;
  opt.max_n = 10;
  opt.samples = 20;
  opt.filter = CorpusFilter::Connected;
  opt.check = TheoremCheck::Eulerian;
  r = run_corpus(opt);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.ok());
}

TEST_CASE("check_theorem flags a violated bound") {
  // K_{1,5} breaks the maximum-degree precondition; the record must fail, not throw.
  const CorpusRecord rec = check_theorem(star_graph(5), TheoremCheck::MaxDeg4);
  CHECK_FALSE(rec.ok);
  CHECK_FALSE(rec.detail.empty());
}

TEST_CASE("generators") {
  const Graph pet = petersen_graph();
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  CHECK(girth(pet) == 5);

  CHECK(write_graph6(k4_with_trees({0, 0, 0, 0}, 1)) == "C~");
  const Graph c7 = cycle_graph(7);
  CHECK(c7.size() == 7);
  CHECK(girth(c7) == 7);

  const Graph kt = k4_with_trees({3, 0, 2, 1}, 9);
  CHECK(kt.order() == 10);
  CHECK(kt.size() == 12);
  CHECK(testing::k4_with_trees(kt));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_regular(12, 3, seed);
    for (Vertex v = 0; v < 12; ++v) CHECK(g.degree(v) == 3);
  }
  CHECK(write_graph6(random_regular(12, 3, 7)) == write_graph6(random_regular(12, 3, 7)));
  CHECK(random_regular(7, 6, 1).size() == 21);
  CHECK_THROWS_AS(random_regular(5, 3, 1), Error);

  const Graph lg = line_graph(star_graph(4));
  CHECK(lg.order() == 4);
  CHECK(lg.size() == 6);
  CHECK(circulant_graph(8, {1, 2}).size() == 16);
}
