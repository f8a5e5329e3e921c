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

#include "cyclesmith/error.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/verify.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cyclesmith;

namespace {

void check_witness(const Graph& g, const OracleResult& r) {
  CHECK(r.witness.size() == r.value);
  const Decomposition d{r.witness};
  if (r.metric == Metric::GCE) {
    CHECK(verify_cover(g, Cover{r.witness}, {PartKind::Cycle, PartKind::SingleEdge}).ok());
  } else if (r.metric == Metric::RE) {
    CHECK(verify_decomposition(g, d, {PartKind::TwoRegular, PartKind::Cycle, PartKind::SingleEdge}).ok());
  } else {
    CHECK(verify_decomposition(g, d, {PartKind::Cycle, PartKind::SingleEdge}).ok());
  }
}

}  // namespace

TEST_CASE("pinned oracle values") {
  CHECK(exact_ce(complete_graph(3)).value == 1);
  CHECK(exact_ce(path_graph(4)).value == 3);
  const OracleResult pet = exact_ce(petersen_graph());
  CHECK(pet.value == 7);
  check_witness(petersen_graph(), pet);

  CHECK(exact_re(complete_graph(4)).value == 3);
  CHECK(exact_re(complete_graph(5)).value == 2);
  CHECK(exact_re(testing::k13()).value == 3);

  CHECK(exact_gce(cycle_graph(5)).value == 1);
  CHECK(exact_gce(path_graph(4)).value == 3);
  CHECK(exact_gce(complete_graph(4)).value == 2);
}

TEST_CASE("ce agrees with the subset DP oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      const OracleResult ce = exact_ce(g);
      CHECK(static_cast<int>(ce.value) == testing::brute_ce(g));
      check_witness(g, ce);
      const OracleResult re = exact_re(g);
      const OracleResult gce = exact_gce(g);
      check_witness(g, re);
      check_witness(g, gce);
      CHECK(re.value <= ce.value);
      CHECK(gce.value <= ce.value);
    });
  }
}

TEST_CASE("oracle limits are enforced") {
  ExactLimits limits;
  limits.oracle_max_edges = 5;
  try {
    exact_ce(complete_graph(4), limits);
    FAIL("expected LimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
  limits = ExactLimits{};
  limits.oracle_max_candidates = 3;
  CHECK_THROWS_AS(exact_gce(complete_graph(5), limits), Error);
}

TEST_CASE("metric names round-trip") {
  for (Metric m : {Metric::CE, Metric::RE, Metric::GCE}) {
    CHECK(metric_from_string(to_string(m)) == m);
    CHECK(exact(cycle_graph(4), m).metric == m);
  }
  CHECK_FALSE(metric_from_string("xx").has_value());
}
