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

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cyclesmith/cli.hpp"

using cyclesmith::run_cli;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("decompose subcommand") {
  Run r = run({"decompose", "Bw", "--method", "greedy"});
  CHECK(r.code == 0);
  Json j = r.json();
  REQUIRE(j["parts"].size() == 1);
  CHECK(j["parts"][0]["kind"] == "Cycle");
  CHECK(j["method"] == "greedy");

  r = run({"decompose", "Cl", "--method", "even2reg"});
  CHECK(r.code == 0);
  j = r.json();
  REQUIRE(j["parts"].size() == 1);
  CHECK(j["parts"][0]["kind"] == "TwoRegular");
  CHECK(j["parts"][0]["edges"].size() == 4);

  r = run({"decompose", "--method", "clawfree"}, "4 3\n0 1\n0 2\n0 3\n");
  CHECK(r.code == 3);
  j = r.json();
  CHECK(j["error"] == "NotClawFree");
  CHECK(j["claw"]["center"] == 0);
  CHECK(j["claw"]["leaves"] == Json::array({1, 2, 3}));

  r = run({"decompose", "D~{", "--format", "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"decompose", "B"}).code == 2);
  CHECK(run({"decompose", "Bw", "--method", "nope"}).code == 2);
  CHECK(run({"gen", "random-regular", "5", "3"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"decompose", "Bw", "--limits", "linkage=x"}).code == 2);
}

TEST_CASE("cover, split, linkage and oracle subcommands") {
  Run r = run({"cover", "C~"});
  CHECK(r.code == 0);
  CHECK(r.json()["parts"].size() == 2);

  r = run({"split", "C~", "--mode", "n3"});
  CHECK(r.code == 0);
  CHECK(r.json()["classification"] == "type_ii");

  r = run({"linkage", "C~"});
  CHECK(r.code == 0);
  CHECK(r.json()["total_edges"] == 2);
  CHECK(r.json()["vertex_disjoint"] == true);

  r = run({"oracle", "C~", "--metric", "re"});
  CHECK(r.code == 0);
  CHECK(r.json()["value"] == 3);

  r = run({"oracle", "C~", "--metric", "ce", "--limits", "oracle_edges=3"});
  CHECK(r.code == 3);
}

TEST_CASE("verify subcommand") {
  const std::string good = R"({"graph": "C~", "mode": "decomposition", "parts": [
    {"kind": "TwoRegular", "edges": [[0,1],[1,2],[2,3],[0,3]]},
    {"kind": "SingleEdge", "edges": [[0,2]]},
    {"kind": "SingleEdge", "edges": [[1,3]]}]})";
  Run r = run({"verify", good});
  CHECK(r.code == 0);
  CHECK(r.json()["ok"] == true);

  r = run({"verify", "-", "--kinds", "Cycle,SingleEdge"}, good);
  CHECK(r.code == 1);

  const std::string short_cover = R"({"graph": "C~", "mode": "cover", "parts": [
    {"kind": "Cycle", "edges": [[0,1],[1,2],[2,3],[0,3]]}]})";
  r = run({"verify", short_cover});
  CHECK(r.code == 1);
  CHECK(r.json()["violations"].size() == 2);

  CHECK(run({"verify", "{not json"}).code == 2);
}

TEST_CASE("decompose output round-trips through verify") {
  for (const char* g : {"Bw", "Cl", "C~", "D~{", "IheA@GUAo"}) {
    const Run d = run({"decompose", g});
    REQUIRE(d.code == 0);
    CHECK(run({"verify", d.out}).code == 0);
    const Run c = run({"cover", g});
    REQUIRE(c.code == 0);
    CHECK(run({"verify", c.out}).code == 0);
  }
}

TEST_CASE("gen subcommand") {
  Run r = run({"gen", "petersen", "--format", "edgelist"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("10 15\n", 0) == 0);
  CHECK(run({"gen", "k4trees", "0", "0", "0", "0"}).out == "C~\n");
  CHECK(run({"gen", "cycle", "3"}).out == "Bw\n");
  CHECK(run({"gen", "random-regular", "8", "3", "--seed", "4"}).out ==
        run({"gen", "random-regular", "8", "3", "--seed", "4"}).out);
  r = run({"gen", "random-regular", "100", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("100 200\n", 0) == 0);
}

TEST_CASE("corpus subcommand") {
  Run r = run({"corpus", "--max-n", "5", "--filter", "maxdeg4", "--check", "thm-maxdeg4"});
  CHECK(r.code == 0);
  CHECK(r.json()["failures"].empty());

  r = run({"corpus", "--max-n", "6", "--filter", "even", "--check", "thm-evendelta", "--records"});
  CHECK(r.code == 0);
  for (const Json& rec : r.json()["records"]) CHECK(rec["parts"] == rec["bound"]);

  r = run({"corpus", "--max-n", "5", "--filter", "nontree", "--check", "thm-cover"});
  CHECK(r.code == 0);
  CHECK(r.json()["ok"] == true);

  CHECK(run({"corpus", "--max-n", "5", "--check", "thm-nope"}).code == 2);
}
