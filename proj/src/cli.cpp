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

#include "cyclesmith/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/corpus.hpp"
#include "cyclesmith/cover.hpp"
#include "cyclesmith/decomposer.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/even_split.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph_io.hpp"
#include "cyclesmith/json_io.hpp"
#include "cyclesmith/limits.hpp"
#include "cyclesmith/odd_linkage.hpp"
#include "cyclesmith/oracle.hpp"
#include "cyclesmith/verify.hpp"

namespace cyclesmith {
namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedGraph6:
    case ErrorKind::MalformedEdgeList:
    case ErrorKind::Unsupported:
    case ErrorKind::InvalidGraph:
    case ErrorKind::InvalidParams:
      return kExitInputError;
    default:
      return kExitPrecondition;
  }
}

// A file path if such a file exists, "-" or empty for `in`, else the text itself.
std::string read_input(const std::string& arg, std::istream& in) {
  std::ostringstream buf;
  if (arg.empty() || arg == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidParams, "cannot read " + arg);
    buf << file.rdbuf();
    return buf.str();
  }
  return arg;
}

PartKindSet parse_kinds(const std::string& list) {
  if (list.empty()) return PartKindSet::all();
  PartKindSet kinds;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto k = part_kind_from_string(name);
    if (!k) throw Error(ErrorKind::InvalidParams, "unknown part kind " + name);
    kinds.insert(*k);
  }
  return kinds;
}

int emit_parts(const Graph& g, const std::vector<Part>& parts, const Json& doc, const Verdict& verdict,
               const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "dot") {
    out << write_dot(g, part_of_edge(g, parts));
  } else {
    out << doc.dump(2) << '\n';
  }
  if (!verdict.ok()) {
    err << "certificate failed verification:\n" << verdict.describe();
    return kExitVerificationFailed;
  }
  return kExitOk;
}

Graph generate(const std::string& family, const std::vector<int>& p, std::uint64_t seed) {
  auto need = [&](std::size_t count) {
    if (p.size() < count) {
      throw Error(ErrorKind::InvalidParams, family + " needs " + std::to_string(count) + " parameter(s)");
    }
  };
  if (family == "path") return need(1), path_graph(p[0]);
  if (family == "cycle") return need(1), cycle_graph(p[0]);
  if (family == "complete") return need(1), complete_graph(p[0]);
  if (family == "star") return need(1), star_graph(p[0]);
  if (family == "petersen") return petersen_graph();
  if (family == "k4trees") {
    std::array<int, 4> sizes{0, 0, 0, 0};
    for (std::size_t i = 0; i < std::min<std::size_t>(4, p.size()); ++i) sizes[i] = p[i];
    return k4_with_trees(sizes, seed);
  }
  if (family == "random-regular") return need(2), random_regular(p[0], p[1], seed);
  if (family == "circulant") {
    need(2);
    return circulant_graph(p[0], std::vector<int>(p.begin() + 1, p.end()));
  }
  throw Error(ErrorKind::InvalidParams, "unknown family " + family);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose and cover graphs by cycles, 2-regular subgraphs and edges, with checkable certificates.",
               "cyclesmith"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string limits_spec;
  app.add_option("--limits", limits_spec,
                 "exact-search limits, e.g. linkage=18,cover=28,oracle_edges=20 (overrides CYCLESMITH_EXACT_LIMITS)");

  std::string input;
  std::string format = "json";
  const auto formats = CLI::IsMember({"json", "dot"});

  auto* decompose = app.add_subcommand("decompose", "partition the edges into cycles / 2-regular parts and edges");
  std::string method = "auto";
  decompose->add_option("input", input, "graph6 string, graph file, or - for stdin (default)");
  decompose->add_option("--method", method, "auto|maxdeg4|clawfree|even2reg|greedy")
      ->check(CLI::IsMember({"auto", "maxdeg4", "clawfree", "even2reg", "greedy"}));
  decompose->add_option("--format", format, "json|dot")->check(formats);

  auto* cover = app.add_subcommand("cover", "cover the edges by cycles and edges");
  cover->add_option("input", input, "graph6 string, graph file, or - for stdin (default)");
  cover->add_option("--format", format, "json|dot")->check(formats);

  auto* split = app.add_subcommand("split", "split into an even subgraph and a forest");
  std::string split_mode = "eulerian";
  split->add_option("input", input, "graph6 string, graph file, or - for stdin (default)");
  split->add_option("--mode", split_mode, "eulerian: |F| <= n-2 split; n3: minimum forest with classification")
      ->check(CLI::IsMember({"eulerian", "n3"}));

  auto* linkage = app.add_subcommand("linkage", "join the odd-degree vertices by paths");
  std::string linkage_mode = "min";
  linkage->add_option("input", input, "graph6 string, graph file, or - for stdin (default)");
  linkage->add_option("--mode", linkage_mode,
                      "min: minimum total length; initial: BFS pairing; edge / vertex: pairing reduced to "
                      "edge- / vertex-disjoint paths")
      ->check(CLI::IsMember({"min", "initial", "edge", "vertex"}));

  auto* verify = app.add_subcommand("verify", "check a certificate JSON document");
  std::string kinds;
  verify->add_option("certificate", input, "certificate file, JSON text, or - for stdin (default)");
  verify->add_option("--kinds", kinds, "comma-separated allowed part kinds (default: all)");

  auto* oracle = app.add_subcommand("oracle", "exact ce / re / gce by exhaustive search (small graphs)");
  std::string metric = "ce";
  oracle->add_option("input", input, "graph6 string, graph file, or - for stdin (default)");
  oracle->add_option("--metric", metric, "ce|re|gce")->check(CLI::IsMember({"ce", "re", "gce"}));

  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  std::string gen_format = "graph6";
  gen->add_option("family", family, "path|cycle|complete|star|petersen|k4trees|random-regular|circulant")->required();
  gen->add_option("params", params, "family parameters, e.g. n (path/cycle/complete), n k (random-regular)");
  gen->add_option("--seed", seed, "random seed");
  auto* gen_format_opt = gen->add_option("--format", gen_format, "graph6|edgelist|dot (graph6 up to 62 vertices, else edgelist)")->check(CLI::IsMember({"graph6", "edgelist", "dot"}));

  auto* corpus = app.add_subcommand("corpus", "check a bound over every small labeled graph of a class");
  CorpusOptions copt;
  copt.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string filter = "connected";
  std::string check;
  corpus->add_option("--max-n", copt.max_n, "largest order")->required();
  corpus->add_option("--min-n", copt.min_n, "smallest order");
  corpus->add_option("--filter", filter, "connected|maxdeg4|clawfree|even|nontree|tree")
      ->check(CLI::IsMember({"connected", "maxdeg4", "clawfree", "even", "nontree", "tree"}));
  corpus->add_option("--check", check, "thm-maxdeg4|thm-evendelta|thm-eulerian|thm-n3|thm-clawfree|thm-cover|thm-fan")
      ->required()
      ->check(CLI::IsMember({"thm-maxdeg4", "thm-evendelta", "thm-eulerian", "thm-n3", "thm-clawfree", "thm-cover",
                             "thm-fan"}));
  corpus->add_flag("--records", copt.keep_records, "include every checked graph in the report");
  corpus->add_option("--samples", copt.samples, "random graphs per order (forces random mode)");
  corpus->add_option("--seed", copt.seed, "seed for random mode");
  corpus->add_option("--threads", copt.threads, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    ExactLimits limits = ExactLimits::from_env();
    if (!limits_spec.empty()) limits = ExactLimits::parse(limits_spec, limits);

    if (gen->parsed()) {
      const Graph g = generate(family, params, seed);
      if (gen_format_opt->count() == 0 && g.order() > kMaxGraph6Order) gen_format = "edgelist";
      if (gen_format == "edgelist") {
        out << write_edge_list(g);
      } else if (gen_format == "dot") {
        out << write_dot(g);
      } else {
        out << write_graph6(g) << '\n';
      }
      return kExitOk;
    }

    if (corpus->parsed()) {
      copt.filter = *corpus_filter_from_string(filter);
      copt.check = *theorem_check_from_string(check);
      copt.limits = limits;
      const CorpusReport report = run_corpus(copt);
      out << corpus_to_json(copt, report).dump(2) << '\n';
      if (!report.ok()) {
        err << report.failures.size() << " graph(s) failed the check\n";
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      Json doc;
      try {
        doc = Json::parse(read_input(input, in));
      } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::InvalidParams, std::string("certificate is not JSON: ") + e.what());
      }
      const ParsedCertificate cert = certificate_from_json(doc);
      const PartKindSet allowed = parse_kinds(kinds);
      const Verdict v = cert.mode == "cover" ? verify_cover(cert.graph, Cover{cert.parts}, allowed)
                                             : verify_decomposition(cert.graph, Decomposition{cert.parts}, allowed);
      Json j = verdict_to_json(v);
      j["mode"] = cert.mode;
      j["parts"] = cert.parts.size();
      out << j.dump(2) << '\n';
      if (!v.ok()) err << v.describe();
      return v.ok() ? kExitOk : kExitVerificationFailed;
    }

    const Graph g = parse_graph_text(read_input(input, in));

    if (decompose->parsed()) {
      const DecomposeResult r =
          method == "auto" ? decompose_auto(g, limits) : decompose_with(g, *method_from_string(method), limits);
      const PartKindSet allowed = r.method == Method::EvenTwoRegular ? PartKindSet{PartKind::TwoRegular}
                                  : r.method == Method::ClawFree
                                      ? PartKindSet{PartKind::TwoRegular, PartKind::SingleEdge}
                                      : PartKindSet{PartKind::Cycle, PartKind::SingleEdge};
      const Verdict v = verify_decomposition(g, r.decomposition, allowed);
      return emit_parts(g, r.decomposition.parts, decompose_to_json(g, r), v, format, out, err);
    }

    if (cover->parsed()) {
      const CoverResult r = cover_cycles_edges(g, limits);
      const Verdict v = verify_cover(g, r.cover, {PartKind::Cycle, PartKind::SingleEdge});
      return emit_parts(g, r.cover.parts, cover_to_json(g, r), v, format, out, err);
    }

    if (split->parsed()) {
      const SplitCertificate s = split_mode == "n3" ? classify_n3(g, limits) : even_forest_split(g);
      const Verdict v = verify_decomposition(g, s.as_decomposition(), {PartKind::Even, PartKind::SingleEdge});
      const bool forest = static_cast<int>(s.forest.size()) + edge_components(g, s.forest).count == g.order();
      out << split_to_json(g, s).dump(2) << '\n';
      if (!v.ok() || !forest) {
        err << "split failed verification:\n" << v.describe() << (forest ? "" : "leftover is not a forest\n");
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (linkage->parsed()) {
      PathLinkage l;
      RewriteLog log;
      if (linkage_mode == "min") {
        l = min_linkage_exact(g, limits);
      } else if (linkage_mode == "initial") {
        l = initial_pairing(g);
      } else if (linkage_mode == "edge") {
        l = edge_disjoint_reduce(g, initial_pairing(g), &log);
      } else {
        l = vertex_disjoint_reduce(g, initial_pairing(g), &log);
      }
      std::string why;
      const bool valid = is_linkage(g, l, &why);
      Json j{{"graph", graph_to_json(g)},
             {"odd_vertices", odd_vertices(g)},
             {"paths", linkage_to_json(l)},
             {"total_edges", l.total_edges()},
             {"edge_disjoint", is_edge_disjoint(g, l)},
             {"vertex_disjoint", is_vertex_disjoint(g, l)}};
      if (!log.totals.empty()) j["rewrite_totals"] = log.totals;
      out << j.dump(2) << '\n';
      if (!valid) {
        err << "linkage failed verification: " << why << '\n';
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      const OracleResult r = exact(g, *metric_from_string(metric), limits);
      const bool is_cover = r.metric == Metric::GCE;
      const PartKindSet allowed = r.metric == Metric::RE ? PartKindSet{PartKind::TwoRegular, PartKind::SingleEdge}
                                                         : PartKindSet{PartKind::Cycle, PartKind::SingleEdge};
      const Verdict v = is_cover ? verify_cover(g, Cover{r.witness}, allowed)
                                 : verify_decomposition(g, Decomposition{r.witness}, allowed);
      return emit_parts(g, r.witness, oracle_to_json(g, r), v, "json", out, err);
    }
  } catch (const NotClawFreeError& e) {
    out << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"claw", claw_to_json(e.claw())}}
               .dump(2)
        << '\n';
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    if (code == kExitPrecondition) {
      out << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return code;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitInputError;
}

}  // namespace cyclesmith
