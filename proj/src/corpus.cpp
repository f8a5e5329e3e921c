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

#include "cyclesmith/corpus.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <random>
#include <string>
#include <thread>
#include <tuple>

#include "cyclesmith/algorithms.hpp"
#include "cyclesmith/cover.hpp"
#include "cyclesmith/decomposer.hpp"
#include "cyclesmith/error.hpp"
#include "cyclesmith/even_split.hpp"
#include "cyclesmith/generators.hpp"
#include "cyclesmith/graph_io.hpp"
#include "cyclesmith/regular_decomp.hpp"
#include "cyclesmith/verify.hpp"

namespace cyclesmith {
namespace {

using Adj = std::uint32_t;  // neighbour bitmask, n <= 8 in exhaustive mode

bool adj_connected(const std::vector<Adj>& adj, int n) {
  if (n == 0) return true;
  Adj seen = 1;
  Adj frontier = 1;
  while (frontier != 0) {
    Adj next = 0;
    for (Adj f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (Adj{1} << n) - 1;
}

bool adj_claw_free(const std::vector<Adj>& adj, int n) {
  for (int v = 0; v < n; ++v) {
    for (Adj a = adj[v]; a != 0; a &= a - 1) {
      const int x = std::countr_zero(a);
      for (Adj b = a & (a - 1); b != 0; b &= b - 1) {
        const int y = std::countr_zero(b);
        if (adj[x] >> y & 1) continue;
        if ((b & (b - 1) & adj[v] & ~adj[x] & ~adj[y]) != 0) return false;
      }
    }
  }
  return true;
}

bool adj_passes(const std::vector<Adj>& adj, int n, CorpusFilter filter) {
  if (!adj_connected(adj, n)) return false;
  int edges2 = 0;
  bool even = true;
  int top = 0;
  for (int v = 0; v < n; ++v) {
    const int d = std::popcount(adj[v]);
    edges2 += d;
    even = even && d % 2 == 0;
    top = std::max(top, d);
  }
  const int m = edges2 / 2;
  switch (filter) {
    case CorpusFilter::Connected: return true;
    case CorpusFilter::MaxDeg4: return top <= 4;
    case CorpusFilter::ClawFree: return adj_claw_free(adj, n);
    case CorpusFilter::Even: return even;
    case CorpusFilter::NonTree: return m >= n;
    case CorpusFilter::Tree: return m == n - 1;
  }
  return false;
}

Graph from_adj(const std::vector<Adj>& adj, int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (Adj a = adj[u] >> (u + 1); a != 0; a &= a - 1) edges.push_back({u, u + 1 + std::countr_zero(a)});
  }
  return Graph(n, edges);
}

std::size_t forest_components(const Graph& g, const EdgeSet& f) {
  return static_cast<std::size_t>(edge_components(g, f).count);
}

CorpusRecord run_check(const Graph& g, TheoremCheck check, const ExactLimits& limits) {
  CorpusRecord r;
  r.order = g.order();
  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t comps = static_cast<std::size_t>(connected_components(g).count);
  const bool cyclic = !is_forest(g);
  auto fail_if = [&](bool bad, const std::string& why) {
    if (bad && r.detail.empty()) r.detail = why;
  };
  switch (check) {
    case TheoremCheck::MaxDeg4: {
      const Decomposition d = decompose_maxdeg4(g);
      r.method = "maxdeg4";
      r.parts = d.size();
      r.bound = n - comps;
      const Verdict v = verify_decomposition(g, d, {PartKind::Cycle, PartKind::SingleEdge});
      fail_if(!v.ok(), v.describe());
      break;
    }
    case TheoremCheck::EvenDelta: {
      const Decomposition d = even_to_two_regular(g);
      r.method = "even2reg";
      r.parts = d.size();
      r.bound = static_cast<std::size_t>(g.max_degree() / 2);
      const Verdict v = verify_decomposition(g, d, {PartKind::TwoRegular});
      fail_if(!v.ok(), v.describe());
      fail_if(r.parts != r.bound, "part count differs from max_degree / 2");
      break;
    }
    case TheoremCheck::Eulerian: {
      const SplitCertificate s = even_forest_split(g);
      r.method = std::string(to_string(s.classification));
      r.parts = s.forest.size();
      r.bound = cyclic ? n - 2 : n - comps;
      const Verdict v = verify_decomposition(g, s.as_decomposition(), {PartKind::Even, PartKind::SingleEdge});
      fail_if(!v.ok(), v.describe());
      fail_if(s.forest.size() + forest_components(g, s.forest) != n, "leftover is not a forest");
      break;
    }
    case TheoremCheck::N3: {
      const SplitCertificate s = classify_n3(g, limits);
      r.method = std::string(to_string(s.classification));
      r.parts = s.forest.size();
      const Verdict v = verify_decomposition(g, s.as_decomposition(), {PartKind::Even, PartKind::SingleEdge});
      fail_if(!v.ok(), v.describe());
      fail_if(s.forest.size() + forest_components(g, s.forest) != n, "leftover is not a forest");
      if (s.classification == Classification::TypeII) {
        r.bound = n - 2;
        fail_if(!s.k4 || !check_k4_with_trees(g, s.k4->vertices), "type II witness is not K4 with trees");
      } else {
        r.bound = n - 3;
        fail_if(s.classification != Classification::TypeI, "unexpected classification");
      }
      break;
    }
    case TheoremCheck::ClawFree: {
      const DecomposeResult d = decompose_clawfree(g, limits);
      r.method = d.bound_guaranteed ? "clawfree" : "clawfree-heuristic";
      r.parts = d.decomposition.size();
      r.bound = n - comps;
      const Verdict v = verify_decomposition(g, d.decomposition, {PartKind::TwoRegular, PartKind::SingleEdge});
      fail_if(!v.ok(), v.describe());
      break;
    }
    case TheoremCheck::Cover: {
      const CoverResult c = cover_cycles_edges(g, limits);
      r.method = c.bound_guaranteed ? "cover" : "cover-heuristic";
      r.parts = c.cover.size();
      r.bound = comps == 1 && cyclic ? n - 2 : n - comps;
      const Verdict v = verify_cover(g, c.cover, {PartKind::Cycle, PartKind::SingleEdge});
      fail_if(!v.ok(), v.describe());
      break;
    }
    case TheoremCheck::Fan: {
      const EvenCoverResult c = even_cycle_cover(g, limits);
      r.method = c.minimum ? "exact" : "heuristic";
      r.parts = c.cover.size();
      r.bound = n >= 1 ? (n - 1) / 2 : 0;
      const Verdict v = verify_cover(g, c.cover, {PartKind::Cycle});
      fail_if(!v.ok(), v.describe());
      break;
    }
  }
  fail_if(check != TheoremCheck::EvenDelta && r.parts > r.bound,
          std::to_string(r.parts) + " exceeds the bound " + std::to_string(r.bound));
  r.ok = r.detail.empty();
  return r;
}

struct Shard {
  std::vector<CorpusRecord> records;
  std::vector<CorpusRecord> failures;
  std::uint64_t generated = 0;
  std::uint64_t checked = 0;
  double max_ratio = 0;

  void add(const Graph& g, const CorpusOptions& o) {
    CorpusRecord r = check_theorem(g, o.check, o.limits);
    ++checked;
    if (g.order() > 1) max_ratio = std::max(max_ratio, static_cast<double>(r.parts) / (g.order() - 1));
    if (!r.ok) failures.push_back(r);
    if (o.keep_records) records.push_back(std::move(r));
  }
};

Graph random_candidate(int n, CorpusFilter filter, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::uint64_t seed = rng();
  switch (filter) {
    case CorpusFilter::Tree: {
      std::vector<Edge> e;
      for (int v = 1; v < n; ++v) e.push_back({static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v});
      return Graph(n, e);
    }
    case CorpusFilter::MaxDeg4:
      return random_gnp(n, std::min(1.0, (1.0 + 2.0 * unit(rng)) / std::max(1, n - 1)), seed);
    case CorpusFilter::Even: {
      // Random graph on n-1 vertices; the last vertex fixes every odd degree.
      const Graph base = random_gnp(n - 1, 0.2 + 0.6 * unit(rng), seed);
      std::vector<Edge> e(base.edges().begin(), base.edges().end());
      for (Vertex v = 0; v + 1 < n; ++v) {
        if (base.degree(v) % 2 == 1) e.push_back({v, n - 1});
      }
      return Graph(n, e);
    }
    default:
      return random_gnp(n, 0.05 + 0.9 * unit(rng), seed);
  }
}

}  // namespace

std::string_view to_string(CorpusFilter f) {
  switch (f) {
    case CorpusFilter::Connected: return "connected";
    case CorpusFilter::MaxDeg4: return "maxdeg4";
    case CorpusFilter::ClawFree: return "clawfree";
    case CorpusFilter::Even: return "even";
    case CorpusFilter::NonTree: return "nontree";
    case CorpusFilter::Tree: return "tree";
  }
  return "?";
}

std::optional<CorpusFilter> corpus_filter_from_string(std::string_view name) {
  for (CorpusFilter f : {CorpusFilter::Connected, CorpusFilter::MaxDeg4, CorpusFilter::ClawFree, CorpusFilter::Even,
                         CorpusFilter::NonTree, CorpusFilter::Tree}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(TheoremCheck c) {
  switch (c) {
    case TheoremCheck::MaxDeg4: return "thm-maxdeg4";
    case TheoremCheck::EvenDelta: return "thm-evendelta";
    case TheoremCheck::Eulerian: return "thm-eulerian";
    case TheoremCheck::N3: return "thm-n3";
    case TheoremCheck::ClawFree: return "thm-clawfree";
    case TheoremCheck::Cover: return "thm-cover";
    case TheoremCheck::Fan: return "thm-fan";
  }
  return "?";
}

std::optional<TheoremCheck> theorem_check_from_string(std::string_view name) {
  for (TheoremCheck c : {TheoremCheck::MaxDeg4, TheoremCheck::EvenDelta, TheoremCheck::Eulerian, TheoremCheck::N3,
                         TheoremCheck::ClawFree, TheoremCheck::Cover, TheoremCheck::Fan}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

bool passes_filter(const Graph& g, CorpusFilter filter) {
  if (!is_connected(g)) return false;
  switch (filter) {
    case CorpusFilter::Connected: return true;
    case CorpusFilter::MaxDeg4: return g.max_degree() <= 4;
    case CorpusFilter::ClawFree: return !find_claw(g).has_value();
    case CorpusFilter::Even: return is_even(g);
    case CorpusFilter::NonTree: return !is_forest(g);
    case CorpusFilter::Tree: return is_forest(g);
  }
  return false;
}

int max_exhaustive_order(CorpusFilter filter) { return filter == CorpusFilter::Even ? 8 : 7; }

std::uint64_t for_each_labeled_graph(int n, CorpusFilter filter, const std::function<void(const Graph&)>& visit,
                                     unsigned shard, unsigned shards) {
  if (n < 1 || n > max_exhaustive_order(filter)) {
    throw Error(ErrorKind::InvalidParams, "exhaustive enumeration supports 1 <= n <= " +
                                              std::to_string(max_exhaustive_order(filter)));
  }
  const bool even = filter == CorpusFilter::Even;
  const int free_vertices = even ? n - 1 : n;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < free_vertices; ++u) {
    for (int v = u + 1; v < free_vertices; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t generated = 0;
  std::vector<Adj> adj(n);
  for (std::uint64_t mask = shard; mask < total; mask += shards) {
    ++generated;
    std::fill(adj.begin(), adj.end(), 0);
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
      const auto [u, v] = pairs[std::countr_zero(b)];
      adj[u] |= Adj{1} << v;
      adj[v] |= Adj{1} << u;
    }
    if (even) {
      for (int v = 0; v + 1 < n; ++v) {
        if (std::popcount(adj[v]) % 2 == 1) {
          adj[v] |= Adj{1} << (n - 1);
          adj[n - 1] |= Adj{1} << v;
        }
      }
    }
    if (adj_passes(adj, n, filter)) visit(from_adj(adj, n));
  }
  return generated;
}

CorpusRecord check_theorem(const Graph& g, TheoremCheck check, const ExactLimits& limits) {
  try {
    CorpusRecord r = run_check(g, check, limits);
    r.graph6 = g.order() <= kMaxGraph6Order ? write_graph6(g) : write_edge_list(g);
    return r;
  } catch (const std::exception& e) {
    CorpusRecord r;
    r.graph6 = g.order() <= kMaxGraph6Order ? write_graph6(g) : write_edge_list(g);
    r.order = g.order();
    r.detail = e.what();
    return r;
  }
}

std::uint64_t CorpusReport::total_checked() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : checked) t += c;
  return t;
}

CorpusReport run_corpus(const CorpusOptions& o) {
  if (o.min_n < 1 || o.max_n < o.min_n) throw Error(ErrorKind::InvalidParams, "need 1 <= min-n <= max-n");
  const unsigned threads = std::max(1u, o.threads);
  CorpusReport report;
  report.exhaustive = o.samples == 0 && o.max_n <= max_exhaustive_order(o.filter);
  const std::size_t samples = o.samples == 0 ? 1000 : o.samples;
  report.generated.assign(o.max_n + 1, 0);
  report.checked.assign(o.max_n + 1, 0);

  for (int n = o.min_n; n <= o.max_n; ++n) {
    std::vector<Shard> shards(threads);
    auto work = [&](unsigned s) {
      Shard& mine = shards[s];
      if (report.exhaustive) {
        mine.generated = for_each_labeled_graph(n, o.filter, [&](const Graph& g) { mine.add(g, o); }, s, threads);
        return;
      }
      for (std::size_t i = s; i < samples; i += threads) {
        std::mt19937_64 rng(o.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n) * 1000003ULL + i);
        for (int attempt = 0; attempt < 10000; ++attempt) {
          ++mine.generated;
          const Graph g = random_candidate(n, o.filter, rng);
          if (passes_filter(g, o.filter)) {
            mine.add(g, o);
            break;
          }
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned s = 0; s < threads; ++s) pool.emplace_back(work, s);
      for (std::thread& t : pool) t.join();
    }
    for (Shard& sh : shards) {
      report.generated[n] += sh.generated;
      report.checked[n] += sh.checked;
      report.max_ratio = std::max(report.max_ratio, sh.max_ratio);
      std::move(sh.records.begin(), sh.records.end(), std::back_inserter(report.records));
      std::move(sh.failures.begin(), sh.failures.end(), std::back_inserter(report.failures));
    }
  }
  auto by_key = [](const CorpusRecord& a, const CorpusRecord& b) {
    return std::tie(a.order, a.graph6) < std::tie(b.order, b.graph6);
  };
  std::sort(report.records.begin(), report.records.end(), by_key);
  std::sort(report.failures.begin(), report.failures.end(), by_key);
  return report;
}

}  // namespace cyclesmith
