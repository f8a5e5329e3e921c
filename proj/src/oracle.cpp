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

#include "cyclesmith/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

using Bits = std::uint64_t;

struct Candidate {
  Bits edges = 0;
  Bits vertices = 0;
  int size = 0;
};

EdgeSet bits_to_edges(Bits b) {
  EdgeSet out;
  for (; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

void check_size(const Graph& g, const ExactLimits& limits) {
  if (g.size() > limits.oracle_max_edges || g.size() > 64 || g.order() > 64) {
    throw Error(ErrorKind::LimitExceeded, std::to_string(g.size()) + " edges exceed the oracle limit of " +
                                              std::to_string(limits.oracle_max_edges));
  }
}

[[noreturn]] void too_many(const ExactLimits& limits) {
  throw Error(ErrorKind::LimitExceeded,
              "more than " + std::to_string(limits.oracle_max_candidates) + " candidate subgraphs");
}

// Each cycle is generated from its smallest vertex, in the direction whose
// first edge id is below its closing edge id.
std::vector<Candidate> all_cycles(const Graph& g, const ExactLimits& limits) {
  std::vector<Candidate> out;
  std::vector<char> on_path(g.order(), 0);
  Vertex root = 0;
  EdgeId first = -1;
  std::function<void(Vertex, Bits, Bits, int)> grow = [&](Vertex v, Bits edges, Bits verts, int len) {
    for (const Incidence& inc : g.incident(v)) {
      if (inc.to == root) {
        if (len >= 2 && first < inc.edge) {
          if (out.size() >= limits.oracle_max_candidates) too_many(limits);
          out.push_back({edges | Bits{1} << inc.edge, verts, len + 1});
        }
      } else if (inc.to > root && !on_path[inc.to]) {
        if (len == 0) first = inc.edge;
        on_path[inc.to] = 1;
        grow(inc.to, edges | Bits{1} << inc.edge, verts | Bits{1} << inc.to, len + 1);
        on_path[inc.to] = 0;
      }
    }
  };
  for (root = 0; root < g.order(); ++root) {
    on_path[root] = 1;
    grow(root, 0, Bits{1} << root, 0);
    on_path[root] = 0;
  }
  return out;
}

// Unions of pairwise vertex-disjoint cycles.
std::vector<Candidate> all_two_regular(const std::vector<Candidate>& cycles, const ExactLimits& limits) {
  std::vector<Candidate> out;
  std::function<void(std::size_t, Candidate)> extend = [&](std::size_t from, Candidate acc) {
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (acc.vertices & cycles[i].vertices) continue;
      Candidate next{acc.edges | cycles[i].edges, acc.vertices | cycles[i].vertices, acc.size + cycles[i].size};
      if (out.size() >= limits.oracle_max_candidates) too_many(limits);
      out.push_back(next);
      extend(i + 1, next);
    }
  };
  extend(0, Candidate{});
  return out;
}

// Edges grouped so that two edges share a group when some cycle holds both.
// Edges on no cycle get group -1.
std::vector<int> cycle_classes(const Graph& g, const std::vector<Candidate>& cycles) {
  std::vector<int> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  Bits cyclic = 0;
  for (const Candidate& c : cycles) {
    cyclic |= c.edges;
    const int a = find(std::countr_zero(c.edges));
    for (Bits b = c.edges; b != 0; b &= b - 1) parent[find(std::countr_zero(b))] = a;
  }
  std::vector<int> cls(g.size(), -1);
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (cyclic >> e & 1) cls[e] = find(e);
  }
  return cls;
}

class Search {
 public:
  Search(const Graph& g, std::vector<Candidate> cands, SearchStats& stats)
      : g_(g), cands_(std::move(cands)), stats_(stats), through_(g.size()), at_(g.order(), 0) {
    for (EdgeId e = 0; e < g.size(); ++e) {
      at_[g.edge(e).u] |= Bits{1} << e;
      at_[g.edge(e).v] |= Bits{1} << e;
    }
    for (std::size_t i = 0; i < cands_.size(); ++i) {
      longest_ = std::max(longest_, cands_[i].size);
      for (Bits b = cands_[i].edges; b != 0; b &= b - 1) through_[std::countr_zero(b)].push_back(static_cast<int>(i));
    }
    for (auto& list : through_) {
      std::stable_sort(list.begin(), list.end(), [&](int a, int b) { return cands_[a].size > cands_[b].size; });
    }
  }

  // Fewest candidates and single edges partitioning `edges`. Chosen parts go
  // to `picked` as candidate indices, or -1 - e for the single edge e.
  int partition(Bits edges, std::vector<int>& picked) {
    best_ = std::popcount(edges) + 1;
    current_.clear();
    split(edges, 0, true);
    picked = best_pick_;
    return best_;
  }

  // Fewest candidates covering `edges`; every edge must lie on a candidate.
  int cover(Bits edges, std::vector<int>& picked) {
    best_ = std::popcount(edges) + 1;
    current_.clear();
    cover_rec(edges, 0);
    picked = best_pick_;
    return best_;
  }

  const Candidate& candidate(int i) const { return cands_[i]; }

 private:
  int lower_bound(Bits rest, bool parity) const {
    int top = 0;
    int odd = 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const int d = std::popcount(rest & at_[v]);
      top = std::max(top, d);
      odd += d & 1;
    }
    const int len = std::max(longest_, 1);
    int lb = std::max((top + 1) / 2, (std::popcount(rest) + len - 1) / len);
    if (parity) lb = std::max(lb, odd / 2);
    return lb;
  }

  void split(Bits rest, int parts, bool parity) {
    ++stats_.nodes;
    if (rest == 0) {
      if (parts < best_) {
        best_ = parts;
        best_pick_ = current_;
      }
      return;
    }
    if (parts + lower_bound(rest, parity) >= best_) return;
    const EdgeId e = std::countr_zero(rest);
    for (int c : through_[e]) {
      if (cands_[c].edges & ~rest) continue;
      current_.push_back(c);
      split(rest & ~cands_[c].edges, parts + 1, parity);
      current_.pop_back();
    }
    current_.push_back(-1 - e);
    split(rest & ~(Bits{1} << e), parts + 1, parity);
    current_.pop_back();
  }

  void cover_rec(Bits open, int parts) {
    ++stats_.nodes;
    if (open == 0) {
      if (parts < best_) {
        best_ = parts;
        best_pick_ = current_;
      }
      return;
    }
    if (parts + lower_bound(open, false) >= best_) return;
    EdgeId e = -1;
    for (Bits b = open; b != 0; b &= b - 1) {
      const EdgeId x = std::countr_zero(b);
      if (e < 0 || through_[x].size() < through_[e].size()) e = x;
    }
    std::vector<int> order = through_[e];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(cands_[a].edges & open) > std::popcount(cands_[b].edges & open);
    });
    for (int c : order) {
      current_.push_back(c);
      cover_rec(open & ~cands_[c].edges, parts + 1);
      current_.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Candidate> cands_;
  SearchStats& stats_;
  std::vector<std::vector<int>> through_;
  std::vector<Bits> at_;
  int longest_ = 0;
  int best_ = 0;
  std::vector<int> current_;
  std::vector<int> best_pick_;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void emit(const Search& s, const std::vector<int>& picked, PartKind kind, std::vector<Part>& out) {
  for (int p : picked) {
    if (p < 0) {
      out.push_back(Part{PartKind::SingleEdge, {-1 - p}, false});
    } else {
      out.push_back(Part{kind, bits_to_edges(s.candidate(p).edges), false});
    }
  }
}

// Runs `solve` once per cycle class and adds the forced single edges.
template <typename Solve>
void per_class(const Graph& g, const std::vector<Candidate>& cycles, OracleResult& r, Solve solve) {
  const std::vector<int> cls = cycle_classes(g, cycles);
  std::vector<int> roots;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (cls[e] < 0) {
      r.witness.push_back(Part{PartKind::SingleEdge, {e}, false});
    } else if (std::find(roots.begin(), roots.end(), cls[e]) == roots.end()) {
      roots.push_back(cls[e]);
    }
  }
  for (int root : roots) {
    Bits edges = 0;
    for (EdgeId e = 0; e < g.size(); ++e) {
      if (cls[e] == root) edges |= Bits{1} << e;
    }
    solve(edges);
  }
  r.value = r.witness.size();
}

}  // namespace

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::CE: return "ce";
    case Metric::RE: return "re";
    case Metric::GCE: return "gce";
  }
  return "?";
}

std::optional<Metric> metric_from_string(std::string_view name) {
  for (Metric m : {Metric::CE, Metric::RE, Metric::GCE}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

OracleResult exact_ce(const Graph& g, const ExactLimits& limits) {
  check_size(g, limits);
  OracleResult r;
  r.metric = Metric::CE;
  const auto start = Clock::now();
  std::vector<Candidate> cycles = all_cycles(g, limits);
  r.stats.candidates = cycles.size();
  Search search(g, cycles, r.stats);
  per_class(g, cycles, r, [&](Bits edges) {
    std::vector<int> picked;
    search.partition(edges, picked);
    emit(search, picked, PartKind::Cycle, r.witness);
  });
  r.stats.seconds = since(start);
  return r;
}

OracleResult exact_gce(const Graph& g, const ExactLimits& limits) {
  check_size(g, limits);
  OracleResult r;
  r.metric = Metric::GCE;
  const auto start = Clock::now();
  std::vector<Candidate> cycles = all_cycles(g, limits);
  r.stats.candidates = cycles.size();
  Search search(g, cycles, r.stats);
  per_class(g, cycles, r, [&](Bits edges) {
    std::vector<int> picked;
    search.cover(edges, picked);
    emit(search, picked, PartKind::Cycle, r.witness);
  });
  r.stats.seconds = since(start);
  return r;
}

OracleResult exact_re(const Graph& g, const ExactLimits& limits) {
  check_size(g, limits);
  OracleResult r;
  r.metric = Metric::RE;
  const auto start = Clock::now();
  const std::vector<Candidate> cycles = all_cycles(g, limits);
  std::vector<Candidate> sets = all_two_regular(cycles, limits);
  r.stats.candidates = sets.size();
  Bits cyclic = 0;
  for (const Candidate& c : cycles) cyclic |= c.edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!(cyclic >> e & 1)) r.witness.push_back(Part{PartKind::SingleEdge, {e}, false});
  }
  // A 2-regular part may join cycles of different classes, so the search is
  // over all cyclic edges at once.
  Search search(g, std::move(sets), r.stats);
  std::vector<int> picked;
  search.partition(cyclic, picked);
  emit(search, picked, PartKind::TwoRegular, r.witness);
  r.value = r.witness.size();
  r.stats.seconds = since(start);
  return r;
}

OracleResult exact(const Graph& g, Metric metric, const ExactLimits& limits) {
  switch (metric) {
    case Metric::CE: return exact_ce(g, limits);
    case Metric::RE: return exact_re(g, limits);
    case Metric::GCE: return exact_gce(g, limits);
  }
  throw Error(ErrorKind::InvalidParams, "unknown metric");
}

}  // namespace cyclesmith
