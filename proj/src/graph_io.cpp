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

#include "cyclesmith/graph_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty graph6 string");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Error(ErrorKind::MalformedGraph6,
                  "graph6 byte outside 63..126: " + std::to_string(b));
    }
  }
  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) {
    throw Error(ErrorKind::Unsupported, "graph6 with more than 62 vertices; use an edge list");
  }
  const int n = first - kGraph6Bias;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) {
    throw Error(ErrorKind::MalformedGraph6, "graph6 length " + std::to_string(text.size()) +
                                                " does not match n = " + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorKind::Unsupported, "graph6 output limited to 62 vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> payload((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // column-major upper triangle: bit index of (u, v), u < v
    const std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    payload[k / 6] |= 1 << (5 - k % 6);
  }
  std::string out;
  out.reserve(1 + payload.size());
  out.push_back(static_cast<char>(n + kGraph6Bias));
  for (int b : payload) out.push_back(static_cast<char>(b + kGraph6Bias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw Error(ErrorKind::MalformedEdgeList, "edge list must start with \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorKind::MalformedEdgeList,
                  "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    if (!(0 <= u && u < v && v < n)) {
      throw Error(ErrorKind::MalformedEdgeList, "edge line " + std::to_string(i + 1) +
                                                    " violates 0 <= u < v < n");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::MalformedEdgeList, "trailing data after edges");
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::MalformedEdgeList, e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_text(std::string_view text) {
  const std::string_view body = trim(text);
  const std::string_view line = body.substr(0, body.find('\n'));
  std::istringstream first{std::string(line)};
  long long a = 0, b = 0;
  if (first >> a >> b) return parse_edge_list(body);
  return parse_graph6(body);
}

std::string write_dot(const Graph& g, std::span<const int> part_of_edge) {
  static constexpr std::array<std::string_view, 10> kPalette = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
      "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (!part_of_edge.empty()) {
      const int p = part_of_edge[e];
      if (p >= 0) {
        out << " [part=" << p << ", color=\"" << kPalette[p % kPalette.size()] << "\"]";
      } else {
        out << " [part=-1, color=\"black\", style=dashed]";
      }
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cyclesmith
