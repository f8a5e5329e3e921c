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

#include "cyclesmith/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "cyclesmith/error.hpp"

namespace cyclesmith {
namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidParams,
                "bad value for limit '" + std::string(key) + "': " + std::string(text));
  }
  return value;
}

}  // namespace

ExactLimits ExactLimits::parse(std::string_view spec, ExactLimits limits) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidParams, "limit override must be key=value: " + std::string(item));
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "linkage") {
      limits.max_odd_vertices = parse_number<int>(key, value);
    } else if (key == "cover") {
      limits.max_cover_edges = parse_number<int>(key, value);
    } else if (key == "oracle_edges") {
      limits.oracle_max_edges = parse_number<int>(key, value);
    } else if (key == "oracle_candidates") {
      limits.oracle_max_candidates = parse_number<std::size_t>(key, value);
    } else if (key == "longest_cycle") {
      limits.longest_cycle_max_order = parse_number<int>(key, value);
    } else if (key == "pairings") {
      limits.max_optimal_pairings = parse_number<std::size_t>(key, value);
    } else {
      throw Error(ErrorKind::InvalidParams, "unknown limit '" + std::string(key) + "'");
    }
  }
  return limits;
}

ExactLimits ExactLimits::from_env() {
  const char* spec = std::getenv("CYCLESMITH_EXACT_LIMITS");
  if (spec == nullptr) return ExactLimits{};
  return parse(spec);
}

}  // namespace cyclesmith
