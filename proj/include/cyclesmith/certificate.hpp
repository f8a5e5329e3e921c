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

#ifndef CYCLESMITH_CERTIFICATE_HPP
#define CYCLESMITH_CERTIFICATE_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclesmith/graph.hpp"

namespace cyclesmith {

enum class PartKind : std::uint8_t { Cycle, SingleEdge, TwoRegular, Even };

std::string_view to_string(PartKind kind);
std::optional<PartKind> part_kind_from_string(std::string_view name);

class PartKindSet {
 public:
  constexpr PartKindSet() = default;
  constexpr PartKindSet(std::initializer_list<PartKind> kinds) {
    for (PartKind k : kinds) bits_ |= bit(k);
  }

  static constexpr PartKindSet all() {
    return {PartKind::Cycle, PartKind::SingleEdge, PartKind::TwoRegular, PartKind::Even};
  }

  constexpr bool contains(PartKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr void insert(PartKind k) { bits_ |= bit(k); }

 private:
  static constexpr std::uint8_t bit(PartKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

struct Part {
  PartKind kind = PartKind::Cycle;
  EdgeSet edges;
  /// Set for 2-factors: the part touches every vertex of the graph.
  bool spanning = false;
};

/// Parts partition the edge set.
struct Decomposition {
  std::vector<Part> parts;

  std::size_t size() const { return parts.size(); }
};

/// Parts cover the edge set; overlaps allowed.
struct Cover {
  std::vector<Part> parts;

  std::size_t size() const { return parts.size(); }
};

/// Per-edge part index (the last part containing the edge wins), -1 if none.
std::vector<int> part_of_edge(const Graph& g, const std::vector<Part>& parts);

}  // namespace cyclesmith

#endif  // CYCLESMITH_CERTIFICATE_HPP
