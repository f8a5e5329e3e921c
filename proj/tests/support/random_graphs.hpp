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

// Random inputs for property tests, built from Graph alone.

#ifndef CYCLESMITH_TESTS_SUPPORT_RANDOM_GRAPHS_HPP
#define CYCLESMITH_TESTS_SUPPORT_RANDOM_GRAPHS_HPP

#include <random>
#include <vector>

#include "cyclesmith/graph.hpp"

namespace testing {

/// Connected claw-free graph on at most `max_order` vertices: the line graph
/// of a random connected graph, then a few edge deletions that keep it
/// connected and claw-free.
cyclesmith::Graph random_claw_free(std::mt19937_64& rng, int max_order = 12);

/// Simple path from a to b found by DFS with shuffled neighbour order.
/// Empty if b is unreachable.
std::vector<cyclesmith::Vertex> random_simple_path(const cyclesmith::Graph& g, cyclesmith::Vertex a,
                                                   cyclesmith::Vertex b, std::mt19937_64& rng);

/// Pairs the odd vertices of a connected graph in random order and joins
/// each pair by random_simple_path. Paths overlap freely.
std::vector<std::vector<cyclesmith::Vertex>> random_odd_pairing(const cyclesmith::Graph& g, std::mt19937_64& rng);

}  // namespace testing

#endif  // CYCLESMITH_TESTS_SUPPORT_RANDOM_GRAPHS_HPP
