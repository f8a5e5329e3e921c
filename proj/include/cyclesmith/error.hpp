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

#ifndef CYCLESMITH_ERROR_HPP
#define CYCLESMITH_ERROR_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclesmith {

enum class ErrorKind {
  MalformedGraph6,
  MalformedEdgeList,
  Unsupported,
  InvalidGraph,
  NotEven,
  NoSuchCycle,
  NotClawFree,
  DegreeTooHigh,
  NotRegularEven,
  Precondition,
  TooManyOddVertices,
  LimitExceeded,
  InvalidParams,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error thrown by the library. `kind()` lets callers
/// (the CLI in particular) map failures onto exit codes without RTTI games.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// An induced K_{1,3}: `center` adjacent to three pairwise non-adjacent leaves.
struct Claw {
  int center = -1;
  std::array<int, 3> leaves{};

  friend bool operator==(const Claw&, const Claw&) = default;
};

class NotClawFreeError : public Error {
 public:
  explicit NotClawFreeError(Claw claw);

  const Claw& claw() const noexcept { return claw_; }

 private:
  Claw claw_;
};

}  // namespace cyclesmith

#endif  // CYCLESMITH_ERROR_HPP
