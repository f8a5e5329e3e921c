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

#include "cyclesmith/error.hpp"

#include <string>

namespace cyclesmith {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedEdgeList: return "MalformedEdgeList";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NoSuchCycle: return "NoSuchCycle";
    case ErrorKind::NotClawFree: return "NotClawFree";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::NotRegularEven: return "NotRegularEven";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::TooManyOddVertices: return "TooManyOddVertices";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

NotClawFreeError::NotClawFreeError(Claw claw)
    : Error(ErrorKind::NotClawFree,
            "graph contains an induced claw centred at " + std::to_string(claw.center) +
                " with leaves " + std::to_string(claw.leaves[0]) + "," +
                std::to_string(claw.leaves[1]) + "," + std::to_string(claw.leaves[2])),
      claw_(claw) {}

}  // namespace cyclesmith
