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

#ifndef CYCLESMITH_CLI_HPP
#define CYCLESMITH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclesmith {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitPrecondition = 3,
};

/// Runs the command-line tool on `args` (without the program name).
/// Machine output goes to `out`, diagnostics to `err`; graphs not given on
/// the command line are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclesmith

#endif  // CYCLESMITH_CLI_HPP
