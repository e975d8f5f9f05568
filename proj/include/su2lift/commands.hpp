// Copyright 2026 su2lift authors
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

#pragma once

#include "su2lift/decomp.hpp"
#include "su2lift/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace su2lift {

enum class Command { Lift, Adjoint, Diagonalize, Triangularize, Symmetrize, Ortho, Transform, Verify };

std::optional<Command> command_from_name(const std::string& name);

struct CommandOptions {
  double tol = kSignEps;
  int seeds = 10000;
  int brute = 0;
  Side side = Side::Left;
};

// Serialized JSON output plus the process exit code. Input problems surface
// as exceptions: ParseError (exit 2), InvalidInputError (exit 3),
// InternalConsistencyError (exit 4).
struct CommandOutcome {
  std::string output;
  int exit_code = 0;
};

CommandOutcome run_command(Command command, const std::vector<MatrixDocument>& inputs,
                           const CommandOptions& options);

}  // namespace su2lift
