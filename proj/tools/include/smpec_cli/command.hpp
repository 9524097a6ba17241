// Copyright 2026 The smpec Authors
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

#ifndef SMPEC_CLI_COMMAND_HPP_
#define SMPEC_CLI_COMMAND_HPP_

#include <optional>
#include <ostream>
#include <string>

#include "smpec/types.hpp"

namespace smpec::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitSolver = 4,
  kExitNotCertified = 5,
};

struct Command {
  // solve, gap, vi, certify, demo or validate.
  std::string subcommand;
  // Instance path or demo name.
  std::string target;

  std::optional<double> epsilon0;
  std::optional<double> alpha;
  std::optional<double> mu;
  std::optional<int> max_outer;
  std::optional<int> max_inner;
  std::optional<double> tol;
  // Negative disables wrapping.
  std::optional<double> box_radius;
  std::optional<Vector> at;

  std::string trace_path;
  std::string report_path;
  // demo only: directory that receives <name>.json.
  std::string output_dir = ".";
};

int run(const Command& command, std::ostream& out, std::ostream& err);

// Parses argv and runs the command.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace smpec::cli

#endif  // SMPEC_CLI_COMMAND_HPP_
