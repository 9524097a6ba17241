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

#ifndef SMPEC_CLI_DEMOS_HPP_
#define SMPEC_CLI_DEMOS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "smpec/model.hpp"

namespace smpec::cli {

// example-3-1, example-3-2, basis-pursuit, min-norm-lp, distance-estimation.
const std::vector<std::string>& demo_names();

// Built-in instance, or empty when the name is unknown.
std::optional<ProblemInstance> make_demo(const std::string& name);

}  // namespace smpec::cli

#endif  // SMPEC_CLI_DEMOS_HPP_
