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

#ifndef SMPEC_CLI_INSTANCE_IO_HPP_
#define SMPEC_CLI_INSTANCE_IO_HPP_

#include <string>

#include "smpec/model.hpp"

namespace smpec::cli {

// Reads an instance file. Throws kParseError with line:column for malformed
// text and kSchemaViolation naming the offending field for anything that
// does not match the documented schema. Unknown fields are rejected.
ProblemInstance parse_instance(const std::string& path);
ProblemInstance parse_instance_text(const std::string& text,
                                    const std::string& source = "<input>");

// Inverse of parse_instance_text. Black-box maps cannot be serialized.
std::string serialize_instance(const ProblemInstance& inst);

// Parses "x1,x2,..." into a vector.
Vector parse_point(const std::string& text);

}  // namespace smpec::cli

#endif  // SMPEC_CLI_INSTANCE_IO_HPP_
