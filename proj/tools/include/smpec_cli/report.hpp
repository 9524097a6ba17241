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

#ifndef SMPEC_CLI_REPORT_HPP_
#define SMPEC_CLI_REPORT_HPP_

#include <optional>
#include <string>

#include "smpec/certify.hpp"
#include "smpec/solver.hpp"

namespace smpec::cli {

struct CertifyBundle {
  Vector point;
  std::string point_source;
  std::optional<KktCertificate> kkt;
  std::string kkt_error;
  std::optional<WeakBcqDiagnostic> weak_bcq;
  std::string weak_bcq_error;
  std::optional<MultiplierCertificate> multiplier;
  std::string multiplier_error;
  std::optional<SequentialResiduals> sequential;
  std::string sequential_error;

  bool certified() const { return kkt && kkt->certified; }
};

// Structured text records in the same family as instance files.
std::string solve_summary_json(const Problem& problem,
                               const SolveTrace& trace);
std::string certify_report_json(const CertifyBundle& bundle);

}  // namespace smpec::cli

#endif  // SMPEC_CLI_REPORT_HPP_
