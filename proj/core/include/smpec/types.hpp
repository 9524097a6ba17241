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

#ifndef SMPEC_TYPES_HPP_
#define SMPEC_TYPES_HPP_

#include <Eigen/Core>

namespace smpec {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Membership tolerance used by every oracle that returns points of C.
inline constexpr double kMembershipTol = 1e-10;

}  // namespace smpec

#endif  // SMPEC_TYPES_HPP_
