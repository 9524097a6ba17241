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

#ifndef SMPEC_SRC_CERTIFY_INTERNAL_HPP_
#define SMPEC_SRC_CERTIFY_INTERNAL_HPP_

#include <vector>

#include "smpec/certify.hpp"

namespace smpec::internal {

struct MultiplierFit {
  std::vector<Vector> points;
  std::vector<Vector> values;
  // Conic weights on values, support reduced to linearly independent
  // columns.
  Vector weights;
  Vector u;
};

// Searches points y in C with |<F(y), x_bar - y>| <= tol and conic weights
// so that u + sum weights_i F(y_i) + N_C(x_bar) reaches 0. Starts from the
// maximizer sample at x_bar and adds near-active points found by gap
// evaluations along the residual direction.
MultiplierFit fit_multipliers(const Problem& problem, const Vector& x_bar,
                              double tol, const CertifyOptions& options);

// Common preconditions of the certificates: x_bar in C, g_D(x_bar) <= tol.
// Returns g_D(x_bar).
double check_lower_level(const Problem& problem, const Vector& x_bar,
                         double tol, const CertifyOptions& options);

}  // namespace smpec::internal

#endif  // SMPEC_SRC_CERTIFY_INTERNAL_HPP_
