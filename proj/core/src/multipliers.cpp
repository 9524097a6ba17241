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

#include <algorithm>
#include <cmath>

#include "certify_internal.hpp"

namespace smpec {

MultiplierCertificate multiplier_certificate(const Problem& problem,
                                             const Vector& x_bar, double tol,
                                             const CertifyOptions& options) {
  internal::check_lower_level(problem, x_bar, tol, options);
  const internal::MultiplierFit fit =
      internal::fit_multipliers(problem, x_bar, tol, options);
  MultiplierCertificate cert;
  cert.points = fit.points;
  cert.beta.assign(fit.weights.data(), fit.weights.data() + fit.weights.size());
  cert.u = fit.u;
  Vector s = cert.u;
  for (size_t i = 0; i < fit.points.size(); ++i) {
    s += cert.beta[i] * fit.values[i];
    cert.y_star += cert.beta[i];
    cert.complementarity_residual =
        std::max(cert.complementarity_residual,
                 std::abs(gap_integrand(problem, x_bar, fit.points[i])));
  }
  if (cert.y_star > 0.0) {
    for (double b : cert.beta) cert.convex_weights.push_back(b / cert.y_star);
  }
  cert.residual =
      problem.set().normal_cone_residual(x_bar, -s, options.active_tol);
  cert.certified =
      std::max(cert.residual, cert.complementarity_residual) <= tol;
  return cert;
}

}  // namespace smpec
