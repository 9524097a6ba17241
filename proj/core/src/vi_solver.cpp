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

#include <string>

#include "smpec/error.hpp"
#include "smpec/solver.hpp"

namespace smpec {

ViSolveResult solve_vi(const Problem& problem, double tol,
                       const ViConfig& config) {
  const ConvexSet& set = problem.set();
  const MonotoneMap& F = problem.map();
  ViSolveResult result;
  Vector x = config.x0 ? set.project(*config.x0)
                       : set.project(Vector::Zero(problem.dimension()));
  double tau = config.initial_step;
  for (int it = 0;; ++it) {
    result.iterations = it;
    const double residual = eval_gap(problem, x, config.gap).value;
    if (residual <= tol) {
      result.point = x;
      result.residual = residual;
      result.converged = true;
      return result;
    }
    if (it >= config.max_iterations) {
      throw Error(ErrorCode::kIterationCap,
                  "extragradient hit the iteration cap with gap " +
                      std::to_string(residual));
    }
    const Vector Fx = F(x);
    Vector xb = set.project(x - tau * Fx);
    Vector Fxb = F(xb);
    while (tau * (Fx - Fxb).norm() > 0.9 * (x - xb).norm()) {
      tau *= 0.5;
      xb = set.project(x - tau * Fx);
      Fxb = F(xb);
    }
    if (xb == x) {
      // Fixed point of the projection map: x solves the VI up to rounding.
      result.point = x;
      result.residual = residual;
      result.converged = residual <= tol;
      if (!result.converged) {
        throw Error(ErrorCode::kNonConvergence,
                    "extragradient reached a fixed point with gap " +
                        std::to_string(residual));
      }
      return result;
    }
    x = set.project(x - tau * Fxb);
    if (config.on_iterate) config.on_iterate(x);
  }
}

}  // namespace smpec
