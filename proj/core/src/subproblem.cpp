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

#include "smpec/error.hpp"
#include "smpec/solver.hpp"

namespace smpec {
namespace {

struct Evaluated {
  double value;
  Vector gradient;
};

Evaluated evaluate(const Problem& problem, double weight, const Vector& x,
                   const GapOptions& gap_options) {
  const GapEvaluation gap = eval_gap(problem, x, gap_options);
  return {problem.objective().value(x) + weight * gap.value,
          problem.objective().subgradient(x) + weight * gap.subgradient};
}

}  // namespace

SubproblemResult solve_pk(const Problem& problem, double weight,
                          const Vector& x0, const SubproblemConfig& config,
                          const GapOptions& gap_options) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::kInvalidArgument,
                "subproblem weight must be positive");
  }
  const ConvexSet& set = problem.set();
  if (!set.contains(x0)) {
    throw Error(ErrorCode::kNotInSet, "subproblem start is not in the set");
  }
  const double diam = std::max(set.diameter(), 1e-12);
  const double min_step = config.min_step_ratio * diam;
  double base_step = config.initial_step_ratio * diam;

  Vector x = x0;
  Evaluated cur = evaluate(problem, weight, x, gap_options);
  SubproblemResult best{x, cur.value, 0};
  double window_start = best.value;
  int since_window = 0;
  int t = 0;

  for (int it = 0; it < config.max_inner_iterations; ++it) {
    const double gnorm = cur.gradient.norm();
    if (gnorm == 0.0) {
      best = {x, cur.value, it};
      break;
    }
    const double step = base_step / std::sqrt(static_cast<double>(t + 1));
    const Vector next = set.project(x - (step / gnorm) * cur.gradient);
    best.iterations = it + 1;
    if (next == x) {
      // -gradient lies in the normal cone, so x is optimal.
      best = {x, cur.value, it + 1};
      break;
    }
    x = next;
    cur = evaluate(problem, weight, x, gap_options);
    ++t;
    if (cur.value < best.value) {
      best.x = x;
      best.value = cur.value;
    }
    if (++since_window < config.stall_window) continue;
    since_window = 0;
    const double improvement = window_start - best.value;
    const double threshold =
        config.inner_tolerance * std::max(1.0, std::abs(best.value));
    window_start = best.value;
    if (improvement >= threshold) continue;
    if (config.step_rule == StepRule::kDiminishing) break;
    base_step *= 0.25;
    if (base_step < min_step) break;
    x = best.x;
    cur = evaluate(problem, weight, x, gap_options);
    t = 0;
  }
  return best;
}

}  // namespace smpec
