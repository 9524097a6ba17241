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

#ifndef SMPEC_SOLVER_HPP_
#define SMPEC_SOLVER_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smpec/gap.hpp"
#include "smpec/model.hpp"

namespace smpec {

enum class StepRule {
  // s_t = s0 / sqrt(t + 1), stopping at the first stall.
  kDiminishing,
  // Same steps, but a stall restarts from the best point with s0 / 4 until
  // the step falls below min_step_ratio * diameter.
  kRestarted,
};

struct SubproblemConfig {
  StepRule step_rule = StepRule::kRestarted;
  int max_inner_iterations = 5000;
  // Relative improvement of the best value below which a window stalls.
  double inner_tolerance = 1e-12;
  int stall_window = 100;
  // s0 as a fraction of the set diameter.
  double initial_step_ratio = 0.1;
  double min_step_ratio = 1e-13;
};

struct SubproblemResult {
  Vector x;
  // f(x) + weight * g_D(x).
  double value = 0.0;
  int iterations = 0;
};

// Approximately minimizes f + weight * g_D over C by projected subgradient
// descent from x0 with running-best tracking.
SubproblemResult solve_pk(const Problem& problem, double weight,
                          const Vector& x0, const SubproblemConfig& config = {},
                          const GapOptions& gap_options = {});

struct SolveConfig {
  double epsilon0 = 1.0;
  double alpha = 1.0;
  double mu = 1e-6;
  int max_outer_iterations = 200;
  SubproblemConfig subproblem;
  GapOptions gap;
  // Starting point; defaults to the projection of the origin.
  std::optional<Vector> x0;
};

enum class SolveStatus { kRunning, kThresholdMet, kIterationCap, kStalled };

std::string_view to_string(SolveStatus status);

struct TraceEntry {
  int k = 0;
  double epsilon = 0.0;
  // Weight on g_D in the subproblem, 1 / epsilon.
  double weight = 0.0;
  Vector x;
  double gap = 0.0;
  double objective = 0.0;
  int inner_iterations = 0;
  // u in the subdifferential of f at x, v in the convex hull of
  // F(danskin_points), and w = -u - weight * v.
  Vector u;
  Vector v;
  Vector w;
  std::vector<Vector> danskin_points;
  std::vector<Vector> danskin_values;
};

struct SolveTrace {
  std::vector<TraceEntry> entries;
  SolveStatus status = SolveStatus::kRunning;

  const TraceEntry& last() const { return entries.back(); }
};

// Regularization loop: x_k minimizes f + g_D / eps_k over C with
// eps_k = epsilon0 / (k + 1)^alpha, warm-started at x_{k-1}; stops once
// g_D(x_k) < mu.
SolveTrace solve_smpec(const Problem& problem, const SolveConfig& config = {});

// k, epsilon, gap, objective, inner_iters, status; 17 significant digits.
std::string trace_to_csv(const SolveTrace& trace);

struct ViConfig {
  int max_iterations = 100000;
  double initial_step = 1.0;
  std::optional<Vector> x0;
  // Called with every accepted iterate.
  std::function<void(const Vector&)> on_iterate;
  GapOptions gap;
};

struct ViSolveResult {
  Vector point;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Extragradient method with adaptive step; converged once g_D(x) <= tol.
// Throws kIterationCap when the cap is reached first.
ViSolveResult solve_vi(const Problem& problem, double tol,
                       const ViConfig& config = {});

}  // namespace smpec

#endif  // SMPEC_SOLVER_HPP_
