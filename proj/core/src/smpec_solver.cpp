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

#include <cmath>
#include <cstdio>
#include <string>

#include "smpec/error.hpp"
#include "smpec/solver.hpp"
#include "stationarity.hpp"

namespace smpec {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kRunning: return "running";
    case SolveStatus::kThresholdMet: return "threshold-met";
    case SolveStatus::kIterationCap: return "iteration-cap";
    case SolveStatus::kStalled: return "stalled";
  }
  return "unknown";
}

namespace {

// Picks u in the subdifferential of f and v in conv F(Y(x)) so that
// w = -u - weight * v is as close as possible to N_C(x).
void recover_multipliers(const Problem& problem, const SolveConfig& config,
                         TraceEntry& entry) {
  const Index n = problem.dimension();
  entry.danskin_points =
      argmax_set(problem, entry.x, config.gap.argmax_tol, config.gap);
  Matrix G(n, static_cast<Index>(entry.danskin_points.size()));
  for (size_t j = 0; j < entry.danskin_points.size(); ++j) {
    entry.danskin_values.push_back(problem.map()(entry.danskin_points[j]));
    G.col(static_cast<Index>(j)) = entry.danskin_values.back();
  }
  const ConeGenerators cone =
      problem.set().normal_cone_generators(entry.x);
  const internal::StationarityFit fit = internal::fit_stationarity(
      problem.objective().subdifferential(entry.x), G, cone.rays,
      internal::CombinationMode::kConvex, entry.weight);
  entry.u = fit.u;
  entry.v = G * fit.a / entry.weight;
  entry.w = -entry.u - entry.weight * entry.v;
}

}  // namespace

SolveTrace solve_smpec(const Problem& problem, const SolveConfig& config) {
  if (!(config.epsilon0 > 0.0) || !(config.alpha > 0.0) ||
      config.alpha > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "epsilon0 must be positive and alpha in (0, 1]");
  }
  if (!(config.mu >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "mu must be nonnegative");
  }
  const ConvexSet& set = problem.set();
  Vector x = config.x0 ? set.project(*config.x0)
                       : set.project(Vector::Zero(problem.dimension()));
  SolveTrace trace;
  for (int k = 0; k < config.max_outer_iterations; ++k) {
    TraceEntry entry;
    entry.k = k;
    entry.epsilon =
        config.epsilon0 / std::pow(static_cast<double>(k + 1), config.alpha);
    entry.weight = 1.0 / entry.epsilon;
    const SubproblemResult sub =
        solve_pk(problem, entry.weight, x, config.subproblem, config.gap);
    entry.x = sub.x;
    entry.inner_iterations = sub.iterations;
    entry.gap = eval_gap(problem, entry.x, config.gap).value;
    entry.objective = problem.objective().value(entry.x);
    recover_multipliers(problem, config, entry);

    const bool repeated = k > 0 && entry.x == x;
    x = entry.x;
    trace.entries.push_back(std::move(entry));
    const TraceEntry& last = trace.entries.back();
    if (last.gap < config.mu) {
      trace.status = SolveStatus::kThresholdMet;
      return trace;
    }
    if (repeated && last.epsilon < 1e-12) {
      trace.status = SolveStatus::kStalled;
      return trace;
    }
  }
  trace.status = SolveStatus::kIterationCap;
  return trace;
}

std::string trace_to_csv(const SolveTrace& trace) {
  std::string out = "k,epsilon,gap,objective,inner_iters,status\n";
  char buf[256];
  for (size_t i = 0; i < trace.entries.size(); ++i) {
    const TraceEntry& e = trace.entries[i];
    const SolveStatus status =
        i + 1 == trace.entries.size() ? trace.status : SolveStatus::kRunning;
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%d,%s\n", e.k,
                  e.epsilon, e.gap, e.objective, e.inner_iterations,
                  std::string(to_string(status)).c_str());
    out += buf;
  }
  return out;
}

}  // namespace smpec
