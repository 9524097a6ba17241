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

#include "smpec/certify.hpp"
#include "smpec/error.hpp"

namespace smpec {

SequentialResiduals sequential_residuals(const Problem& problem,
                                         const SolveTrace& trace,
                                         const std::optional<Vector>& x_bar,
                                         int tail) {
  if (trace.entries.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty solve trace");
  }
  SequentialResiduals res;
  res.x_bar = x_bar ? *x_bar : trace.last().x;
  if (res.x_bar.size() != problem.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reference point has the wrong dimension");
  }
  // The element of the subdifferential of f at x_bar nearest to the last u_k.
  const ConvexObjective::SubdifferentialBox box =
      problem.objective().subdifferential(res.x_bar);
  res.u = trace.last().u.cwiseMax(box.center - box.halfwidth)
              .cwiseMin(box.center + box.halfwidth);

  for (const TraceEntry& e : trace.entries) {
    const ConvexCombination combo =
        caratheodory_reduce(e.danskin_values, e.v);
    const Vector scaled = e.weight * combo.combine();
    const Vector step = e.x - res.x_bar;
    res.r1.push_back((res.u + scaled + e.w).norm());
    res.r2.push_back(step.norm());
    res.r3.push_back(e.weight * e.gap - scaled.dot(step));
    res.r4.push_back(e.w.dot(step));
    res.decompositions.push_back(combo);
  }
  const int k = static_cast<int>(trace.entries.size());
  res.tail_length = std::min(std::max(tail, 1), k);
  for (int i = k - res.tail_length; i < k; ++i) {
    res.tail_r1 = std::max(res.tail_r1, std::abs(res.r1[i]));
    res.tail_r2 = std::max(res.tail_r2, std::abs(res.r2[i]));
    res.tail_r3 = std::max(res.tail_r3, std::abs(res.r3[i]));
    res.tail_r4 = std::max(res.tail_r4, std::abs(res.r4[i]));
  }
  return res;
}

}  // namespace smpec
