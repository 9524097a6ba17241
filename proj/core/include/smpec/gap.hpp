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

#ifndef SMPEC_GAP_HPP_
#define SMPEC_GAP_HPP_

#include <cstdint>
#include <vector>

#include "smpec/model.hpp"
#include "smpec/types.hpp"

namespace smpec {

struct GapOptions {
  // Frank-Wolfe duality gap at which the inner maximization stops.
  double fw_gap_tol = 1e-8;
  int max_inner_iterations = 100000;
  // A point y is a near-maximizer when <F(y), x - y> >= value - argmax_tol.
  double argmax_tol = 1e-6;
  double dedup_tol = 1e-6;
  // Black-box maps only.
  int multistarts = 32;
  int ascent_iterations = 400;
  std::uint64_t seed = 0x9a9d0001ULL;
};

struct GapEvaluation {
  double value = 0.0;
  // Near-maximizers; the first one is the point the inner solver ended at.
  std::vector<Vector> maximizers;
  // F(maximizers.front()), an element of the subdifferential of g_D.
  Vector subgradient;
  int inner_iterations = 0;
  // True when the inner problem is concave and was solved to the
  // Frank-Wolfe gap tolerance.
  bool certified = false;
};

// <F(y), x - y>, the function maximized over y in C.
double gap_integrand(const Problem& problem, const Vector& x, const Vector& y);

// g_D(x) = sup over y in C of <F(y), x - y>.
GapEvaluation eval_gap(const Problem& problem, const Vector& x,
                       const GapOptions& options = {});

// F(y*) for the first maximizer y*.
Vector gap_subgradient(const Problem& problem, const Vector& x,
                       const GapOptions& options = {});

// Finite sample of the maximizer set: the eval_gap atoms together with the
// limits of extra inner runs started from the vertices minimizing +/- e_i and
// +/- 1. Points within tol of the maximum are kept, deduplicated.
std::vector<Vector> argmax_set(const Problem& problem, const Vector& x,
                               double tol, const GapOptions& options = {});

struct ConvexCombination {
  std::vector<Vector> points;
  std::vector<double> weights;

  Vector combine() const;
};

// Expresses target as a convex combination of at most n + 1 of the given
// points. Throws kTargetNotInHull when target is farther than tol from
// conv(points).
ConvexCombination caratheodory_reduce(const std::vector<Vector>& points,
                                      const Vector& target,
                                      double tol = 1e-9);

}  // namespace smpec

#endif  // SMPEC_GAP_HPP_
