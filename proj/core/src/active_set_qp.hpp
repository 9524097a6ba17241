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

#ifndef SMPEC_SRC_ACTIVE_SET_QP_HPP_
#define SMPEC_SRC_ACTIVE_SET_QP_HPP_

#include "smpec/model.hpp"
#include "smpec/types.hpp"

namespace smpec::internal {

// {y : G y <= h, E y = e}.
struct PolyhedralConstraints {
  Matrix G;
  Vector h;
  Matrix E;
  Vector e;
};

// Constraint form of a box, simplex or polytope. Infinite box bounds are
// skipped.
PolyhedralConstraints constraints_of(const ConvexSet& set);

struct QpResult {
  Vector y;
  int iterations = 0;
  bool converged = false;
};

// Primal active-set method for min y^T S y - l^T y over a bounded
// polyhedron, S symmetric positive semidefinite, started at a feasible y0.
// Directions of zero curvature are followed to the nearest blocking
// constraint.
QpResult minimize_convex_quadratic(const Matrix& S, const Vector& l,
                                   const PolyhedralConstraints& cons,
                                   const Vector& y0, int max_iterations);

}  // namespace smpec::internal

#endif  // SMPEC_SRC_ACTIVE_SET_QP_HPP_
