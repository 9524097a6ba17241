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

#ifndef SMPEC_LINALG_HPP_
#define SMPEC_LINALG_HPP_

#include <limits>

#include "smpec/types.hpp"

// Small dense kernels shared by the oracles and certificates. Problem sizes
// here are tiny (tens of variables), so every routine favours exactness over
// asymptotic speed.
namespace smpec::linalg {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LeastSquaresResult {
  Vector x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Bounded-variable least squares: min ||A x - b|| subject to
// lower <= x <= upper, where bounds may be infinite. Active-set method in the
// Lawson-Hanson family; the free set is solved with a rank-revealing
// orthogonal decomposition so dependent columns are tolerated.
LeastSquaresResult bounded_least_squares(const Matrix& A, const Vector& b,
                                         const Vector& lower,
                                         const Vector& upper,
                                         int max_iterations = 0);

// Nonnegative least squares, min ||A x - b|| subject to x >= 0.
LeastSquaresResult nonnegative_least_squares(const Matrix& A, const Vector& b);

// Euclidean projection of z onto {y : A y <= b} through the least-distance
// programming reduction to NNLS. Throws kEmptySet when the polyhedron is
// empty.
Vector project_onto_polyhedron(const Matrix& A, const Vector& b,
                               const Vector& z);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Vector x;
  double value = 0.0;
};

// min c^T x subject to A x <= b with x free. Dense two-phase tableau simplex
// with Bland's rule; returns a basic (vertex) solution when optimal.
LpResult solve_lp(const Vector& c, const Matrix& A, const Vector& b);

// Smallest eigenvalue of the symmetric part (M + M^T) / 2.
double min_symmetric_eigenvalue(const Matrix& M);

// Drops columns from a nonnegative combination  target = P * weights  until
// the remaining columns are linearly independent, keeping weights >= 0 and
// the combination unchanged. Entries of weights that leave the support are
// set to zero.
void reduce_conic_support(const Matrix& P, Vector& weights);

}  // namespace smpec::linalg

#endif  // SMPEC_LINALG_HPP_
