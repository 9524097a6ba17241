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
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smpec/certify.hpp"
#include "smpec/error.hpp"
#include "smpec/linalg.hpp"
#include "stationarity.hpp"

namespace smpec {

std::string_view to_string(BcqVerdict verdict) {
  switch (verdict) {
    case BcqVerdict::kHolds: return "holds";
    case BcqVerdict::kFails: return "fails";
    case BcqVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

Matrix columns(const Matrix& M, std::uint32_t mask) {
  std::vector<Index> cols;
  for (Index j = 0; j < M.cols(); ++j) {
    if (mask & (1u << j)) cols.push_back(j);
  }
  Matrix out(M.rows(), static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(j) = M.col(cols[j]);
  return out;
}

Index span_dimension(const Matrix& M) {
  if (M.cols() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(M);
  lu.setThreshold(1e-10);
  return lu.rank();
}

// p in relint cone(N) iff p = N alpha with every alpha_j > 0.
bool in_relative_interior(const Matrix& N, const Vector& p) {
  const Index n = N.rows();
  const Index m = N.cols();
  if (m == 0) return p.norm() == 0.0;
  // Variables (alpha, t): maximize t with N alpha = p, alpha_j >= t, t <= 1.
  Matrix A = Matrix::Zero(2 * n + m + 1, m + 1);
  Vector b = Vector::Zero(2 * n + m + 1);
  A.block(0, 0, n, m) = N;
  b.head(n) = p;
  A.block(n, 0, n, m) = -N;
  b.segment(n, n) = -p;
  for (Index j = 0; j < m; ++j) {
    A(2 * n + j, j) = -1.0;
    A(2 * n + j, m) = 1.0;
  }
  A(2 * n + m, m) = 1.0;
  b(2 * n + m) = 1.0;
  Vector c = Vector::Zero(m + 1);
  c(m) = -1.0;
  const linalg::LpResult lp = linalg::solve_lp(c, A, b);
  return lp.status == linalg::LpStatus::kOptimal && -lp.value > 1e-9;
}

// Relative boundary of a polyhedral cone as the union of cones generated by
// subsets whose span has dimension d - 1 and whose relative interior misses
// relint N. Only maximal subsets are kept.
std::vector<Matrix> polyhedral_boundary(const Matrix& N, Index d) {
  const Index m = N.cols();
  if (m > 20) {
    throw Error(ErrorCode::kUnsupportedSetDimension,
                "too many active constraints for face enumeration");
  }
  std::vector<std::uint32_t> faces;
  const std::uint32_t full = m == 0 ? 0u : ((1u << m) - 1u);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const Matrix T = columns(N, mask);
    if (span_dimension(T) != d - 1) continue;
    const Vector p = T.cols() > 0 ? Vector(T.rowwise().sum())
                                  : Vector(Vector::Zero(N.rows()));
    if (in_relative_interior(N, p)) continue;
    faces.push_back(mask);
    if (mask == full) break;
  }
  std::vector<Matrix> out;
  for (std::uint32_t a : faces) {
    bool maximal = true;
    for (std::uint32_t b : faces) {
      if (a != b && (a & b) == a) maximal = false;
    }
    if (maximal) out.push_back(columns(N, a));
  }
  return out;
}

// Box cones are products of {0}, rays and lines; a face drops one ray.
std::vector<Matrix> box_boundary(const ConvexSet& set, const Vector& x,
                                 const Matrix& N, double active_tol) {
  std::vector<Matrix> out;
  const Index n = set.dimension();
  std::vector<Index> ray_columns;
  Index col = 0;
  for (Index i = 0; i < n; ++i) {
    const double t = active_tol * std::max(1.0, std::abs(x(i)));
    const bool up = x(i) >= set.upper()(i) - t;
    const bool lo = x(i) <= set.lower()(i) + t;
    if (up != lo) ray_columns.push_back(col);
    col += (up ? 1 : 0) + (lo ? 1 : 0);
  }
  for (Index drop : ray_columns) {
    Matrix face(n, N.cols() - 1);
    Index k = 0;
    for (Index j = 0; j < N.cols(); ++j) {
      if (j != drop) face.col(k++) = N.col(j);
    }
    out.push_back(face);
  }
  return out;
}

}  // namespace

WeakBcqDiagnostic weak_bcq_check(const Problem& problem, const Vector& x_bar,
                                 double tol, const CertifyOptions& options) {
  const ConvexSet& set = problem.set();
  const Index n = problem.dimension();
  const bool polyhedral_general = set.kind() == ConvexSet::Kind::kPolytope ||
                                  set.kind() == ConvexSet::Kind::kSimplex;
  if (polyhedral_general && n > 3) {
    throw Error(ErrorCode::kUnsupportedSetDimension,
                "weak BCQ face enumeration supports polytopes with n <= 3");
  }
  if (!set.contains(x_bar)) {
    throw Error(ErrorCode::kNotInSet, "weak BCQ point is not in the set");
  }
  WeakBcqDiagnostic diag;
  const GapEvaluation gap = eval_gap(problem, x_bar, options.gap);
  for (const Vector& y :
       argmax_set(problem, x_bar, options.gap.argmax_tol, options.gap)) {
    diag.hull_generators.push_back(problem.map()(y));
  }

  const ConeGenerators cone = set.normal_cone_generators(x_bar,
                                                         options.active_tol);
  diag.cone_generators = cone.rays;
  diag.cone_dimension = cone.dimension;
  if (cone.dimension == 0) {
    diag.boundary_faces.push_back(Matrix(n, 0));
    diag.boundary_description = "N_C = {0}; boundary taken as {0}";
  } else {
    diag.boundary_faces =
        set.kind() == ConvexSet::Kind::kBox
            ? box_boundary(set, x_bar, cone.rays, options.active_tol)
            : polyhedral_boundary(cone.rays, cone.dimension);
    if (set.kind() == ConvexSet::Kind::kBall) {
      diag.boundary_description = "normal ray; boundary {0}";
    } else if (diag.boundary_faces.empty()) {
      diag.boundary_description =
          "N_C is a subspace of dimension " + std::to_string(cone.dimension) +
          "; empty relative boundary";
    } else {
      diag.boundary_description =
          "cone of dimension " + std::to_string(cone.dimension) + " with " +
          std::to_string(diag.boundary_faces.size()) + " boundary faces";
    }
  }

  Matrix H(n, static_cast<Index>(diag.hull_generators.size()));
  for (size_t j = 0; j < diag.hull_generators.size(); ++j) {
    H.col(static_cast<Index>(j)) = diag.hull_generators[j];
  }
  const ConvexObjective::SubdifferentialBox zero{Vector::Zero(n),
                                                 Vector::Zero(n)};
  diag.distance = linalg::kInf;
  Vector best_point;
  for (const Matrix& face : diag.boundary_faces) {
    const internal::StationarityFit fit = internal::fit_stationarity(
        zero, H, face, internal::CombinationMode::kConvex, 1.0);
    if (fit.residual < diag.distance) {
      diag.distance = fit.residual;
      best_point = H * fit.a;
    }
  }
  if (!gap.certified) {
    diag.verdict = BcqVerdict::kInconclusive;
  } else if (diag.distance <= tol) {
    diag.verdict = BcqVerdict::kFails;
    diag.witness = best_point;
  } else {
    diag.verdict = BcqVerdict::kHolds;
  }
  return diag;
}

}  // namespace smpec
