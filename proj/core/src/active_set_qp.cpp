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

#include "active_set_qp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "smpec/linalg.hpp"

namespace smpec::internal {

PolyhedralConstraints constraints_of(const ConvexSet& set) {
  const Index n = set.dimension();
  PolyhedralConstraints c;
  c.E.resize(0, n);
  switch (set.kind()) {
    case ConvexSet::Kind::kBox: {
      std::vector<std::pair<Vector, double>> rows;
      for (Index i = 0; i < n; ++i) {
        if (std::isfinite(set.upper()(i))) {
          rows.emplace_back(Vector::Unit(n, i), set.upper()(i));
        }
        if (std::isfinite(set.lower()(i))) {
          rows.emplace_back(-Vector::Unit(n, i), -set.lower()(i));
        }
      }
      c.G.resize(static_cast<Index>(rows.size()), n);
      c.h.resize(static_cast<Index>(rows.size()));
      for (size_t r = 0; r < rows.size(); ++r) {
        c.G.row(static_cast<Index>(r)) = rows[r].first.transpose();
        c.h(static_cast<Index>(r)) = rows[r].second;
      }
      break;
    }
    case ConvexSet::Kind::kSimplex:
      c.G = -Matrix::Identity(n, n);
      c.h = Vector::Zero(n);
      c.E = Matrix::Ones(1, n);
      c.e = Vector::Constant(1, set.scale());
      break;
    case ConvexSet::Kind::kPolytope:
      c.G = set.A();
      c.h = set.b();
      break;
    case ConvexSet::Kind::kBall:
      break;
  }
  return c;
}

namespace {

Matrix working_matrix(const PolyhedralConstraints& c,
                      const std::vector<Index>& active) {
  const Index n = c.G.cols();
  Matrix A(c.E.rows() + static_cast<Index>(active.size()), n);
  A.topRows(c.E.rows()) = c.E;
  for (size_t j = 0; j < active.size(); ++j) {
    A.row(c.E.rows() + static_cast<Index>(j)) = c.G.row(active[j]);
  }
  return A;
}

// Orthonormal basis of the null space of A.
Matrix null_basis(const Matrix& A, Index n) {
  if (A.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  const double thresh =
      1e-12 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) rank += sv(i) > thresh ? 1 : 0;
  return svd.matrixV().rightCols(n - rank);
}

Index matrix_rank(const Matrix& A) {
  if (A.rows() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(A);
  lu.setThreshold(1e-10);
  return lu.rank();
}

}  // namespace

QpResult minimize_convex_quadratic(const Matrix& S, const Vector& l,
                                   const PolyhedralConstraints& cons,
                                   const Vector& y0, int max_iterations) {
  const Index n = y0.size();
  const Index m = cons.G.rows();
  const double scale = std::max({1.0, S.cwiseAbs().maxCoeff(),
                                 l.cwiseAbs().maxCoeff()});
  const double feas_tol = 1e-12 * std::max(1.0, cons.h.size() > 0
                                                    ? cons.h.cwiseAbs().maxCoeff()
                                                    : 1.0);
  QpResult result;
  Vector y = y0;

  std::vector<Index> active;
  std::vector<bool> in_set(static_cast<size_t>(m), false);
  for (Index i = 0; i < m; ++i) {
    if (cons.G.row(i).dot(y) >= cons.h(i) - feas_tol) {
      active.push_back(i);
      if (matrix_rank(working_matrix(cons, active)) <
          cons.E.rows() + static_cast<Index>(active.size())) {
        active.pop_back();
      } else {
        in_set[static_cast<size_t>(i)] = true;
      }
    }
  }

  for (int it = 0; it < max_iterations; ++it) {
    result.iterations = it + 1;
    const Vector g = 2.0 * (S * y) - l;
    const Matrix A = working_matrix(cons, active);
    const Matrix Z = null_basis(A, n);

    Vector p = Vector::Zero(n);
    bool ray = false;
    if (Z.cols() > 0) {
      const Matrix H = 2.0 * Z.transpose() * S * Z;
      const Vector r = Z.transpose() * g;
      Eigen::SelfAdjointEigenSolver<Matrix> es(H);
      const Vector& lam = es.eigenvalues();
      const Matrix& U = es.eigenvectors();
      const double lam_tol = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());
      const Vector ur = U.transpose() * r;
      Vector flat = Vector::Zero(ur.size());
      Vector newton = Vector::Zero(ur.size());
      for (Index i = 0; i < ur.size(); ++i) {
        if (lam(i) > lam_tol) {
          newton(i) = -ur(i) / lam(i);
        } else {
          flat(i) = -ur(i);
        }
      }
      if (flat.norm() > 1e-13 * scale) {
        p = Z * (U * flat);
        ray = true;
      } else {
        p = Z * (U * newton);
      }
    }

    if (p.norm() <= 1e-14 * (1.0 + y.norm())) {
      // Stationary on the working set: check multiplier signs.
      const Index k = static_cast<Index>(active.size());
      if (k == 0) {
        result.converged = true;
        break;
      }
      const Vector mu = A.transpose().colPivHouseholderQr().solve(-g);
      Index worst = -1;
      double most = -1e-11 * scale;
      for (Index j = 0; j < k; ++j) {
        const double v = mu(cons.E.rows() + j);
        if (v < most) {
          most = v;
          worst = j;
        }
      }
      if (worst < 0) {
        result.converged = true;
        break;
      }
      in_set[static_cast<size_t>(active[worst])] = false;
      active.erase(active.begin() + worst);
      continue;
    }

    double alpha = ray ? linalg::kInf : 1.0;
    Index block = -1;
    for (Index i = 0; i < m; ++i) {
      if (in_set[static_cast<size_t>(i)]) continue;
      const double gp = cons.G.row(i).dot(p);
      if (gp <= 1e-15 * p.norm()) continue;
      const double slack = std::max(0.0, cons.h(i) - cons.G.row(i).dot(y));
      const double t = slack / gp;
      if (t < alpha) {
        alpha = t;
        block = i;
      }
    }
    if (!std::isfinite(alpha)) break;  // unbounded; cannot happen on C
    y += alpha * p;
    if (block >= 0) {
      active.push_back(block);
      in_set[static_cast<size_t>(block)] = true;
    }
  }
  result.y = y;
  return result;
}

}  // namespace smpec::internal
