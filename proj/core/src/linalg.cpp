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

#include "smpec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "smpec/error.hpp"

namespace smpec::linalg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

enum class VarState { kFree, kAtLower, kAtUpper };

Matrix select_columns(const Matrix& A, const std::vector<Index>& cols) {
  Matrix out(A.rows(), static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(j) = A.col(cols[j]);
  return out;
}

Vector clamp(const Vector& x, const Vector& lo, const Vector& hi) {
  return x.cwiseMax(lo).cwiseMin(hi);
}

}  // namespace

LeastSquaresResult bounded_least_squares(const Matrix& A, const Vector& b,
                                         const Vector& lower,
                                         const Vector& upper,
                                         int max_iterations) {
  const Index n = A.cols();
  if (b.size() != A.rows() || lower.size() != n || upper.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "bounded_least_squares: inconsistent dimensions");
  }
  for (Index i = 0; i < n; ++i) {
    if (lower(i) > upper(i)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bounded_least_squares: lower bound exceeds upper bound");
    }
  }
  if (max_iterations <= 0) max_iterations = 30 * static_cast<int>(n + 1);

  LeastSquaresResult result;
  result.x = clamp(Vector::Zero(n), lower, upper);
  if (n == 0) {
    result.converged = true;
    result.residual_norm = b.norm();
    return result;
  }
  Vector& x = result.x;

  std::vector<VarState> state(n);
  for (Index i = 0; i < n; ++i) {
    if (x(i) > lower(i) && x(i) < upper(i)) {
      state[i] = VarState::kFree;
    } else {
      state[i] = x(i) == lower(i) ? VarState::kAtLower : VarState::kAtUpper;
    }
  }
  const bool start_with_free =
      std::any_of(state.begin(), state.end(),
                  [](VarState s) { return s == VarState::kFree; });

  const double scale = std::max(1.0, A.cwiseAbs().colwise().sum().maxCoeff()) *
                       std::max(1.0, b.cwiseAbs().maxCoeff());
  const double grad_tol = 1e3 * kEps * scale;
  std::vector<bool> blocked(n, false);

  // Solves the least-squares problem on the free set with bound variables
  // held fixed and walks toward it, releasing variables that hit bounds.
  // Returns false when the entering variable was immediately pushed back.
  auto inner_loop = [&](Index entering) -> bool {
    while (true) {
      std::vector<Index> free_set;
      for (Index i = 0; i < n; ++i) {
        if (state[i] == VarState::kFree) free_set.push_back(i);
      }
      if (free_set.empty()) return true;
      Vector rhs = b;
      for (Index i = 0; i < n; ++i) {
        if (state[i] != VarState::kFree) rhs -= A.col(i) * x(i);
      }
      const Matrix AF = select_columns(A, free_set);
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(AF);
      const Vector z = cod.solve(rhs);

      bool inside = true;
      for (size_t j = 0; j < free_set.size(); ++j) {
        const Index i = free_set[j];
        if (z(j) <= lower(i) || z(j) >= upper(i)) inside = false;
      }
      if (inside) {
        for (size_t j = 0; j < free_set.size(); ++j) x(free_set[j]) = z(j);
        return true;
      }
      if (entering >= 0) {
        for (size_t j = 0; j < free_set.size(); ++j) {
          if (free_set[j] != entering) continue;
          const bool pushed_back =
              (x(entering) == lower(entering) && z(j) <= lower(entering)) ||
              (x(entering) == upper(entering) && z(j) >= upper(entering));
          if (pushed_back) {
            state[entering] = x(entering) == lower(entering)
                                  ? VarState::kAtLower
                                  : VarState::kAtUpper;
            return false;
          }
        }
      }
      std::vector<double> reach(free_set.size(), 2.0);
      double alpha = 1.0;
      for (size_t j = 0; j < free_set.size(); ++j) {
        const Index i = free_set[j];
        const double d = z(j) - x(i);
        if (z(j) <= lower(i) && d < 0) reach[j] = (lower(i) - x(i)) / d;
        if (z(j) >= upper(i) && d > 0) reach[j] = (upper(i) - x(i)) / d;
        alpha = std::min(alpha, reach[j]);
      }
      alpha = std::clamp(alpha, 0.0, 1.0);
      for (size_t j = 0; j < free_set.size(); ++j) {
        const Index i = free_set[j];
        if (reach[j] <= alpha + 1e-14) {
          x(i) = z(j) <= lower(i) ? lower(i) : upper(i);
          state[i] = z(j) <= lower(i) ? VarState::kAtLower
                                      : VarState::kAtUpper;
        } else {
          x(i) += alpha * (z(j) - x(i));
        }
      }
      entering = -1;
      ++result.iterations;
      if (result.iterations > max_iterations) return true;
    }
  };

  if (start_with_free) inner_loop(-1);
  while (result.iterations <= max_iterations) {
    const Vector w = A.transpose() * (b - A * x);
    Index best = -1;
    double best_violation = grad_tol;
    for (Index i = 0; i < n; ++i) {
      if (state[i] == VarState::kFree || blocked[i]) continue;
      if (lower(i) == upper(i)) continue;
      double violation = 0.0;
      if (state[i] == VarState::kAtLower) violation = w(i);
      if (state[i] == VarState::kAtUpper) violation = -w(i);
      if (violation > best_violation) {
        best_violation = violation;
        best = i;
      }
    }
    if (best < 0) {
      result.converged = true;
      break;
    }
    state[best] = VarState::kFree;
    ++result.iterations;
    if (inner_loop(best)) {
      std::fill(blocked.begin(), blocked.end(), false);
    } else {
      blocked[best] = true;
    }
  }
  x = clamp(x, lower, upper);
  result.residual_norm = (A * x - b).norm();
  return result;
}

LeastSquaresResult nonnegative_least_squares(const Matrix& A, const Vector& b) {
  const Index n = A.cols();
  return bounded_least_squares(A, b, Vector::Zero(n),
                               Vector::Constant(n, kInf));
}

Vector project_onto_polyhedron(const Matrix& A, const Vector& b,
                               const Vector& z) {
  const Index n = z.size();
  const Index m = A.rows();
  if (A.cols() != n || b.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "project_onto_polyhedron: inconsistent dimensions");
  }
  const Vector slack = b - A * z;
  if (m == 0 || slack.minCoeff() >= 0.0) return z;

  // Least-distance programming: min ||d|| s.t. -A d >= A z - b.
  Matrix E(n + 1, m);
  E.topRows(n) = -A.transpose();
  E.row(n) = (-slack).transpose();
  Vector f = Vector::Zero(n + 1);
  f(n) = 1.0;
  const LeastSquaresResult ls = nonnegative_least_squares(E, f);
  const Vector r = E * ls.x - f;
  if (r.norm() <= 1e-12 || std::abs(r(n)) <= 1e-14) {
    throw Error(ErrorCode::kEmptySet, "polyhedron is empty");
  }
  Vector y = z - r.head(n) / r(n);

  // Polish on the active set identified by the dual solution: project onto
  // the affine hull of the active rows, and keep it when it is feasible.
  std::vector<Index> active;
  for (Index i = 0; i < m; ++i) {
    if (ls.x(i) > 0.0) active.push_back(i);
  }
  if (!active.empty()) {
    Matrix Aa(static_cast<Index>(active.size()), n);
    Vector ba(static_cast<Index>(active.size()));
    for (size_t j = 0; j < active.size(); ++j) {
      Aa.row(j) = A.row(active[j]);
      ba(j) = b(active[j]);
    }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(Aa * Aa.transpose());
    const Vector mult = cod.solve(Aa * z - ba);
    const Vector polished = z - Aa.transpose() * mult;
    const double scale_b = std::max(1.0, b.cwiseAbs().maxCoeff());
    if ((A * polished - b).maxCoeff() <= 1e-12 * scale_b &&
        mult.minCoeff() >= -1e-9 * std::max(1.0, mult.cwiseAbs().maxCoeff())) {
      y = polished;
    }
  }
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  const double violation = (A * y - b).maxCoeff();
  if (violation > 1e-10 * scale) {
    throw Error(ErrorCode::kNonConvergence,
                "polyhedral projection residual above tolerance");
  }
  return y;
}

namespace {

// Tableau simplex on  min c^T x, T x = rhs, x >= 0  with rhs >= 0 and a
// feasible starting basis. Bland's rule throughout.
struct Tableau {
  Matrix T;  // rows 0..m-1 constraints, last row reduced costs; last col rhs
  std::vector<Index> basis;

  Index rows() const { return T.rows() - 1; }
  Index cols() const { return T.cols() - 1; }

  void pivot(Index r, Index c) {
    T.row(r) /= T(r, c);
    for (Index i = 0; i < T.rows(); ++i) {
      if (i != r && T(i, c) != 0.0) T.row(i) -= T(i, c) * T.row(r);
    }
    basis[r] = c;
  }

  // Returns false if unbounded.
  bool run(const std::vector<bool>& allowed, double tol) {
    const Index m = rows();
    for (int guard = 0; guard < 100000; ++guard) {
      Index enter = -1;
      for (Index j = 0; j < cols(); ++j) {
        if (allowed[j] && T(m, j) < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Index leave = -1;
      double best = kInf;
      for (Index i = 0; i < m; ++i) {
        if (T(i, enter) > tol) {
          const double ratio = T(i, cols()) / T(i, enter);
          if (ratio < best - 1e-15 ||
              (ratio <= best + 1e-15 && leave >= 0 &&
               basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    return true;
  }
};

}  // namespace

LpResult solve_lp(const Vector& c, const Matrix& A, const Vector& b) {
  const Index n = c.size();
  const Index m = A.rows();
  if (A.cols() != n || b.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch, "solve_lp: bad dimensions");
  }
  LpResult result;
  if (m == 0) {
    if (c.cwiseAbs().maxCoeff() > 0.0) {
      result.status = LpStatus::kUnbounded;
    } else {
      result.status = LpStatus::kOptimal;
      result.x = Vector::Zero(n);
    }
    return result;
  }

  // Columns: x+ (n), x- (n), slacks (m), artificials (m).
  const Index nv = 2 * n + 2 * m;
  Tableau tab;
  tab.T = Matrix::Zero(m + 1, nv + 1);
  tab.basis.resize(m);
  for (Index i = 0; i < m; ++i) {
    const double sign = b(i) < 0.0 ? -1.0 : 1.0;
    tab.T.block(i, 0, 1, n) = sign * A.row(i);
    tab.T.block(i, n, 1, n) = -sign * A.row(i);
    tab.T(i, 2 * n + i) = sign;
    tab.T(i, 2 * n + m + i) = 1.0;
    tab.T(i, nv) = sign * b(i);
    tab.basis[i] = 2 * n + m + i;
  }
  const double tol =
      1e-11 * std::max(1.0, std::max(A.cwiseAbs().maxCoeff(),
                                     b.cwiseAbs().maxCoeff()));

  // Phase I: minimize the sum of artificials.
  for (Index i = 0; i < m; ++i) tab.T.row(m) -= tab.T.row(i);
  for (Index i = 0; i < m; ++i) tab.T(m, 2 * n + m + i) = 0.0;
  std::vector<bool> allowed(nv, true);
  tab.run(allowed, tol);
  if (-tab.T(m, nv) > 1e-9 * std::max(1.0, b.cwiseAbs().maxCoeff())) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  // Drive remaining artificials out of the basis where possible.
  for (Index i = 0; i < m; ++i) {
    if (tab.basis[i] < 2 * n + m) continue;
    for (Index j = 0; j < 2 * n + m; ++j) {
      if (std::abs(tab.T(i, j)) > tol) {
        tab.pivot(i, j);
        break;
      }
    }
  }
  for (Index j = 2 * n + m; j < nv; ++j) allowed[j] = false;

  // Phase II.
  tab.T.row(m).setZero();
  for (Index j = 0; j < n; ++j) {
    tab.T(m, j) = c(j);
    tab.T(m, n + j) = -c(j);
  }
  for (Index i = 0; i < m; ++i) {
    const Index bj = tab.basis[i];
    if (tab.T(m, bj) != 0.0) tab.T.row(m) -= tab.T(m, bj) * tab.T.row(i);
  }
  const double ctol = 1e-11 * std::max(1.0, c.cwiseAbs().maxCoeff());
  if (!tab.run(allowed, std::max(tol, ctol))) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  Vector xs = Vector::Zero(nv);
  for (Index i = 0; i < m; ++i) xs(tab.basis[i]) = tab.T(i, nv);
  result.x = xs.head(n) - xs.segment(n, n);
  result.value = c.dot(result.x);
  result.status = LpStatus::kOptimal;
  return result;
}

double min_symmetric_eigenvalue(const Matrix& M) {
  if (M.rows() != M.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  }
  if (M.rows() == 0) return 0.0;
  const Matrix S = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void reduce_conic_support(const Matrix& P, Vector& weights) {
  const Index k = P.cols();
  if (weights.size() != k) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reduce_conic_support: weight count mismatch");
  }
  while (true) {
    std::vector<Index> support;
    for (Index j = 0; j < k; ++j) {
      if (weights(j) > 0.0) support.push_back(j);
      else weights(j) = 0.0;
    }
    if (support.empty()) return;
    const Matrix PS = select_columns(P, support);
    Eigen::JacobiSVD<Matrix> svd(PS, Eigen::ComputeFullV);
    const Vector& sv = svd.singularValues();
    const Index s = static_cast<Index>(support.size());
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const bool dependent =
        s > PS.rows() || smax == 0.0 || sv(s - 1) <= 1e-10 * smax;
    if (!dependent) return;
    Vector z = svd.matrixV().col(s - 1);
    if (z.maxCoeff() <= 0.0) z = -z;
    double t = kInf;
    Index drop = -1;
    for (Index j = 0; j < s; ++j) {
      if (z(j) > 1e-14) {
        const double ratio = weights(support[j]) / z(j);
        if (ratio < t) {
          t = ratio;
          drop = j;
        }
      }
    }
    if (drop < 0) return;
    for (Index j = 0; j < s; ++j) weights(support[j]) -= t * z(j);
    weights(support[drop]) = 0.0;
    for (Index j = 0; j < s; ++j) {
      if (weights(support[j]) < 0.0) weights(support[j]) = 0.0;
    }
  }
}

}  // namespace smpec::linalg
