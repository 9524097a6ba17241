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
#include <numeric>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "smpec/error.hpp"
#include "smpec/linalg.hpp"
#include "smpec/model.hpp"

namespace smpec {
namespace {

using linalg::kInf;

void require_size(const Vector& v, Index n, const char* what) {
  if (v.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": expected a vector of length " +
                    std::to_string(n) + ", got " + std::to_string(v.size()));
  }
}

double ball_tol(double radius, double tol) {
  return tol * std::max(1.0, radius);
}

}  // namespace

ConvexSet ConvexSet::box(Vector lower, Vector upper) {
  if (lower.size() != upper.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "box: lower and upper have different lengths");
  }
  for (Index i = 0; i < lower.size(); ++i) {
    if (std::isnan(lower(i)) || std::isnan(upper(i)) || lower(i) > upper(i) ||
        lower(i) == kInf || upper(i) == -kInf) {
      throw Error(ErrorCode::kEmptySet,
                  "box: lower bound exceeds upper bound in coordinate " +
                      std::to_string(i));
    }
  }
  ConvexSet set;
  set.kind_ = Kind::kBox;
  set.n_ = lower.size();
  set.bounded_ = lower.allFinite() && upper.allFinite();
  set.lower_ = std::move(lower);
  set.upper_ = std::move(upper);
  return set;
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kInvalidArgument, "ball: radius must be positive");
  }
  ConvexSet set;
  set.kind_ = Kind::kBall;
  set.n_ = center.size();
  set.center_ = std::move(center);
  set.radius_ = radius;
  return set;
}

ConvexSet ConvexSet::polytope(Matrix A, Vector b) {
  if (A.rows() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "polytope: A must have as many rows as b");
  }
  ConvexSet set;
  set.kind_ = Kind::kPolytope;
  set.n_ = A.cols();
  set.A_ = std::move(A);
  set.b_ = std::move(b);

  // Boundedness check: every coordinate must have a finite min and max.
  const Index n = set.n_;
  set.bounded_ = true;
  set.extreme_points_.resize(n, 2 * n);
  for (Index i = 0; i < 2 * n; ++i) {
    Vector c = Vector::Zero(n);
    c(i / 2) = (i % 2 == 0) ? 1.0 : -1.0;
    const linalg::LpResult lp = linalg::solve_lp(c, set.A_, set.b_);
    if (lp.status == linalg::LpStatus::kInfeasible) {
      throw Error(ErrorCode::kEmptySet, "polytope: constraints are infeasible");
    }
    if (lp.status == linalg::LpStatus::kUnbounded) {
      set.bounded_ = false;
      set.extreme_points_.resize(0, 0);
      break;
    }
    set.extreme_points_.col(i) = lp.x;
  }
  return set;
}

ConvexSet ConvexSet::simplex(Index n, double scale) {
  if (n <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "simplex: dimension must be >= 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "simplex: scale must be positive");
  }
  ConvexSet set;
  set.kind_ = Kind::kSimplex;
  set.n_ = n;
  set.scale_ = scale;
  return set;
}

bool ConvexSet::contains(const Vector& x, double tol) const {
  if (x.size() != n_ || !x.allFinite()) return false;
  switch (kind_) {
    case Kind::kBox:
      return ((x - lower_).array() >= -tol).all() &&
             ((upper_ - x).array() >= -tol).all();
    case Kind::kBall:
      return (x - center_).norm() <= radius_ + ball_tol(radius_, tol);
    case Kind::kPolytope: {
      if (A_.rows() == 0) return true;
      const Vector slack = A_ * x - b_;
      const Vector scale =
          A_.rowwise().norm().cwiseMax(1.0);
      return (slack.array() <= tol * scale.array()).all();
    }
    case Kind::kSimplex:
      return (x.array() >= -tol).all() &&
             std::abs(x.sum() - scale_) <= tol * std::max(1.0, scale_);
  }
  return false;
}

Vector ConvexSet::project(const Vector& z) const {
  require_size(z, n_, "project");
  switch (kind_) {
    case Kind::kBox:
      return z.cwiseMax(lower_).cwiseMin(upper_);
    case Kind::kBall: {
      const Vector d = z - center_;
      const double r = d.norm();
      if (r <= radius_) return z;
      return center_ + (radius_ / r) * d;
    }
    case Kind::kPolytope:
      return linalg::project_onto_polyhedron(A_, b_, z);
    case Kind::kSimplex: {
      std::vector<double> u(z.data(), z.data() + n_);
      std::sort(u.begin(), u.end(), std::greater<double>());
      double cumsum = 0.0;
      double theta = 0.0;
      for (Index j = 0; j < n_; ++j) {
        cumsum += u[j];
        const double t = (cumsum - scale_) / static_cast<double>(j + 1);
        if (u[j] - t > 0.0) theta = t;
      }
      Vector x = (z.array() - theta).cwiseMax(0.0);
      // Absorb rounding so the equality holds to machine precision.
      const double excess = x.sum() - scale_;
      if (excess != 0.0) {
        Index imax;
        x.maxCoeff(&imax);
        x(imax) -= excess;
      }
      return x;
    }
  }
  return z;
}

Vector ConvexSet::linear_minimizer(const Vector& c) const {
  require_size(c, n_, "linear_minimizer");
  if (!bounded_) {
    throw Error(ErrorCode::kUnboundedSet,
                "linear_minimizer: the set is unbounded");
  }
  switch (kind_) {
    case Kind::kBox: {
      Vector y(n_);
      for (Index i = 0; i < n_; ++i) y(i) = c(i) < 0.0 ? upper_(i) : lower_(i);
      return y;
    }
    case Kind::kBall: {
      const double norm = c.norm();
      Vector y = center_;
      if (norm == 0.0) {
        if (n_ > 0) y(0) -= radius_;
        return y;
      }
      return center_ - (radius_ / norm) * c;
    }
    case Kind::kSimplex: {
      const double cmin = c.minCoeff();
      const double tie = 1e-14 * std::max(1.0, c.cwiseAbs().maxCoeff());
      Index best = 0;
      for (Index i = 0; i < n_; ++i) {
        if (c(i) <= cmin + tie) best = i;
      }
      Vector y = Vector::Zero(n_);
      y(best) = scale_;
      return y;
    }
    case Kind::kPolytope: {
      linalg::LpResult lp = linalg::solve_lp(c, A_, b_);
      if (lp.status != linalg::LpStatus::kOptimal) {
        throw Error(ErrorCode::kUnboundedSet,
                    "linear_minimizer: polytope LP has no optimum");
      }
      // Lexicographic refinement over the optimal face.
      Matrix A(A_.rows() + 1 + n_, n_);
      Vector b(A_.rows() + 1 + n_);
      A.topRows(A_.rows()) = A_;
      b.head(A_.rows()) = b_;
      Index rows = A_.rows();
      A.row(rows) = c.transpose();
      b(rows) = lp.value + 1e-10 * std::max(1.0, std::abs(lp.value));
      ++rows;
      Vector y = lp.x;
      for (Index i = 0; i < n_; ++i) {
        Vector e = Vector::Zero(n_);
        e(i) = 1.0;
        const linalg::LpResult lex =
            linalg::solve_lp(e, A.topRows(rows), b.head(rows));
        if (lex.status != linalg::LpStatus::kOptimal) break;
        y = lex.x;
        A.row(rows) = e.transpose();
        b(rows) = lex.value + 1e-10 * std::max(1.0, std::abs(lex.value));
        ++rows;
      }
      if (!contains(y)) y = project(y);
      return y;
    }
  }
  return c;
}

ConeGenerators ConvexSet::normal_cone_generators(const Vector& x,
                                                 double active_tol) const {
  require_size(x, n_, "normal_cone_generators");
  std::vector<Vector> rays;
  Index span = 0;
  switch (kind_) {
    case Kind::kBox:
      for (Index i = 0; i < n_; ++i) {
        const double t = active_tol * std::max(1.0, std::abs(x(i)));
        const bool at_upper = x(i) >= upper_(i) - t;
        const bool at_lower = x(i) <= lower_(i) + t;
        if (at_upper) rays.push_back(Vector::Unit(n_, i));
        if (at_lower) rays.push_back(-Vector::Unit(n_, i));
        if (at_upper || at_lower) ++span;
      }
      break;
    case Kind::kBall: {
      const Vector d = x - center_;
      if (d.norm() >= radius_ - ball_tol(radius_, active_tol)) {
        rays.push_back(d / d.norm());
        span = 1;
      }
      break;
    }
    case Kind::kSimplex: {
      rays.push_back(Vector::Ones(n_));
      rays.push_back(-Vector::Ones(n_));
      span = 1;
      for (Index i = 0; i < n_; ++i) {
        if (x(i) <= active_tol * std::max(1.0, scale_)) {
          rays.push_back(-Vector::Unit(n_, i));
          ++span;
        }
      }
      span = std::min(span, n_);
      break;
    }
    case Kind::kPolytope: {
      const Vector slack = b_ - A_ * x;
      for (Index i = 0; i < A_.rows(); ++i) {
        const double scale = std::max(1.0, A_.row(i).norm());
        if (slack(i) <= active_tol * scale) {
          rays.push_back(A_.row(i).transpose());
        }
      }
      if (!rays.empty()) {
        Matrix R(n_, static_cast<Index>(rays.size()));
        for (size_t j = 0; j < rays.size(); ++j) R.col(j) = rays[j];
        Eigen::FullPivLU<Matrix> lu(R);
        lu.setThreshold(1e-10);
        span = lu.rank();
      }
      break;
    }
  }
  ConeGenerators gens;
  gens.rays.resize(n_, static_cast<Index>(rays.size()));
  for (size_t j = 0; j < rays.size(); ++j) gens.rays.col(j) = rays[j];
  gens.dimension = span;
  return gens;
}

Vector ConvexSet::project_onto_normal_cone(const Vector& x, const Vector& v,
                                           double active_tol) const {
  require_size(v, n_, "normal cone projection");
  if (!contains(x)) {
    throw Error(ErrorCode::kNotInSet, "normal cone requested at a point "
                                      "outside the set");
  }
  const ConeGenerators gens = normal_cone_generators(x, active_tol);
  if (gens.rays.cols() == 0) return Vector::Zero(n_);
  const linalg::LeastSquaresResult ls =
      linalg::nonnegative_least_squares(gens.rays, v);
  return gens.rays * ls.x;
}

double ConvexSet::normal_cone_residual(const Vector& x, const Vector& v,
                                       double active_tol) const {
  return (v - project_onto_normal_cone(x, v, active_tol)).norm();
}

double ConvexSet::diameter() const {
  switch (kind_) {
    case Kind::kBox:
      return bounded_ ? (upper_ - lower_).norm() : kInf;
    case Kind::kBall:
      return 2.0 * radius_;
    case Kind::kSimplex:
      return n_ > 1 ? scale_ * std::sqrt(2.0) : 0.0;
    case Kind::kPolytope: {
      if (!bounded_) return kInf;
      const Vector lo = extreme_points_.rowwise().minCoeff();
      const Vector hi = extreme_points_.rowwise().maxCoeff();
      return (hi - lo).norm();
    }
  }
  return kInf;
}

Vector ConvexSet::sample(std::mt19937_64& rng) const {
  if (!bounded_) {
    throw Error(ErrorCode::kUnboundedSet, "sample: the set is unbounded");
  }
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  switch (kind_) {
    case Kind::kBox: {
      Vector y(n_);
      for (Index i = 0; i < n_; ++i) {
        y(i) = lower_(i) + unif(rng) * (upper_(i) - lower_(i));
      }
      return y;
    }
    case Kind::kBall: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Vector d(n_);
      for (Index i = 0; i < n_; ++i) d(i) = gauss(rng);
      const double norm = d.norm();
      if (norm == 0.0) return center_;
      const double r =
          radius_ * std::pow(unif(rng), 1.0 / static_cast<double>(n_));
      return center_ + (r / norm) * d;
    }
    case Kind::kSimplex: {
      std::exponential_distribution<double> expo(1.0);
      Vector y(n_);
      for (Index i = 0; i < n_; ++i) y(i) = expo(rng);
      y *= scale_ / y.sum();
      return project(y);
    }
    case Kind::kPolytope: {
      const Vector lo = extreme_points_.rowwise().minCoeff();
      const Vector hi = extreme_points_.rowwise().maxCoeff();
      for (int attempt = 0; attempt < 200; ++attempt) {
        Vector y(n_);
        for (Index i = 0; i < n_; ++i) y(i) = lo(i) + unif(rng) * (hi(i) - lo(i));
        if (contains(y, 0.0)) return y;
      }
      // Thin polytopes: random convex combination of coordinate extremizers.
      Vector w(extreme_points_.cols());
      for (Index j = 0; j < w.size(); ++j) w(j) = unif(rng) + 1e-3;
      w /= w.sum();
      return extreme_points_ * w;
    }
  }
  return Vector::Zero(n_);
}

ConvexSet ConvexSet::wrapped(double R) const {
  if (bounded_) return *this;
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw Error(ErrorCode::kInvalidArgument, "box radius must be positive");
  }
  if (kind_ == Kind::kBox) {
    Vector lo = lower_;
    Vector hi = upper_;
    for (Index i = 0; i < n_; ++i) {
      if (!std::isfinite(lo(i))) lo(i) = -R;
      if (!std::isfinite(hi(i))) hi(i) = R;
      if (lo(i) > hi(i)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "box radius " + std::to_string(R) +
                        " does not reach the finite bound in coordinate " +
                        std::to_string(i));
      }
    }
    return box(std::move(lo), std::move(hi));
  }
  Matrix A(A_.rows() + 2 * n_, n_);
  Vector b(A_.rows() + 2 * n_);
  A.topRows(A_.rows()) = A_;
  b.head(A_.rows()) = b_;
  for (Index i = 0; i < n_; ++i) {
    A.row(A_.rows() + 2 * i) = Vector::Unit(n_, i).transpose();
    A.row(A_.rows() + 2 * i + 1) = -Vector::Unit(n_, i).transpose();
    b(A_.rows() + 2 * i) = R;
    b(A_.rows() + 2 * i + 1) = R;
  }
  return polytope(std::move(A), std::move(b));
}

}  // namespace smpec
