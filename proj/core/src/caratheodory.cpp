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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smpec/error.hpp"
#include "smpec/gap.hpp"
#include "smpec/linalg.hpp"

namespace smpec {

Vector ConvexCombination::combine() const {
  if (points.empty()) return Vector();
  Vector v = Vector::Zero(points.front().size());
  for (size_t j = 0; j < points.size(); ++j) v += weights[j] * points[j];
  return v;
}

ConvexCombination caratheodory_reduce(const std::vector<Vector>& points,
                                      const Vector& target, double tol) {
  if (points.empty()) {
    throw Error(ErrorCode::kTargetNotInHull, "empty point set");
  }
  const Index n = target.size();
  const Index k = static_cast<Index>(points.size());
  Matrix P(n, k);
  for (Index j = 0; j < k; ++j) {
    if (points[j].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "caratheodory_reduce: point of the wrong dimension");
    }
    P.col(j) = points[j];
  }
  const double scale =
      std::max({1.0, P.cwiseAbs().maxCoeff(), target.cwiseAbs().maxCoeff()});

  // Hull feasibility: nonnegative weights with a heavily weighted
  // sum-to-one row.
  const double rho = 1e3 * scale;
  Matrix E(n + 1, k);
  E.topRows(n) = P;
  E.row(n).setConstant(rho);
  Vector t(n + 1);
  t.head(n) = target;
  t(n) = rho;
  Vector w = linalg::nonnegative_least_squares(E, t).x;
  const double total = w.sum();
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kTargetNotInHull,
                "target is not in the convex hull of the points");
  }
  w /= total;
  if ((P * w - target).norm() > tol * scale) {
    throw Error(ErrorCode::kTargetNotInHull,
                "target is not in the convex hull of the points (distance " +
                    std::to_string((P * w - target).norm()) + ")");
  }

  Matrix Aff(n + 1, k);
  Aff.topRows(n) = P;
  Aff.row(n).setOnes();
  linalg::reduce_conic_support(Aff, w);

  // Recompute barycentric weights exactly on the reduced support.
  std::vector<Index> support;
  for (Index j = 0; j < k; ++j) {
    if (w(j) > 0.0) support.push_back(j);
  }
  Matrix As(n + 1, static_cast<Index>(support.size()));
  for (size_t j = 0; j < support.size(); ++j) As.col(j) = Aff.col(support[j]);
  Vector rhs(n + 1);
  rhs.head(n) = target;
  rhs(n) = 1.0;
  Vector ws = As.colPivHouseholderQr().solve(rhs);
  if (!ws.allFinite() || ws.minCoeff() < 0.0) {
    for (size_t j = 0; j < support.size(); ++j) ws(j) = w(support[j]);
  }
  ws /= ws.sum();

  ConvexCombination out;
  for (size_t j = 0; j < support.size(); ++j) {
    if (ws(j) <= 0.0) continue;
    out.points.push_back(points[support[j]]);
    out.weights.push_back(ws(j));
  }
  double sum = 0.0;
  for (double v : out.weights) sum += v;
  for (double& v : out.weights) v /= sum;
  if ((out.combine() - target).norm() > tol * scale) {
    throw Error(ErrorCode::kTargetNotInHull,
                "Caratheodory reduction lost accuracy");
  }
  return out;
}

}  // namespace smpec
