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

#include "stationarity.hpp"

#include <algorithm>

#include "smpec/error.hpp"
#include "smpec/linalg.hpp"

namespace smpec::internal {

StationarityFit fit_stationarity(const ConvexObjective::SubdifferentialBox& box,
                                 const Matrix& G, const Matrix& N,
                                 CombinationMode mode, double scale) {
  const Index n = box.center.size();
  const Index k = G.cols();
  const Index m = N.cols();
  if (mode == CombinationMode::kConvex && k == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "convex stationarity fit needs at least one generator");
  }
  const bool convex = mode == CombinationMode::kConvex;
  const Index rows = n + (convex ? 1 : 0);
  const Index cols = n + k + m;
  Matrix A = Matrix::Zero(rows, cols);
  Vector rhs = Vector::Zero(rows);
  A.topLeftCorner(n, n).setIdentity();
  if (k > 0) A.block(0, n, n, k) = G;
  if (m > 0) A.block(0, n + k, n, m) = N;
  rhs.head(n) = -box.center;
  double rho = 1.0;
  if (convex) {
    rho = 1e3 * std::max(1.0, G.cwiseAbs().maxCoeff() * std::max(1.0, scale));
    A.block(n, n, 1, k).setConstant(rho);
    rhs(n) = rho * scale;
  }
  Vector lower(cols), upper(cols);
  lower.head(n) = -box.halfwidth;
  upper.head(n) = box.halfwidth;
  lower.tail(k + m).setZero();
  upper.tail(k + m).setConstant(linalg::kInf);
  const linalg::LeastSquaresResult ls =
      linalg::bounded_least_squares(A, rhs, lower, upper);

  StationarityFit fit;
  fit.u = box.center + ls.x.head(n);
  fit.a = ls.x.segment(n, k);
  fit.nu = ls.x.tail(m);
  if (convex) {
    const double total = fit.a.sum();
    if (total > 0.0) {
      fit.a *= scale / total;
    } else {
      fit.a.setConstant(scale / static_cast<double>(k));
    }
  }
  Vector r = fit.u;
  if (k > 0) r += G * fit.a;
  if (m > 0) r += N * fit.nu;
  fit.residual = r.norm();
  return fit;
}

}  // namespace smpec::internal
