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

// Brute-force reference computations for the tests. Nothing here calls into
// the library; instances are described by their raw data.

#ifndef SMPEC_TESTS_ORACLES_HPP_
#define SMPEC_TESTS_ORACLES_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct GridMax {
  Vec argmax;
  double value = -std::numeric_limits<double>::infinity();
};

// <M y + q, x - y>.
inline double affine_integrand(const Mat& M, const Vec& q, const Vec& x,
                               const Vec& y) {
  return (M * y + q).dot(x - y);
}

// Exhaustive 1-D grid over [lo, hi], endpoints included.
inline GridMax grid_max_1d(const std::function<double(double)>& fn, double lo,
                           double hi, double step) {
  GridMax best;
  best.argmax = Vec::Zero(1);
  const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  for (long i = 0; i <= n; ++i) {
    const double t = std::min(hi, lo + static_cast<double>(i) * step);
    const double v = fn(t);
    if (v > best.value) {
      best.value = v;
      best.argmax(0) = t;
    }
  }
  return best;
}

// Grid maximization over a box in dimension 1 or 2. A full grid with
// `coarse` cells per side is followed by refinement levels, each shrinking
// the step tenfold on a +/-10 cell window that recenters until the best
// point is interior. Reliable for concave objectives, which is all the gap
// integrand ever is. Stops once the step is at most final_step.
inline GridMax grid_max_box(const std::function<double(const Vec&)>& fn,
                            const Vec& lo, const Vec& hi, int coarse,
                            double final_step) {
  const Eigen::Index n = lo.size();
  Vec step = (hi - lo) / coarse;
  GridMax best;
  auto scan = [&](const Vec& from, const Vec& to, const Vec& h) {
    std::vector<long> count(n);
    for (Eigen::Index d = 0; d < n; ++d) {
      count[d] = h(d) > 0 ? static_cast<long>(std::floor(
                                (to(d) - from(d)) / h(d) + 0.5))
                          : 0;
    }
    Vec y(n);
    const long nx = count[0] + 1;
    const long ny = n > 1 ? count[1] + 1 : 1;
    for (long i = 0; i < nx; ++i) {
      y(0) = std::clamp(from(0) + static_cast<double>(i) * h(0), lo(0), hi(0));
      for (long j = 0; j < ny; ++j) {
        if (n > 1) {
          y(1) = std::clamp(from(1) + static_cast<double>(j) * h(1), lo(1),
                            hi(1));
        }
        const double v = fn(y);
        if (v > best.value) {
          best.value = v;
          best.argmax = y;
        }
      }
    }
  };
  scan(lo, hi, step);
  while (step.maxCoeff() > final_step) {
    const Vec window = step;
    step /= 10.0;
    for (int pass = 0; pass < 1000; ++pass) {
      const Vec center = best.argmax;
      const Vec from = (center - window).cwiseMax(lo);
      const Vec to = (center + window).cwiseMin(hi);
      scan(from, to, step);
      bool interior = true;
      for (Eigen::Index d = 0; d < n; ++d) {
        const double a = best.argmax(d);
        if ((a <= from(d) + 0.5 * step(d) && from(d) > lo(d)) ||
            (a >= to(d) - 0.5 * step(d) && to(d) < hi(d))) {
          interior = false;
        }
      }
      if (interior || best.argmax == center) break;
    }
  }
  return best;
}

// Vertices of a box with finite bounds, in lexicographic order.
inline std::vector<Vec> box_vertices(const Vec& lo, const Vec& hi) {
  const Eigen::Index n = lo.size();
  std::vector<Vec> out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Vec v(n);
    for (Eigen::Index d = 0; d < n; ++d) {
      v(d) = (mask >> (n - 1 - d)) & 1 ? hi(d) : lo(d);
    }
    out.push_back(v);
  }
  return out;
}

struct LpEnumeration {
  bool feasible = false;
  double value = std::numeric_limits<double>::infinity();
  std::vector<Vec> optimal_vertices;
};

// min c^T x s.t. G x <= h by enumerating every basic solution (n-subsets
// of rows with a nonsingular system). Assumes the optimum is attained at a
// vertex, which holds for pointed feasible sets.
inline LpEnumeration enumerate_lp(const Vec& c, const Mat& G, const Vec& h,
                                  double tol = 1e-9) {
  const Eigen::Index m = G.rows();
  const Eigen::Index n = G.cols();
  LpEnumeration out;
  std::vector<int> pick(n);
  std::vector<std::pair<double, Vec>> found;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      Mat B(n, n);
      Vec r(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        B.row(i) = G.row(pick[i]);
        r(i) = h(pick[i]);
      }
      Eigen::FullPivLU<Mat> lu(B);
      if (lu.rank() < n) return;
      const Vec x = lu.solve(r);
      if (((G * x - h).array() > tol).any()) return;
      found.emplace_back(c.dot(x), x);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  for (const auto& [v, x] : found) out.value = std::min(out.value, v);
  out.feasible = !found.empty();
  for (const auto& [v, x] : found) {
    if (v > out.value + tol) continue;
    bool dup = false;
    for (const Vec& y : out.optimal_vertices) {
      if ((y - x).norm() < tol) dup = true;
    }
    if (!dup) out.optimal_vertices.push_back(x);
  }
  return out;
}

// Nearest point of {y >= 0, y1 + y2 = scale} to z by scanning the segment.
inline Vec grid_project_simplex_2d(const Vec& z, double scale, double step) {
  const GridMax g = grid_max_1d(
      [&](double t) {
        Vec y(2);
        y << t, scale - t;
        return -(y - z).squaredNorm();
      },
      0.0, scale, step);
  Vec y(2);
  y << g.argmax(0), scale - g.argmax(0);
  return y;
}

}  // namespace oracle

#endif  // SMPEC_TESTS_ORACLES_HPP_
