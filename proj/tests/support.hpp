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

#ifndef SMPEC_TESTS_SUPPORT_HPP_
#define SMPEC_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>

#include "smpec/model.hpp"

namespace support {

using smpec::ConvexObjective;
using smpec::ConvexSet;
using smpec::Matrix;
using smpec::MonotoneMap;
using smpec::Vector;

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

inline smpec::Problem make_problem(ConvexObjective f, MonotoneMap F,
                                   ConvexSet C,
                                   std::optional<double> radius = 1e3) {
  smpec::ProblemInstance inst;
  inst.dimension = C.dimension();
  inst.objective = std::move(f);
  inst.map = std::move(F);
  inst.set = std::move(C);
  inst.box_radius = radius;
  return smpec::Problem::create(std::move(inst));
}

// F(x) = x on [-1, 1].
inline smpec::Problem example_3_1() {
  return make_problem(ConvexObjective::quadratic_distance(vec({0.0})),
                      MonotoneMap::affine(Matrix::Identity(1, 1),
                                          Vector::Zero(1)),
                      ConvexSet::box(vec({-1.0}), vec({1.0})));
}

// F = (1, 1) on [0, 1]^2, f = ||x||^2.
inline smpec::Problem example_3_2() {
  return make_problem(ConvexObjective::squared_norm(2),
                      MonotoneMap::affine(Matrix::Zero(2, 2), vec({1, 1})),
                      ConvexSet::box(Vector::Zero(2), Vector::Ones(2)));
}

// Random monotone affine map M = B B^T + (K - K^T) on a random box.
inline smpec::Problem random_affine_box(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.5, 2.0);
  Matrix B(n, n), K(n, n);
  Vector q(n), lo(n), hi(n), a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      B(i, j) = g(rng);
      K(i, j) = g(rng);
    }
    q(i) = g(rng);
    lo(i) = -u(rng);
    hi(i) = u(rng);
    a(i) = g(rng);
  }
  // Drop a rank so the map is merely monotone.
  B.col(0).setZero();
  const Matrix M = B * B.transpose() + (K - K.transpose());
  return make_problem(ConvexObjective::quadratic_distance(a),
                      MonotoneMap::affine(M, q), ConvexSet::box(lo, hi));
}

}  // namespace support

#endif  // SMPEC_TESTS_SUPPORT_HPP_
