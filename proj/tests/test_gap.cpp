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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles/frozen.hpp"
#include "oracles/oracles.hpp"
#include "smpec/error.hpp"
#include "smpec/gap.hpp"
#include "smpec/solver.hpp"
#include "support.hpp"

using smpec::ConvexObjective;
using smpec::ConvexSet;
using smpec::GapEvaluation;
using smpec::Matrix;
using smpec::MonotoneMap;
using smpec::Vector;
using support::vec;

TEST_CASE("identity map on [-1, 1] at the solution") {
  const smpec::Problem p = support::example_3_1();
  const GapEvaluation g = smpec::eval_gap(p, vec({0.0}));
  CHECK(std::abs(g.value) <= 1e-8);
  CHECK(std::abs(g.subgradient(0)) <= 1e-8);
  REQUIRE(!g.maximizers.empty());
  CHECK(std::abs(g.maximizers.front()(0)) <= 1e-8);
  CHECK(g.certified);
}

TEST_CASE("identity map on [-1, 1] at x = 1") {
  const smpec::Problem p = support::example_3_1();
  const GapEvaluation g = smpec::eval_gap(p, vec({1.0}));
  CHECK(g.value == doctest::Approx(frozen::kExample31GapAtOne).epsilon(1e-8));
  CHECK(g.maximizers.front()(0) ==
        doctest::Approx(frozen::kExample31MaximizerAtOne).epsilon(1e-6));
  CHECK(smpec::gap_subgradient(p, vec({1.0}))(0) ==
        doctest::Approx(0.5).epsilon(1e-6));
  const std::vector<Vector> Y = smpec::argmax_set(p, vec({1.0}), 1e-8);
  REQUIRE(Y.size() == 1);
  CHECK(Y[0](0) == doctest::Approx(frozen::kExample31MaximizerAtOne));
}

TEST_CASE("constant map on the unit square") {
  const smpec::Problem p = support::example_3_2();
  const GapEvaluation g = smpec::eval_gap(p, vec({0, 0}));
  CHECK(std::abs(g.value) <= 1e-8);
  CHECK((g.maximizers.front() - vec({0, 0})).norm() <= 1e-8);
  CHECK((g.subgradient - vec({1, 1})).norm() <= 1e-8);
  const std::vector<Vector> Y = smpec::argmax_set(p, vec({0, 0}), 1e-8);
  REQUIRE(Y.size() == 1);
  CHECK((Y[0] - vec({frozen::kExample32Argmax[0],
                     frozen::kExample32Argmax[1]}))
            .norm() <= 1e-12);
}

TEST_CASE("zero map: every sampled point maximizes") {
  const smpec::Problem p = support::make_problem(
      ConvexObjective::squared_norm(2),
      MonotoneMap::affine(Matrix::Zero(2, 2), Vector::Zero(2)),
      ConvexSet::box(-Vector::Ones(2), Vector::Ones(2)));
  const Vector x = vec({0.3, -0.2});
  const std::vector<Vector> Y = smpec::argmax_set(p, x, 1e-8);
  CHECK(Y.size() >= 2);
  for (const Vector& y : Y) {
    CHECK(p.set().contains(y));
    CHECK(smpec::gap_integrand(p, x, y) == 0.0);
  }
}

TEST_CASE("gap on a ball and a simplex matches grid maximization") {
  std::mt19937_64 rng(2);
  Matrix M(2, 2);
  M << 1.0, 0.5, -0.5, 0.3;
  const Vector q = vec({0.2, -0.4});
  const smpec::Problem ball = support::make_problem(
      ConvexObjective::squared_norm(2), MonotoneMap::affine(M, q),
      ConvexSet::ball(vec({0.1, 0.0}), 0.8));
  for (int i = 0; i < 10; ++i) {
    const Vector x = ball.set().sample(rng);
    // Polar grid over the disc.
    const oracle::GridMax ref = oracle::grid_max_box(
        [&](const Vector& rt) {
          const Vector y = vec({0.1 + rt(0) * std::cos(rt(1)),
                                rt(0) * std::sin(rt(1))});
          return oracle::affine_integrand(M, q, x, y);
        },
        vec({0.0, -3.2}), vec({0.8, 3.2}), 400, 1e-5);
    CHECK(smpec::eval_gap(ball, x).value ==
          doctest::Approx(ref.value).epsilon(1e-6).scale(1.0));
  }
  const smpec::Problem simplex = support::make_problem(
      ConvexObjective::squared_norm(2), MonotoneMap::affine(M, q),
      ConvexSet::simplex(2, 1.0));
  for (int i = 0; i < 10; ++i) {
    const Vector x = simplex.set().sample(rng);
    const oracle::GridMax ref = oracle::grid_max_1d(
        [&](double t) {
          return oracle::affine_integrand(M, q, x, vec({t, 1.0 - t}));
        },
        0.0, 1.0, 1e-5);
    CHECK(std::abs(smpec::eval_gap(simplex, x).value - ref.value) <= 1e-6);
  }
}

TEST_CASE("polytope gap matches the same box written as a box") {
  std::mt19937_64 rng(4);
  Matrix M(3, 3);
  M << 2, 1, 0, -1, 1, 0.5, 0, -0.5, 0.2;
  const Vector q = vec({0.1, -0.3, 0.5});
  Matrix A(6, 3);
  A << Matrix::Identity(3, 3), -Matrix::Identity(3, 3);
  const smpec::Problem poly = support::make_problem(
      ConvexObjective::squared_norm(3), MonotoneMap::affine(M, q),
      ConvexSet::polytope(A, Vector::Ones(6)));
  const smpec::Problem box = support::make_problem(
      ConvexObjective::squared_norm(3), MonotoneMap::affine(M, q),
      ConvexSet::box(-Vector::Ones(3), Vector::Ones(3)));
  for (int i = 0; i < 20; ++i) {
    const Vector x = box.set().sample(rng);
    CHECK(std::abs(smpec::eval_gap(poly, x).value -
                   smpec::eval_gap(box, x).value) <= 1e-8);
  }
}

TEST_CASE("gap properties on random monotone affine boxes") {
  std::mt19937_64 rng(8);
  for (int inst = 0; inst < 3; ++inst) {
    const smpec::Problem p = support::random_affine_box(rng, 2 + inst);
    for (int i = 0; i < 100; ++i) {
      const Vector x = p.set().sample(rng);
      const Vector z = p.set().sample(rng);
      const GapEvaluation gx = smpec::eval_gap(p, x);
      const double gz = smpec::eval_gap(p, z).value;
      const double gm = smpec::eval_gap(p, 0.5 * (x + z)).value;
      CHECK(gx.value >= -1e-8);
      CHECK(gm <= 0.5 * gx.value + 0.5 * gz + 1e-8);
      CHECK(gz >= gx.value + gx.subgradient.dot(z - x) - 1e-7);
      for (const Vector& y : gx.maximizers) {
        CHECK(smpec::gap_integrand(p, x, y) >= gx.value - 1e-6);
      }
      CHECK((gx.subgradient - p.map()(gx.maximizers.front())).norm() == 0.0);
    }
  }
}

TEST_CASE("zero level set is the VI solution set") {
  std::mt19937_64 rng(9);
  for (int inst = 0; inst < 3; ++inst) {
    const smpec::Problem p = support::random_affine_box(rng, 2 + inst);
    const smpec::ViSolveResult r = smpec::solve_vi(p, 1e-9);
    REQUIRE(r.converged);
    CHECK(smpec::eval_gap(p, r.point).value <= 1e-6);
    for (int i = 0; i < 200; ++i) {
      const Vector y = p.set().sample(rng);
      CHECK(p.map()(y).dot(y - r.point) >= -1e-6);
    }
  }
}

TEST_CASE("black-box maps use multistart ascent") {
  const smpec::Problem p = support::make_problem(
      ConvexObjective::squared_norm(1),
      MonotoneMap::black_box(1, [](const Vector& x) { return Vector(x); }),
      ConvexSet::box(vec({-1.0}), vec({1.0})));
  const GapEvaluation g = smpec::eval_gap(p, vec({1.0}));
  CHECK_FALSE(g.certified);
  CHECK(g.value == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("inner iteration cap raises inner-non-convergence") {
  const smpec::Problem p = support::example_3_1();
  smpec::GapOptions opts;
  opts.max_inner_iterations = 0;
  opts.fw_gap_tol = -1.0;  // unreachable
  try {
    smpec::eval_gap(p, vec({1.0}), opts);
    FAIL("expected an error");
  } catch (const smpec::Error& e) {
    CHECK(e.code() == smpec::ErrorCode::kInnerNonConvergence);
  }
}
