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

#include <limits>

#include "oracles/frozen.hpp"
#include "smpec/certify.hpp"
#include "smpec/error.hpp"
#include "smpec/solver.hpp"
#include "support.hpp"

using smpec::BcqVerdict;
using smpec::ConvexObjective;
using smpec::ConvexSet;
using smpec::Matrix;
using smpec::MonotoneMap;
using smpec::Vector;
using support::vec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

smpec::Problem min_norm_lp() {
  Matrix M(2, 2);
  M << 0, -1, 1, 0;
  return support::make_problem(
      ConvexObjective::squared_norm(2), MonotoneMap::affine(M, vec({1, -1})),
      ConvexSet::box(Vector::Zero(2), Vector::Constant(2, kInf)), 10.0);
}

smpec::Problem basis_pursuit() {
  Matrix A(1, 2);
  A << 1, 1;
  return support::make_problem(
      ConvexObjective::l1_norm(2),
      MonotoneMap::quadratic_gradient(A, Vector::Ones(1)),
      ConvexSet::box(Vector::Constant(2, -kInf), Vector::Constant(2, kInf)),
      10.0);
}

smpec::Problem zero_map(const Vector& a) {
  return support::make_problem(
      ConvexObjective::quadratic_distance(a),
      MonotoneMap::affine(Matrix::Zero(2, 2), Vector::Zero(2)),
      ConvexSet::box(-Vector::Ones(2), Vector::Ones(2)));
}

}  // namespace

TEST_SUITE("kkt_certificate") {
  TEST_CASE("unit square at the origin") {
    const smpec::KktCertificate c =
        smpec::kkt_certificate(support::example_3_2(), vec({0, 0}), 1e-6);
    CHECK(c.certified);
    REQUIRE(c.points.size() == 1);
    CHECK(c.points[0].norm() == 0.0);
    CHECK(c.multipliers[0] == 0.0);
    CHECK(c.u.norm() == 0.0);
    CHECK(c.stationarity_residual == 0.0);
    CHECK(c.complementarity_residual == 0.0);
  }

  TEST_CASE("zero map at an interior minimizer of f") {
    const Vector a = vec({0.25, -0.5});
    const smpec::KktCertificate c =
        smpec::kkt_certificate(zero_map(a), a, 1e-6);
    CHECK(c.certified);
    for (double m : c.multipliers) CHECK(m == 0.0);
  }

  TEST_CASE("min-norm LP at the primal-dual pair") {
    const smpec::KktCertificate c = smpec::kkt_certificate(
        min_norm_lp(),
        vec({frozen::kMinNormLpSolution[0], frozen::kMinNormLpSolution[1]}),
        1e-6);
    CHECK(c.certified);
    CHECK(c.stationarity_residual <= 1e-6);
    CHECK(c.complementarity_residual <= 1e-6);
    CHECK(c.points.size() <= 3);
  }

  TEST_CASE("points outside the lower-level solution set") {
    try {
      smpec::kkt_certificate(min_norm_lp(), vec({0.5, 0.5}), 1e-6);
      FAIL("expected an error");
    } catch (const smpec::Error& e) {
      CHECK(e.code() == smpec::ErrorCode::kLowerLevelInfeasible);
    }
    try {
      smpec::kkt_certificate(min_norm_lp(), vec({-1, 1}), 1e-6);
      FAIL("expected an error");
    } catch (const smpec::Error& e) {
      CHECK(e.code() == smpec::ErrorCode::kNotInSet);
    }
  }

  TEST_CASE("feasible but suboptimal point is not certified") {
    // (0.2, 0.8) solves the lower level but f is not minimal along the
    // segment direction (1, -1) at this point.
    const smpec::Problem p = zero_map(vec({0.9, 0.0}));
    const smpec::KktCertificate c =
        smpec::kkt_certificate(p, vec({0.2, 0.8}), 1e-6);
    CHECK_FALSE(c.certified);
    CHECK(c.stationarity_residual > 1e-6);
  }
}

TEST_SUITE("membership_check") {
  TEST_CASE("basis pursuit segment") {
    const smpec::Problem p = basis_pursuit();
    const Vector x_bar = vec({0.5, 0.5});
    const smpec::KktCertificate c = smpec::kkt_certificate(p, x_bar, 1e-6);
    REQUIRE(c.certified);
    const smpec::MembershipReport on =
        smpec::membership_check(p, c, x_bar, vec({0.2, 0.8}), 1e-6);
    CHECK(on.verdict);
    CHECK(on.objective_condition);
    CHECK(p.objective().value(vec({0.2, 0.8})) ==
          doctest::Approx(frozen::kBasisPursuitValue));
    const smpec::MembershipReport off =
        smpec::membership_check(p, c, x_bar, vec({1.5, -0.5}), 1e-6);
    CHECK_FALSE(off.verdict);
    CHECK_FALSE(off.objective_condition);
    const smpec::MembershipReport self =
        smpec::membership_check(p, c, x_bar, x_bar, 1e-6);
    CHECK(self.verdict);
  }

  TEST_CASE("points off the lower-level solution set are rejected") {
    const smpec::Problem p = basis_pursuit();
    const Vector x_bar = vec({0.5, 0.5});
    const smpec::KktCertificate c = smpec::kkt_certificate(p, x_bar, 1e-6);
    const smpec::MembershipReport r =
        smpec::membership_check(p, c, x_bar, vec({0.2, 0.2}), 1e-6);
    CHECK_FALSE(r.lower_level);
    CHECK_FALSE(r.verdict);
  }
}

TEST_SUITE("weak_bcq_check") {
  TEST_CASE("identity map on [-1, 1] fails with witness 0") {
    const smpec::WeakBcqDiagnostic d =
        smpec::weak_bcq_check(support::example_3_1(), vec({0.0}), 1e-6);
    CHECK(d.verdict == BcqVerdict::kFails);
    REQUIRE(d.witness);
    CHECK(std::abs((*d.witness)(0)) <= 1e-8);
    CHECK(d.cone_dimension == 0);
  }

  TEST_CASE("unit square at the origin holds") {
    const smpec::WeakBcqDiagnostic d =
        smpec::weak_bcq_check(support::example_3_2(), vec({0, 0}), 1e-6);
    CHECK(d.verdict == BcqVerdict::kHolds);
    CHECK(d.cone_dimension == 2);
    // dist((1, 1), {(t, 0)} u {(0, t)}) = 1.
    CHECK(d.distance == doctest::Approx(1.0));
    CHECK_FALSE(d.witness);
  }

  TEST_CASE("interior point reports the trivial cone") {
    const smpec::Problem p = support::make_problem(
        ConvexObjective::squared_norm(2),
        MonotoneMap::affine(Matrix::Identity(2, 2), vec({0.5, 0.0})),
        ConvexSet::box(-Vector::Ones(2), Vector::Ones(2)));
    const Vector x = vec({0.3, 0.3});
    CHECK(smpec::eval_gap(p, x).value > 0.0);
    const smpec::WeakBcqDiagnostic d = smpec::weak_bcq_check(p, x, 1e-6);
    CHECK(d.cone_dimension == 0);
    REQUIRE(d.boundary_faces.size() == 1);
    CHECK(d.boundary_faces[0].cols() == 0);
  }

  TEST_CASE("large polytopes are unsupported") {
    Matrix A(8, 4);
    A << Matrix::Identity(4, 4), -Matrix::Identity(4, 4);
    const smpec::Problem p = support::make_problem(
        ConvexObjective::squared_norm(4),
        MonotoneMap::affine(Matrix::Identity(4, 4), Vector::Zero(4)),
        ConvexSet::polytope(A, Vector::Ones(8)));
    try {
      smpec::weak_bcq_check(p, Vector::Zero(4), 1e-6);
      FAIL("expected an error");
    } catch (const smpec::Error& e) {
      CHECK(e.code() == smpec::ErrorCode::kUnsupportedSetDimension);
    }
  }
}

TEST_SUITE("multiplier_certificate") {
  TEST_CASE("unit square at the origin needs no multiplier") {
    const smpec::MultiplierCertificate m = smpec::multiplier_certificate(
        support::example_3_2(), vec({0, 0}), 1e-6);
    CHECK(m.certified);
    REQUIRE(m.beta.size() == 1);
    CHECK(m.beta[0] == 0.0);
    CHECK(m.residual == 0.0);
    CHECK(m.y_star == 0.0);
  }

  TEST_CASE("zero map certifies with zero multipliers") {
    const Vector a = vec({-0.2, 0.6});
    const smpec::MultiplierCertificate m =
        smpec::multiplier_certificate(zero_map(a), a, 1e-6);
    CHECK(m.certified);
    for (double b : m.beta) CHECK(b == 0.0);
  }

  TEST_CASE("min-norm LP single-multiplier form") {
    const smpec::MultiplierCertificate m =
        smpec::multiplier_certificate(min_norm_lp(), vec({1, 1}), 1e-6);
    CHECK(m.certified);
    CHECK(m.y_star > 0.0);
    double sum = 0.0;
    for (double w : m.convex_weights) sum += w;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_SUITE("sequential_residuals") {
  TEST_CASE("single exact iteration") {
    smpec::SolveConfig cfg;
    cfg.x0 = vec({0, 0});
    const smpec::SolveTrace t = smpec::solve_smpec(support::example_3_2(), cfg);
    REQUIRE(t.entries.size() == 1);
    const smpec::SequentialResiduals r =
        smpec::sequential_residuals(support::example_3_2(), t);
    CHECK(std::abs(r.r1[0]) <= 1e-8);
    CHECK(std::abs(r.r2[0]) <= 1e-8);
    CHECK(std::abs(r.r3[0]) <= 1e-8);
    CHECK(std::abs(r.r4[0]) <= 1e-8);
  }

  TEST_CASE("truncated run reports residuals above tolerance") {
    smpec::SolveConfig cfg;
    cfg.mu = 0.0;
    cfg.max_outer_iterations = 3;
    const smpec::Problem p = min_norm_lp();
    const smpec::SolveTrace t = smpec::solve_smpec(p, cfg);
    const smpec::SequentialResiduals r = smpec::sequential_residuals(p, t);
    CHECK(r.r1.size() == 3);
    CHECK(r.tail_length == 3);
    CHECK(std::max({r.tail_r1, r.tail_r2, r.tail_r3, r.tail_r4}) > 1e-3);
  }

  TEST_CASE("decompositions are convex combinations of at most n + 1 points") {
    const smpec::Problem p = basis_pursuit();
    smpec::SolveConfig cfg;
    cfg.max_outer_iterations = 30;
    const smpec::SolveTrace t = smpec::solve_smpec(p, cfg);
    const smpec::SequentialResiduals r =
        smpec::sequential_residuals(p, t, vec({0.5, 0.5}));
    REQUIRE(r.decompositions.size() == t.entries.size());
    for (const smpec::ConvexCombination& cc : r.decompositions) {
      CHECK(cc.points.size() <= 3);
      double sum = 0.0;
      for (double w : cc.weights) {
        CHECK(w >= 0.0);
        sum += w;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}
