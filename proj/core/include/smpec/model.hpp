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

#ifndef SMPEC_MODEL_HPP_
#define SMPEC_MODEL_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smpec/types.hpp"

namespace smpec {

// ---------------------------------------------------------------------------
// Monotone maps F : R^n -> R^n.
// ---------------------------------------------------------------------------

class MonotoneMap {
 public:
  // Empty, dimension-zero placeholder.
  MonotoneMap() = default;
  enum class Kind { kAffine, kQuadraticGradient, kBlackBox };
  using Evaluator = std::function<Vector(const Vector&)>;

  struct AffineForm {
    Matrix M;
    Vector q;
  };

  // F(x) = M x + q.
  static MonotoneMap affine(Matrix M, Vector q);
  // F(x) = 2 A^T (A x - b), the gradient of ||A x - b||^2.
  static MonotoneMap quadratic_gradient(Matrix A, Vector b);
  // Arbitrary deterministic evaluator. Monotonicity is sample-checked only.
  static MonotoneMap black_box(Index n, Evaluator fn);

  Kind kind() const { return kind_; }
  Index dimension() const { return n_; }

  Vector operator()(const Vector& x) const;

  // (M, q) such that F(x) = M x + q, for the affine and quadratic-gradient
  // variants; empty for black boxes.
  std::optional<AffineForm> affine_form() const;

  // Raw parameters: (M, q) for affine, (A, b) for quadratic-gradient.
  const Matrix& matrix() const { return mat_; }
  const Vector& vector() const { return vec_; }

 private:
  Kind kind_ = Kind::kAffine;
  Index n_ = 0;
  Matrix mat_;
  Vector vec_;
  std::shared_ptr<const Evaluator> fn_;
};

// ---------------------------------------------------------------------------
// Closed convex sets with projection and linear-minimization oracles.
// ---------------------------------------------------------------------------

// Generators of a polyhedral normal cone: the cone is the set of nonnegative
// combinations of the columns. Lines appear as a +/- pair of columns.
struct ConeGenerators {
  Matrix rays;
  // Dimension of the linear span of the cone.
  Index dimension = 0;
};

class ConvexSet {
 public:
  // Empty, dimension-zero placeholder.
  ConvexSet() = default;
  enum class Kind { kBox, kBall, kPolytope, kSimplex };

  // Bounds may be +/- infinity.
  static ConvexSet box(Vector lower, Vector upper);
  static ConvexSet ball(Vector center, double radius);
  // {y : A y <= b}. Runs the boundedness check (2n linear programs).
  static ConvexSet polytope(Matrix A, Vector b);
  // {y in R^n : y >= 0, sum(y) = scale}.
  static ConvexSet simplex(Index n, double scale);

  Kind kind() const { return kind_; }
  Index dimension() const { return n_; }
  bool is_bounded() const { return bounded_; }

  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  double scale() const { return scale_; }

  bool contains(const Vector& x, double tol = kMembershipTol) const;
  Vector project(const Vector& z) const;
  // Extreme point minimizing <c, y>; ties go to the lexicographically
  // smallest minimizer.
  Vector linear_minimizer(const Vector& c) const;

  // Normal cone N_C(x) for polyhedral variants (box, simplex, polytope).
  // Constraints within active_tol of equality count as active.
  ConeGenerators normal_cone_generators(const Vector& x,
                                        double active_tol = 1e-9) const;
  // dist(v, N_C(x)). Throws kNotInSet when x is not in C.
  double normal_cone_residual(const Vector& x, const Vector& v,
                              double active_tol = 1e-9) const;
  // Projection of v onto N_C(x).
  Vector project_onto_normal_cone(const Vector& x, const Vector& v,
                                  double active_tol = 1e-9) const;

  // Upper bound on max ||y - z|| over C (exact for box, ball and simplex).
  double diameter() const;
  Vector sample(std::mt19937_64& rng) const;

  // Replaces infinite bounds by +/-R (box) or appends -R <= y_i <= R rows
  // (polytope). Bounded sets are returned unchanged.
  ConvexSet wrapped(double R) const;

 private:
  Kind kind_ = Kind::kBox;
  Index n_ = 0;
  bool bounded_ = true;
  Vector lower_, upper_;
  Vector center_;
  double radius_ = 0.0;
  Matrix A_;
  Vector b_;
  double scale_ = 1.0;
  // Polytope only: the 2n coordinate extremizers, used for sampling.
  Matrix extreme_points_;
};

// ---------------------------------------------------------------------------
// Finite convex objectives.
// ---------------------------------------------------------------------------

class ConvexObjective {
 public:
  // Empty, dimension-zero placeholder.
  ConvexObjective() = default;
  enum class Variant {
    kQuadraticDistance,
    kSquaredNorm,
    kL1Norm,
    kLinear,
    kWeightedSum
  };
  enum class TermKind { kQuadraticDistance, kSquaredNorm, kL1Norm, kLinear };

  struct Term {
    TermKind kind;
    double weight = 1.0;
    Vector data;  // anchor for quadratic-distance, c for linear
  };

  // f(x) = 1/2 ||x - a||^2.
  static ConvexObjective quadratic_distance(Vector anchor);
  // f(x) = ||x||^2.
  static ConvexObjective squared_norm(Index n);
  // f(x) = ||x||_1.
  static ConvexObjective l1_norm(Index n);
  // f(x) = <c, x>.
  static ConvexObjective linear(Vector c);
  // f(x) = sum_i w_i f_i(x) with w_i >= 0.
  static ConvexObjective weighted_sum(Index n, std::vector<Term> terms);

  Variant variant() const { return variant_; }
  Index dimension() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  double value(const Vector& x) const;
  // One element of the subdifferential; l1 kinks use sign(0) = 0.
  Vector subgradient(const Vector& x) const;

  // The subdifferential of every supported objective is a box
  // center + [-halfwidth, halfwidth]. Coordinates within kink_tol of zero
  // are treated as kinks of the l1 terms.
  struct SubdifferentialBox {
    Vector center;
    Vector halfwidth;
  };
  SubdifferentialBox subdifferential(const Vector& x,
                                     double kink_tol = 1e-9) const;

 private:
  Variant variant_ = Variant::kWeightedSum;
  Index n_ = 0;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Instances.
// ---------------------------------------------------------------------------

inline constexpr double kDefaultBoxRadius = 1e3;

struct KnownSolution {
  Vector point;
  std::optional<double> objective;
};

struct ProblemInstance {
  Index dimension = 0;
  ConvexObjective objective;
  MonotoneMap map;
  ConvexSet set;
  // Radius of the artificial box used for unbounded sets; empty disables
  // wrapping, in which case unbounded sets are rejected.
  std::optional<double> box_radius = kDefaultBoxRadius;
  std::optional<KnownSolution> known_solution;
};

struct ValidationReport {
  bool dimensions_consistent = false;
  bool monotone = false;
  // "eigenvalue" for affine maps, "sampled" for black boxes.
  std::string monotonicity_method;
  // Smallest eigenvalue of sym(M), or the smallest sampled
  // <F(y) - F(x), y - x>.
  double monotonicity_margin = 0.0;
  bool set_bounded = false;
  bool wrapped = false;
  double box_radius = 0.0;
};

// Checks the standing assumptions. Throws kDimensionMismatch,
// kMonotonicityViolation or kUnboundedSet.
ValidationReport validate_instance(const ProblemInstance& inst);

// A validated instance with its (possibly wrapped) compact feasible set.
// Every algorithm takes a Problem, so none can run on unvalidated data.
class Problem {
 public:
  static Problem create(ProblemInstance inst);

  const ProblemInstance& instance() const { return inst_; }
  const ConvexObjective& objective() const { return inst_.objective; }
  const MonotoneMap& map() const { return inst_.map; }
  // The compact set the algorithms work on.
  const ConvexSet& set() const { return set_; }
  Index dimension() const { return inst_.dimension; }
  const ValidationReport& report() const { return report_; }

  // True when x lies within tol of a bound introduced by wrapping.
  bool touches_wrap(const Vector& x, double tol = 1e-6) const;

 private:
  Problem(ProblemInstance inst, ConvexSet set, ValidationReport report)
      : inst_(std::move(inst)), set_(std::move(set)),
        report_(std::move(report)) {}

  ProblemInstance inst_;
  ConvexSet set_;
  ValidationReport report_;
};

}  // namespace smpec

#endif  // SMPEC_MODEL_HPP_
