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

#ifndef SMPEC_CERTIFY_HPP_
#define SMPEC_CERTIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smpec/gap.hpp"
#include "smpec/model.hpp"
#include "smpec/solver.hpp"

namespace smpec {

struct CertifyOptions {
  GapOptions gap;
  // Rounds of near-active point search used when the exact maximizer sample
  // cannot close the stationarity residual.
  int perturbation_rounds = 6;
  int max_halvings = 60;
  double kink_tol = 1e-9;
  double active_tol = 1e-9;
};

struct KktCertificate {
  Vector x_bar;
  // y_1..y_k in C with multipliers lambda_i >= 0, k <= n + 1.
  std::vector<Vector> points;
  std::vector<double> multipliers;
  // Chosen element of the subdifferential of f at x_bar.
  Vector u;
  double gap = 0.0;
  // dist(-(u + sum lambda_i F(y_i)), N_C(x_bar)).
  double stationarity_residual = 0.0;
  // max_i |<F(y_i), x_bar - y_i>|.
  double complementarity_residual = 0.0;
  double tol = 0.0;
  bool certified = false;
};

// Throws kNotInSet when x_bar is outside C and kLowerLevelInfeasible when
// g_D(x_bar) > tol.
KktCertificate kkt_certificate(const Problem& problem, const Vector& x_bar,
                               double tol, const CertifyOptions& options = {});

struct MembershipReport {
  Vector x;
  bool in_set = false;
  // exists u in the subdifferential of f at x with <u, x - x_bar> = 0.
  bool objective_condition = false;
  double objective_residual = 0.0;
  // <F(y_i), x - y_i> = 0 for the certificate points.
  bool complementarity = false;
  double complementarity_residual = 0.0;
  // g_D(x) <= tol.
  bool lower_level = false;
  double gap = 0.0;
  bool verdict = false;
};

// Checks x against the solution-set description generated by a certified
// KKT certificate at x_bar. Throws kUncertifiedInput otherwise.
MembershipReport membership_check(const Problem& problem,
                                  const KktCertificate& cert,
                                  const Vector& x_bar, const Vector& x,
                                  double tol,
                                  const CertifyOptions& options = {});

enum class BcqVerdict { kHolds, kFails, kInconclusive };

std::string_view to_string(BcqVerdict verdict);

struct WeakBcqDiagnostic {
  // Generators of the sampled subdifferential of g_D at x_bar.
  std::vector<Vector> hull_generators;
  // Normal cone N_C(x_bar) and its dimension.
  Matrix cone_generators;
  Index cone_dimension = 0;
  // The relative boundary of N_C(x_bar) as a union of cones; each matrix
  // holds the generators of one face (zero columns means the face {0}).
  std::vector<Matrix> boundary_faces;
  std::string boundary_description;
  // Distance between the hull and -bd N_C(x_bar); +inf when the boundary
  // is empty.
  double distance = 0.0;
  // Hull point lying on -bd N_C(x_bar) when the qualification fails.
  std::optional<Vector> witness;
  BcqVerdict verdict = BcqVerdict::kInconclusive;
};

// Throws kUnsupportedSetDimension for polytopes and simplices with n > 3.
WeakBcqDiagnostic weak_bcq_check(const Problem& problem, const Vector& x_bar,
                                 double tol,
                                 const CertifyOptions& options = {});

struct MultiplierCertificate {
  std::vector<Vector> points;
  std::vector<double> beta;
  Vector u;
  // dist(-(u + sum beta_i F(y_i)), N_C(x_bar)).
  double residual = 0.0;
  double complementarity_residual = 0.0;
  // Single-multiplier form: y_star = sum beta_i and weights beta_i / y_star
  // (empty when y_star = 0).
  double y_star = 0.0;
  std::vector<double> convex_weights;
  bool certified = false;
};

MultiplierCertificate multiplier_certificate(
    const Problem& problem, const Vector& x_bar, double tol,
    const CertifyOptions& options = {});

struct SequentialResiduals {
  Vector x_bar;
  Vector u;
  std::vector<double> r1, r2, r3, r4;
  // Decomposition of each v_k over F(y_i^k).
  std::vector<ConvexCombination> decompositions;
  int tail_length = 0;
  // Largest absolute value over the tail.
  double tail_r1 = 0.0, tail_r2 = 0.0, tail_r3 = 0.0, tail_r4 = 0.0;
};

// Evaluates the four sequential optimality quantities along a trace, with
// y_k = x_k and lambda_k the subproblem weight on g_D. x_bar defaults to the
// last trace point. Throws kTargetNotInHull when a v_k cannot be decomposed.
SequentialResiduals sequential_residuals(
    const Problem& problem, const SolveTrace& trace,
    const std::optional<Vector>& x_bar = std::nullopt, int tail = 10);

}  // namespace smpec

#endif  // SMPEC_CERTIFY_HPP_
