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
#include <cstdio>
#include <string>

#include "certify_internal.hpp"
#include "smpec/error.hpp"
#include "smpec/linalg.hpp"
#include "stationarity.hpp"

namespace smpec {
namespace internal {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Fit {
  StationarityFit fit;
  Vector residual;
};

Fit fit_on(const Problem& problem, const Vector& x_bar,
           const std::vector<Vector>& values, const CertifyOptions& options) {
  const Index n = problem.dimension();
  Matrix G(n, static_cast<Index>(values.size()));
  for (size_t j = 0; j < values.size(); ++j) {
    G.col(static_cast<Index>(j)) = values[j];
  }
  const ConeGenerators cone =
      problem.set().normal_cone_generators(x_bar, options.active_tol);
  Fit out;
  out.fit = fit_stationarity(
      problem.objective().subdifferential(x_bar, options.kink_tol), G,
      cone.rays, CombinationMode::kConic);
  out.residual = out.fit.u + G * out.fit.a;
  if (cone.rays.cols() > 0) out.residual += cone.rays * out.fit.nu;
  return out;
}

void add_point(const Problem& problem, std::vector<Vector>& points,
               std::vector<Vector>& values, const Vector& y) {
  for (const Vector& p : points) {
    if ((p - y).norm() <= 1e-12 * std::max(1.0, y.norm())) return;
  }
  points.push_back(y);
  values.push_back(problem.map()(y));
}

}  // namespace

double check_lower_level(const Problem& problem, const Vector& x_bar,
                         double tol, const CertifyOptions& options) {
  if (x_bar.size() != problem.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "certificate point has the wrong dimension");
  }
  if (!problem.set().contains(x_bar)) {
    throw Error(ErrorCode::kNotInSet, "certificate point is not in the set");
  }
  const double gap = eval_gap(problem, x_bar, options.gap).value;
  if (gap > tol) {
    throw Error(ErrorCode::kLowerLevelInfeasible,
                "point does not solve the lower-level variational "
                "inequality: g_D = " + fmt(gap));
  }
  return gap;
}

MultiplierFit fit_multipliers(const Problem& problem, const Vector& x_bar,
                              double tol, const CertifyOptions& options) {
  std::vector<Vector> points;
  std::vector<Vector> values;
  for (const Vector& y :
       argmax_set(problem, x_bar, options.gap.argmax_tol, options.gap)) {
    if (std::abs(gap_integrand(problem, x_bar, y)) <= tol) {
      add_point(problem, points, values, y);
    }
  }
  add_point(problem, points, values, x_bar);

  Fit fit = fit_on(problem, x_bar, values, options);
  const double diam = std::max(problem.set().diameter(), 1e-12);
  for (int round = 0; round < options.perturbation_rounds; ++round) {
    if (fit.residual.norm() <= 0.1 * tol) break;
    const Vector d = -fit.residual / fit.residual.norm();
    int accepted_levels = 0;
    for (int j = 0; j <= options.max_halvings && accepted_levels < 2; ++j) {
      const double t = diam * std::ldexp(1.0, -j);
      const GapEvaluation probe =
          eval_gap(problem, x_bar + t * d, options.gap);
      bool any = false;
      for (const Vector& y : probe.maximizers) {
        if (std::abs(gap_integrand(problem, x_bar, y)) <= tol) {
          add_point(problem, points, values, y);
          any = true;
        }
      }
      if (any) ++accepted_levels;
    }
    if (accepted_levels == 0) break;
    fit = fit_on(problem, x_bar, values, options);
  }

  Matrix G(problem.dimension(), static_cast<Index>(values.size()));
  for (size_t j = 0; j < values.size(); ++j) {
    G.col(static_cast<Index>(j)) = values[j];
  }
  Vector a = fit.fit.a;
  linalg::reduce_conic_support(G, a);

  MultiplierFit out;
  out.u = fit.fit.u;
  std::vector<double> w;
  for (Index j = 0; j < a.size(); ++j) {
    if (a(j) > 0.0) {
      out.points.push_back(points[j]);
      out.values.push_back(values[j]);
      w.push_back(a(j));
    }
  }
  if (out.points.empty()) {
    out.points.push_back(points.front());
    out.values.push_back(values.front());
    w.push_back(0.0);
  }
  out.weights = Eigen::Map<Vector>(w.data(), static_cast<Index>(w.size()));
  return out;
}

}  // namespace internal

KktCertificate kkt_certificate(const Problem& problem, const Vector& x_bar,
                               double tol, const CertifyOptions& options) {
  KktCertificate cert;
  cert.x_bar = x_bar;
  cert.tol = tol;
  cert.gap = internal::check_lower_level(problem, x_bar, tol, options);
  const internal::MultiplierFit fit =
      internal::fit_multipliers(problem, x_bar, tol, options);
  cert.points = fit.points;
  cert.multipliers.assign(fit.weights.data(),
                          fit.weights.data() + fit.weights.size());
  cert.u = fit.u;
  Vector s = cert.u;
  for (size_t i = 0; i < fit.points.size(); ++i) {
    s += cert.multipliers[i] * fit.values[i];
    cert.complementarity_residual =
        std::max(cert.complementarity_residual,
                 std::abs(gap_integrand(problem, x_bar, fit.points[i])));
  }
  cert.stationarity_residual =
      problem.set().normal_cone_residual(x_bar, -s, options.active_tol);
  cert.certified = std::max(cert.stationarity_residual,
                            cert.complementarity_residual) <= tol;
  return cert;
}

MembershipReport membership_check(const Problem& problem,
                                  const KktCertificate& cert,
                                  const Vector& x_bar, const Vector& x,
                                  double tol, const CertifyOptions& options) {
  if (!cert.certified) {
    throw Error(ErrorCode::kUncertifiedInput,
                "membership check needs a certified KKT certificate");
  }
  if ((cert.x_bar - x_bar).norm() > 1e-12 * std::max(1.0, x_bar.norm())) {
    throw Error(ErrorCode::kUncertifiedInput,
                "certificate was produced at a different point");
  }
  if (x.size() != problem.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "membership candidate has the wrong dimension");
  }
  MembershipReport report;
  report.x = x;
  report.in_set = problem.set().contains(x);

  // <u, d> over the subdifferential box u = c + s, |s| <= h.
  const ConvexObjective::SubdifferentialBox box =
      problem.objective().subdifferential(x, options.kink_tol);
  const Vector d = x - x_bar;
  const double mid = box.center.dot(d);
  const double spread = box.halfwidth.dot(d.cwiseAbs());
  report.objective_residual =
      std::max(0.0, std::abs(mid) - spread);
  report.objective_condition = report.objective_residual <= tol;

  for (size_t i = 0; i < cert.points.size(); ++i) {
    if (!(cert.multipliers[i] > 0.0)) continue;
    report.complementarity_residual =
        std::max(report.complementarity_residual,
                 std::abs(gap_integrand(problem, x, cert.points[i])));
  }
  report.complementarity = report.complementarity_residual <= tol;

  report.gap = report.in_set ? eval_gap(problem, x, options.gap).value
                             : linalg::kInf;
  report.lower_level = report.gap <= tol;
  report.verdict = report.in_set && report.objective_condition &&
                   report.complementarity && report.lower_level;
  return report;
}

}  // namespace smpec
