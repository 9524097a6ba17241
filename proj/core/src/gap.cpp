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

#include "smpec/gap.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "smpec/error.hpp"
#include "smpec/linalg.hpp"
#include "active_set_qp.hpp"

namespace smpec {
namespace {

// phi(y) = -y^T S y + l^T y + c0, the integrand for an affine map.
struct ConcaveQuadratic {
  Matrix S;
  Vector l;
  double c0 = 0.0;

  double value(const Vector& y) const {
    return -y.dot(S * y) + l.dot(y) + c0;
  }
  Vector gradient(const Vector& y) const { return l - 2.0 * (S * y); }
};

ConcaveQuadratic make_quadratic(const MonotoneMap::AffineForm& form,
                                const Vector& x) {
  ConcaveQuadratic quad;
  quad.S = 0.5 * (form.M + form.M.transpose());
  quad.l = form.M.transpose() * x - form.q;
  quad.c0 = form.q.dot(x);
  return quad;
}

struct InnerResult {
  Vector y;
  std::vector<Vector> atoms;
  int iterations = 0;
  double fw_gap = 0.0;
};

bool same_point(const Vector& a, const Vector& b, double tol) {
  return (a - b).norm() <= tol;
}

// Minor cycles over the atom simplex: move toward the exact maximizer of the
// quadratic on the affine hull of the atoms, dropping the atom whose weight
// reaches zero first, until that maximizer lies inside the hull. Returns
// false when nothing changed.
bool polish_on_face(const ConcaveQuadratic& quad, std::vector<Vector>& atoms,
                    std::vector<double>& weights) {
  bool changed = false;
  const Index n = atoms.front().size();
  while (atoms.size() >= 2) {
    const Index k = static_cast<Index>(atoms.size());
    Matrix V(n, k);
    for (Index j = 0; j < k; ++j) V.col(j) = atoms[j];
    Matrix K = Matrix::Zero(k + 1, k + 1);
    K.topLeftCorner(k, k) = 2.0 * V.transpose() * quad.S * V;
    K.block(0, k, k, 1).setOnes();
    K.block(k, 0, 1, k).setOnes();
    Vector rhs(k + 1);
    rhs.head(k) = V.transpose() * quad.l;
    rhs(k) = 1.0;
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(K);
    const Vector sol = cod.solve(rhs);
    // An inconsistent system means the quadratic is unbounded on the hull.
    if (!sol.allFinite() ||
        (K * sol - rhs).norm() > 1e-9 * std::max(1.0, rhs.norm())) {
      break;
    }
    const Vector target = sol.head(k);
    Vector w(k);
    for (Index j = 0; j < k; ++j) w(j) = weights[j];
    const Vector delta = target - w;
    if (delta.norm() <= 1e-15) break;
    double t = 1.0;
    Index hit = -1;
    for (Index j = 0; j < k; ++j) {
      if (delta(j) < 0.0 && -w(j) / delta(j) < t) {
        t = -w(j) / delta(j);
        hit = j;
      }
    }
    w += t * delta;
    if (hit >= 0) w(hit) = 0.0;
    std::vector<Vector> kept_atoms;
    std::vector<double> kept_weights;
    for (Index j = 0; j < k; ++j) {
      if (w(j) > 1e-15) {
        kept_atoms.push_back(atoms[j]);
        kept_weights.push_back(w(j));
      }
    }
    double total = 0.0;
    for (double v : kept_weights) total += v;
    for (double& v : kept_weights) v /= total;
    atoms = std::move(kept_atoms);
    weights = std::move(kept_weights);
    changed = true;
    if (hit < 0) break;
  }
  return changed;
}

Vector combine(const std::vector<Vector>& atoms,
               const std::vector<double>& weights) {
  Vector y = Vector::Zero(atoms.front().size());
  for (size_t j = 0; j < atoms.size(); ++j) y += weights[j] * atoms[j];
  return y;
}

// Away-step Frank-Wolfe for max phi over a polyhedral set. The start y0 is
// first moved to a face maximizer by the active-set method, which removes
// the zigzagging of plain Frank-Wolfe near faces; the Frank-Wolfe loop then
// certifies the point (or finishes the job when the active-set pass stops
// short).
InnerResult away_step_frank_wolfe(const ConvexSet& set,
                                  const ConcaveQuadratic& quad,
                                  const Vector& y0,
                                  const GapOptions& options) {
  const internal::QpResult qp = internal::minimize_convex_quadratic(
      quad.S, quad.l, internal::constraints_of(set), y0,
      50 * static_cast<int>(y0.size()) + 100);
  Vector y = quad.value(qp.y) >= quad.value(y0) ? set.project(qp.y) : y0;
  std::vector<Vector> atoms{y};
  std::vector<double> weights{1.0};
  const double atom_tol = 1e-12 * std::max(1.0, set.diameter());
  InnerResult result;
  for (int it = 0;; ++it) {
    const Vector g = quad.gradient(y);
    const Vector s = set.linear_minimizer(-g);
    const Vector d_fw = s - y;
    const double gap_fw = g.dot(d_fw);
    result.fw_gap = gap_fw;
    result.iterations = qp.iterations + it;
    if (gap_fw <= options.fw_gap_tol) break;
    if (it >= options.max_inner_iterations) {
      throw Error(ErrorCode::kInnerNonConvergence,
                  "gap maximization hit the iteration cap with Frank-Wolfe "
                  "gap " + std::to_string(gap_fw));
    }

    size_t away = 0;
    double worst = linalg::kInf;
    for (size_t j = 0; j < atoms.size(); ++j) {
      const double v = g.dot(atoms[j]);
      if (v < worst) {
        worst = v;
        away = j;
      }
    }
    const Vector d_away = y - atoms[away];
    const double gap_away = g.dot(d_away);

    const bool fw_step = gap_fw >= gap_away || atoms.size() == 1;
    const Vector d = fw_step ? d_fw : d_away;
    const double gamma_max =
        fw_step ? 1.0 : weights[away] / (1.0 - weights[away]);
    const double slope = g.dot(d);
    const double curvature = d.dot(quad.S * d);
    double gamma = curvature > 0.0 ? slope / (2.0 * curvature) : gamma_max;
    gamma = std::clamp(gamma, 0.0, gamma_max);

    if (fw_step) {
      for (double& w : weights) w *= (1.0 - gamma);
      size_t idx = atoms.size();
      for (size_t j = 0; j < atoms.size(); ++j) {
        if (same_point(atoms[j], s, atom_tol)) idx = j;
      }
      if (idx == atoms.size()) {
        atoms.push_back(s);
        weights.push_back(0.0);
      }
      weights[idx] += gamma;
      if (gamma >= 1.0) {
        atoms = {s};
        weights = {1.0};
      }
    } else {
      for (double& w : weights) w *= (1.0 + gamma);
      weights[away] -= gamma;
      if (gamma >= gamma_max) weights[away] = 0.0;
    }
    // Drop exhausted atoms.
    std::vector<Vector> a2;
    std::vector<double> w2;
    for (size_t j = 0; j < atoms.size(); ++j) {
      if (weights[j] > 0.0) {
        a2.push_back(atoms[j]);
        w2.push_back(weights[j]);
      }
    }
    atoms = std::move(a2);
    weights = std::move(w2);
    double total = 0.0;
    for (double w : weights) total += w;
    for (double& w : weights) w /= total;

    y = combine(atoms, weights);
    if (polish_on_face(quad, atoms, weights)) y = combine(atoms, weights);
  }
  result.y = y;
  result.atoms = std::move(atoms);
  return result;
}

// max phi over a ball: min d^T S d - g^T d subject to ||d|| <= r with
// y = center + d. Convex trust-region problem solved through the
// eigendecomposition of S and bisection on the secular equation.
InnerResult maximize_on_ball(const ConvexSet& set,
                             const ConcaveQuadratic& quad) {
  const Vector& c = set.center();
  const double r = set.radius();
  const Vector g = quad.l - 2.0 * (quad.S * c);
  Eigen::SelfAdjointEigenSolver<Matrix> es(quad.S);
  const Vector lam = es.eigenvalues().cwiseMax(0.0);
  const Vector gt = es.eigenvectors().transpose() * g;
  const double lam_max = lam.size() > 0 ? lam.maxCoeff() : 0.0;
  const double zero = 1e-12 * std::max(1.0, lam_max);

  auto step = [&](double sigma) {
    Vector dt(gt.size());
    for (Index i = 0; i < gt.size(); ++i) {
      const double denom = 2.0 * (lam(i) + sigma);
      dt(i) = denom > zero ? gt(i) / denom : 0.0;
    }
    return dt;
  };

  InnerResult result;
  bool interior = true;
  for (Index i = 0; i < gt.size(); ++i) {
    if (lam(i) <= zero && std::abs(gt(i)) > 1e-14 * std::max(1.0, g.norm())) {
      interior = false;
    }
  }
  Vector dt = step(0.0);
  if (interior && dt.norm() <= r) {
    result.y = c + es.eigenvectors() * dt;
  } else {
    double lo = 0.0;
    double hi = g.norm() / (2.0 * r) + 1.0;
    while (step(hi).norm() > r) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (step(mid).norm() > r) lo = mid; else hi = mid;
      result.iterations = it + 1;
    }
    dt = step(hi);
    const double norm = dt.norm();
    if (norm > 0.0) dt *= r / norm;
    result.y = c + es.eigenvectors() * dt;
  }
  result.atoms = {result.y};
  const Vector grad = quad.gradient(result.y);
  result.fw_gap = grad.dot(set.linear_minimizer(-grad) - result.y);
  return result;
}

Vector fd_gradient(const std::function<double(const Vector&)>& phi,
                   const Vector& y) {
  Vector g(y.size());
  Vector p = y;
  for (Index i = 0; i < y.size(); ++i) {
    const double h = 1e-6 * std::max(1.0, std::abs(y(i)));
    p(i) = y(i) + h;
    const double up = phi(p);
    p(i) = y(i) - h;
    const double down = phi(p);
    p(i) = y(i);
    g(i) = (up - down) / (2.0 * h);
  }
  return g;
}

// Projected ascent with Armijo backtracking from one start.
Vector projected_ascent(const ConvexSet& set,
                        const std::function<double(const Vector&)>& phi,
                        Vector y, int iterations, int& counter) {
  const double diam = std::max(set.diameter(), 1e-12);
  double t = diam;
  double fy = phi(y);
  for (int it = 0; it < iterations; ++it) {
    ++counter;
    const Vector g = fd_gradient(phi, y);
    if (g.norm() == 0.0) break;
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt) {
      const Vector cand = set.project(y + (t / g.norm()) * g);
      const double fc = phi(cand);
      if (fc >= fy + 1e-4 * g.dot(cand - y) && fc >= fy) {
        const double dist = (cand - y).norm();
        y = cand;
        fy = fc;
        moved = dist > 1e-12 * diam;
        t = std::min(2.0 * t, diam);
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  return y;
}

void add_unique(std::vector<Vector>& list, const Vector& y, double tol) {
  for (const Vector& z : list) {
    if (same_point(z, y, tol)) return;
  }
  list.push_back(y);
}

bool is_polyhedral(const ConvexSet& set) {
  return set.kind() != ConvexSet::Kind::kBall;
}

// Candidate starting points used to explore degenerate maximizer sets.
std::vector<Vector> exploration_starts(const ConvexSet& set) {
  const Index n = set.dimension();
  std::vector<Vector> starts;
  for (Index i = 0; i < n; ++i) {
    starts.push_back(set.linear_minimizer(Vector::Unit(n, i)));
    starts.push_back(set.linear_minimizer(-Vector::Unit(n, i)));
  }
  starts.push_back(set.linear_minimizer(Vector::Ones(n)));
  starts.push_back(set.linear_minimizer(-Vector::Ones(n)));
  return starts;
}

}  // namespace

double gap_integrand(const Problem& problem, const Vector& x,
                     const Vector& y) {
  return problem.map()(y).dot(x - y);
}

GapEvaluation eval_gap(const Problem& problem, const Vector& x,
                       const GapOptions& options) {
  const ConvexSet& set = problem.set();
  if (x.size() != problem.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gap evaluated at a point of the wrong dimension");
  }
  if (!set.is_bounded()) {
    throw Error(ErrorCode::kUnboundedSet, "gap requires a bounded set");
  }
  GapEvaluation eval;
  std::vector<Vector> candidates;
  if (auto form = problem.map().affine_form()) {
    const ConcaveQuadratic quad = make_quadratic(*form, x);
    const InnerResult inner =
        is_polyhedral(set)
            ? away_step_frank_wolfe(set, quad, set.project(x), options)
            : maximize_on_ball(set, quad);
    eval.inner_iterations = inner.iterations;
    eval.certified = inner.fw_gap <= options.fw_gap_tol;
    candidates.push_back(inner.y);
    for (const Vector& a : inner.atoms) candidates.push_back(a);
  } else {
    auto phi = [&](const Vector& y) { return gap_integrand(problem, x, y); };
    std::mt19937_64 rng(options.seed);
    int counter = 0;
    double best = -linalg::kInf;
    std::vector<Vector> limits;
    for (int s = 0; s < options.multistarts; ++s) {
      const Vector start = s == 0 ? set.project(x) : set.sample(rng);
      const Vector y =
          projected_ascent(set, phi, start, options.ascent_iterations, counter);
      const double v = phi(y);
      if (v > best) {
        best = v;
        limits.insert(limits.begin(), y);
      } else {
        limits.push_back(y);
      }
    }
    eval.inner_iterations = counter;
    eval.certified = false;
    candidates = std::move(limits);
  }

  const Vector& y_star = candidates.front();
  eval.value = gap_integrand(problem, x, y_star);
  eval.maximizers.push_back(y_star);
  for (size_t j = 1; j < candidates.size(); ++j) {
    if (gap_integrand(problem, x, candidates[j]) >=
        eval.value - options.argmax_tol) {
      add_unique(eval.maximizers, candidates[j], options.dedup_tol);
    }
  }
  eval.subgradient = problem.map()(y_star);
  return eval;
}

Vector gap_subgradient(const Problem& problem, const Vector& x,
                       const GapOptions& options) {
  return eval_gap(problem, x, options).subgradient;
}

std::vector<Vector> argmax_set(const Problem& problem, const Vector& x,
                               double tol, const GapOptions& options) {
  const GapEvaluation base = eval_gap(problem, x, options);
  const ConvexSet& set = problem.set();
  std::vector<Vector> candidates = base.maximizers;
  const std::vector<Vector> starts = exploration_starts(set);
  if (auto form = problem.map().affine_form(); form && is_polyhedral(set)) {
    const ConcaveQuadratic quad = make_quadratic(*form, x);
    for (const Vector& s : starts) {
      const InnerResult inner = away_step_frank_wolfe(set, quad, s, options);
      candidates.push_back(inner.y);
      candidates.push_back(s);
      for (const Vector& a : inner.atoms) candidates.push_back(a);
    }
  } else {
    for (const Vector& s : starts) candidates.push_back(s);
  }

  double best = -linalg::kInf;
  std::vector<double> values;
  for (const Vector& c : candidates) {
    values.push_back(gap_integrand(problem, x, c));
    best = std::max(best, values.back());
  }
  std::vector<Vector> sample;
  for (size_t j = 0; j < candidates.size(); ++j) {
    if (values[j] >= best - tol) add_unique(sample, candidates[j],
                                            options.dedup_tol);
  }
  return sample;
}

}  // namespace smpec
