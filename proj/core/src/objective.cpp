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

#include <cmath>
#include <string>
#include <utility>

#include "smpec/error.hpp"
#include "smpec/model.hpp"

namespace smpec {
namespace {

void check_size(const Vector& x, Index n) {
  if (x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "objective evaluated at a vector of length " +
                    std::to_string(x.size()) + ", expected " +
                    std::to_string(n));
  }
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

ConvexObjective::Term single(ConvexObjective::TermKind kind, Vector data) {
  ConvexObjective::Term t;
  t.kind = kind;
  t.weight = 1.0;
  t.data = std::move(data);
  return t;
}

}  // namespace

ConvexObjective ConvexObjective::quadratic_distance(Vector anchor) {
  const Index n = anchor.size();
  ConvexObjective f = weighted_sum(
      n, {single(TermKind::kQuadraticDistance, std::move(anchor))});
  f.variant_ = Variant::kQuadraticDistance;
  return f;
}

ConvexObjective ConvexObjective::squared_norm(Index n) {
  ConvexObjective f = weighted_sum(n, {single(TermKind::kSquaredNorm, {})});
  f.variant_ = Variant::kSquaredNorm;
  return f;
}

ConvexObjective ConvexObjective::l1_norm(Index n) {
  ConvexObjective f = weighted_sum(n, {single(TermKind::kL1Norm, {})});
  f.variant_ = Variant::kL1Norm;
  return f;
}

ConvexObjective ConvexObjective::linear(Vector c) {
  const Index n = c.size();
  ConvexObjective f =
      weighted_sum(n, {single(TermKind::kLinear, std::move(c))});
  f.variant_ = Variant::kLinear;
  return f;
}

ConvexObjective ConvexObjective::weighted_sum(Index n,
                                              std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (!(t.weight >= 0.0) || !std::isfinite(t.weight)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "objective weights must be finite and nonnegative");
    }
    const bool needs_data = t.kind == TermKind::kQuadraticDistance ||
                            t.kind == TermKind::kLinear;
    if (needs_data && t.data.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "objective term data has length " +
                      std::to_string(t.data.size()) + ", expected " +
                      std::to_string(n));
    }
  }
  ConvexObjective f;
  f.variant_ = Variant::kWeightedSum;
  f.n_ = n;
  f.terms_ = std::move(terms);
  return f;
}

double ConvexObjective::value(const Vector& x) const {
  check_size(x, n_);
  double v = 0.0;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case TermKind::kQuadraticDistance:
        v += t.weight * 0.5 * (x - t.data).squaredNorm();
        break;
      case TermKind::kSquaredNorm:
        v += t.weight * x.squaredNorm();
        break;
      case TermKind::kL1Norm:
        v += t.weight * x.lpNorm<1>();
        break;
      case TermKind::kLinear:
        v += t.weight * t.data.dot(x);
        break;
    }
  }
  return v;
}

Vector ConvexObjective::subgradient(const Vector& x) const {
  check_size(x, n_);
  Vector g = Vector::Zero(n_);
  for (const Term& t : terms_) {
    switch (t.kind) {
      case TermKind::kQuadraticDistance:
        g += t.weight * (x - t.data);
        break;
      case TermKind::kSquaredNorm:
        g += 2.0 * t.weight * x;
        break;
      case TermKind::kL1Norm:
        g += t.weight * x.unaryExpr([](double v) { return sign(v); });
        break;
      case TermKind::kLinear:
        g += t.weight * t.data;
        break;
    }
  }
  return g;
}

ConvexObjective::SubdifferentialBox ConvexObjective::subdifferential(
    const Vector& x, double kink_tol) const {
  check_size(x, n_);
  SubdifferentialBox box{Vector::Zero(n_), Vector::Zero(n_)};
  for (const Term& t : terms_) {
    if (t.kind != TermKind::kL1Norm) continue;
    for (Index i = 0; i < n_; ++i) {
      if (std::abs(x(i)) <= kink_tol) {
        box.halfwidth(i) += t.weight;
      } else {
        box.center(i) += t.weight * sign(x(i));
      }
    }
  }
  for (const Term& t : terms_) {
    switch (t.kind) {
      case TermKind::kQuadraticDistance:
        box.center += t.weight * (x - t.data);
        break;
      case TermKind::kSquaredNorm:
        box.center += 2.0 * t.weight * x;
        break;
      case TermKind::kLinear:
        box.center += t.weight * t.data;
        break;
      case TermKind::kL1Norm:
        break;
    }
  }
  return box;
}

}  // namespace smpec
