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
#include <cstdio>
#include <random>
#include <string>
#include <utility>

#include "smpec/error.hpp"
#include "smpec/linalg.hpp"
#include "smpec/model.hpp"

namespace smpec {
namespace {

constexpr double kMonotoneTol = 1e-8;
constexpr int kMonotoneSamples = 1000;
constexpr std::uint64_t kMonotoneSeed = 0x5eed5eedULL;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

ValidationReport validate_instance(const ProblemInstance& inst) {
  ValidationReport report;
  const Index n = inst.dimension;
  if (n <= 0) {
    throw Error(ErrorCode::kDimensionMismatch, "dimension must be positive");
  }
  auto mismatch = [n](const char* part, Index got) {
    if (got != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(part) + " has dimension " + std::to_string(got) +
                      " but the instance has dimension " + std::to_string(n));
    }
  };
  mismatch("objective", inst.objective.dimension());
  mismatch("map", inst.map.dimension());
  mismatch("set", inst.set.dimension());
  report.dimensions_consistent = true;

  report.set_bounded = inst.set.is_bounded();
  ConvexSet compact = inst.set;
  if (!inst.set.is_bounded()) {
    if (!inst.box_radius) {
      throw Error(ErrorCode::kUnboundedSet,
                  "the feasible set is unbounded and box wrapping is disabled");
    }
    compact = inst.set.wrapped(*inst.box_radius);
    report.wrapped = true;
    report.box_radius = *inst.box_radius;
  }

  if (auto form = inst.map.affine_form()) {
    report.monotonicity_method = "eigenvalue";
    report.monotonicity_margin = linalg::min_symmetric_eigenvalue(form->M);
    if (report.monotonicity_margin < -kMonotoneTol) {
      throw Error(ErrorCode::kMonotonicityViolation,
                  "map is not monotone: smallest eigenvalue of the symmetric "
                  "part is " + fmt(report.monotonicity_margin));
    }
  } else {
    report.monotonicity_method = "sampled";
    std::mt19937_64 rng(kMonotoneSeed);
    double worst = linalg::kInf;
    for (int s = 0; s < kMonotoneSamples; ++s) {
      const Vector x = compact.sample(rng);
      const Vector y = compact.sample(rng);
      const double ip = (inst.map(y) - inst.map(x)).dot(y - x);
      worst = std::min(worst, ip);
      if (ip < -kMonotoneTol) {
        throw Error(ErrorCode::kMonotonicityViolation,
                    "map is not monotone: sampled pair with "
                    "<F(y) - F(x), y - x> = " + fmt(ip));
      }
    }
    report.monotonicity_margin = worst;
  }
  report.monotone = true;
  return report;
}

Problem Problem::create(ProblemInstance inst) {
  ValidationReport report = validate_instance(inst);
  ConvexSet set = report.wrapped ? inst.set.wrapped(report.box_radius)
                                 : inst.set;
  if (inst.known_solution && inst.known_solution->point.size() != inst.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "known solution has the wrong dimension");
  }
  return Problem(std::move(inst), std::move(set), std::move(report));
}

bool Problem::touches_wrap(const Vector& x, double tol) const {
  if (!report_.wrapped) return false;
  const double R = report_.box_radius;
  const ConvexSet& original = inst_.set;
  for (Index i = 0; i < x.size(); ++i) {
    if (original.kind() == ConvexSet::Kind::kBox) {
      if (!std::isfinite(original.lower()(i)) && x(i) <= -R + tol) return true;
      if (!std::isfinite(original.upper()(i)) && x(i) >= R - tol) return true;
    } else if (std::abs(x(i)) >= R - tol) {
      return true;
    }
  }
  return false;
}

}  // namespace smpec
