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

#include "smpec_cli/demos.hpp"

#include <limits>

namespace smpec::cli {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

// f = x^2 / 2, F(x) = x, C = [-1, 1].
ProblemInstance example_3_1() {
  ProblemInstance inst;
  inst.dimension = 1;
  inst.objective = ConvexObjective::quadratic_distance(vec({0.0}));
  inst.map = MonotoneMap::affine(Matrix::Identity(1, 1), vec({0.0}));
  inst.set = ConvexSet::box(vec({-1.0}), vec({1.0}));
  inst.known_solution = KnownSolution{vec({0.0}), 0.0};
  return inst;
}

// f = ||x||^2, F = (1, 1), C = [0, 1]^2.
ProblemInstance example_3_2() {
  ProblemInstance inst;
  inst.dimension = 2;
  inst.objective = ConvexObjective::squared_norm(2);
  inst.map = MonotoneMap::affine(Matrix::Zero(2, 2), vec({1.0, 1.0}));
  inst.set = ConvexSet::box(vec({0.0, 0.0}), vec({1.0, 1.0}));
  inst.known_solution = KnownSolution{vec({0.0, 0.0}), 0.0};
  return inst;
}

// min ||x||_1 over argmin ||A x - b||^2 with A = [1 1], b = 1.
ProblemInstance basis_pursuit() {
  ProblemInstance inst;
  inst.dimension = 2;
  inst.objective = ConvexObjective::l1_norm(2);
  Matrix A(1, 2);
  A << 1.0, 1.0;
  inst.map = MonotoneMap::quadratic_gradient(A, vec({1.0}));
  inst.set = ConvexSet::box(vec({-kInf, -kInf}), vec({kInf, kInf}));
  inst.box_radius = 10.0;
  inst.known_solution = KnownSolution{vec({0.5, 0.5}), 1.0};
  return inst;
}

// Minimum-norm primal-dual pair of min x s.t. x >= 1, x >= 0.
ProblemInstance min_norm_lp() {
  ProblemInstance inst;
  inst.dimension = 2;
  inst.objective = ConvexObjective::squared_norm(2);
  Matrix M(2, 2);
  M << 0.0, -1.0, 1.0, 0.0;
  inst.map = MonotoneMap::affine(M, vec({1.0, -1.0}));
  inst.set = ConvexSet::box(vec({0.0, 0.0}), vec({kInf, kInf}));
  inst.box_radius = 10.0;
  inst.known_solution = KnownSolution{vec({1.0, 1.0}), 2.0};
  return inst;
}

// Nearest point to (2, 2) in argmin over [-1, 1]^2 of x_1^2.
ProblemInstance distance_estimation() {
  ProblemInstance inst;
  inst.dimension = 2;
  inst.objective = ConvexObjective::quadratic_distance(vec({2.0, 2.0}));
  Matrix A(1, 2);
  A << 1.0, 0.0;
  inst.map = MonotoneMap::quadratic_gradient(A, vec({0.0}));
  inst.set = ConvexSet::box(vec({-1.0, -1.0}), vec({1.0, 1.0}));
  inst.known_solution = KnownSolution{vec({0.0, 1.0}), 2.5};
  return inst;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{
      "example-3-1", "example-3-2", "basis-pursuit", "min-norm-lp",
      "distance-estimation"};
  return names;
}

std::optional<ProblemInstance> make_demo(const std::string& name) {
  if (name == "example-3-1") return example_3_1();
  if (name == "example-3-2") return example_3_2();
  if (name == "basis-pursuit") return basis_pursuit();
  if (name == "min-norm-lp") return min_norm_lp();
  if (name == "distance-estimation") return distance_estimation();
  return std::nullopt;
}

}  // namespace smpec::cli
