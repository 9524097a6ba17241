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

#include <benchmark/benchmark.h>

#include <random>

#include "smpec/gap.hpp"
#include "smpec/model.hpp"
#include "smpec/solver.hpp"

namespace {

using smpec::ConvexObjective;
using smpec::ConvexSet;
using smpec::Matrix;
using smpec::MonotoneMap;
using smpec::Vector;

smpec::Problem random_box_problem(int n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  Matrix B(n, n), K(n, n);
  Vector q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      B(i, j) = g(rng);
      K(i, j) = g(rng);
    }
    q(i) = g(rng);
  }
  smpec::ProblemInstance inst;
  inst.dimension = n;
  inst.objective = ConvexObjective::squared_norm(n);
  inst.map = MonotoneMap::affine(B * B.transpose() + K - K.transpose(), q);
  inst.set = ConvexSet::box(-Vector::Ones(n), Vector::Ones(n));
  return smpec::Problem::create(inst);
}

void BM_EvalGapBox(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const smpec::Problem p = random_box_problem(n);
  std::mt19937_64 rng(1);
  std::vector<Vector> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(p.set().sample(rng));
  size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smpec::eval_gap(p, xs[k++ % xs.size()]).value);
  }
}
BENCHMARK(BM_EvalGapBox)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

void BM_ProjectSimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConvexSet s = ConvexSet::simplex(n, 1.0);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  Vector z(n);
  for (int i = 0; i < n; ++i) z(i) = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(s.project(z));
}
BENCHMARK(BM_ProjectSimplex)->Arg(10)->Arg(100)->Arg(1000);

void BM_ProjectPolytope(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix A(2 * n + 1, n);
  A << Matrix::Identity(n, n), -Matrix::Identity(n, n),
      Matrix::Ones(1, n);
  Vector b = Vector::Ones(2 * n + 1);
  const ConvexSet c = ConvexSet::polytope(A, b);
  const Vector z = Vector::LinSpaced(n, -2.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(c.project(z));
}
BENCHMARK(BM_ProjectPolytope)->Arg(2)->Arg(5)->Arg(10);

void BM_SolvePk(benchmark::State& state) {
  const smpec::Problem p = random_box_problem(static_cast<int>(state.range(0)));
  const Vector x0 = Vector::Zero(p.dimension());
  for (auto _ : state) {
    benchmark::DoNotOptimize(smpec::solve_pk(p, 10.0, x0).value);
  }
}
BENCHMARK(BM_SolvePk)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
