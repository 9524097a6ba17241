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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/frozen.hpp"
#include "oracles/oracles.hpp"
#include "smpec/certify.hpp"
#include "smpec/error.hpp"
#include "smpec/gap.hpp"
#include "smpec/solver.hpp"
#include "smpec_cli/command.hpp"
#include "smpec_cli/demos.hpp"
#include "support.hpp"

using smpec::Index;
using smpec::Problem;
using smpec::Vector;
using support::vec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

Problem demo(const std::string& name) {
  return Problem::create(*smpec::cli::make_demo(name));
}

Vector known(const Problem& p) { return p.instance().known_solution->point; }

// AC1.
Outcome identity_map_example() {
  Outcome o;
  const Problem p = demo("example-3-1");
  const smpec::GapEvaluation g = smpec::eval_gap(p, vec({0.0}));
  o.require(std::abs(g.value) <= 1e-8, "gap value " + num(g.value));
  o.require(g.subgradient.norm() <= 1e-8,
            "subgradient " + num(g.subgradient.norm()));
  const smpec::WeakBcqDiagnostic d = smpec::weak_bcq_check(p, vec({0.0}), 1e-6);
  o.require(d.verdict == smpec::BcqVerdict::kFails,
            std::string("weak BCQ ") + std::string(smpec::to_string(d.verdict)));
  o.require(d.witness && d.witness->norm() <= 1e-8, "witness is not 0");
  return o;
}

// AC2.
Outcome constant_map_example() {
  Outcome o;
  const Problem p = demo("example-3-2");
  const Vector origin = vec({0, 0});
  const std::vector<Vector> Y = smpec::argmax_set(p, origin, 1e-8);
  bool all_ones = !Y.empty();
  for (const Vector& y : Y) {
    all_ones = all_ones && (p.map()(y) - vec({1, 1})).norm() <= 1e-8;
  }
  o.require(all_ones, "subdifferential sample is not {(1,1)}");
  const smpec::WeakBcqDiagnostic d = smpec::weak_bcq_check(p, origin, 1e-6);
  o.require(d.verdict == smpec::BcqVerdict::kHolds,
            std::string("weak BCQ ") + std::string(smpec::to_string(d.verdict)));
  smpec::SolveConfig cfg;
  cfg.x0 = vec({1, 1});
  const smpec::SolveTrace t = smpec::solve_smpec(p, cfg);
  o.require(t.last().x.norm() <= 1e-3, "terminal distance " +
                                           num(t.last().x.norm()));
  o.require(std::abs(t.last().objective) <= 1e-6,
            "terminal f " + num(t.last().objective));
  return o;
}

// AC3.
Outcome min_norm_lp() {
  Outcome o;
  smpec::SolveConfig cfg;
  cfg.mu = 1e-5;
  const smpec::SolveTrace t = smpec::solve_smpec(demo("min-norm-lp"), cfg);
  o.require(t.status == smpec::SolveStatus::kThresholdMet,
            std::string("status ") + std::string(smpec::to_string(t.status)));
  const Vector ref =
      vec({frozen::kMinNormLpSolution[0], frozen::kMinNormLpSolution[1]});
  const double err = (t.last().x - ref).norm();
  o.require(err <= 1e-3, "distance to (1,1) " + num(err));
  o.note("distance to (1,1) " + num(err));
  return o;
}

// AC4.
Outcome distance_estimation() {
  Outcome o;
  const smpec::SolveTrace t = smpec::solve_smpec(demo("distance-estimation"));
  const double d = std::sqrt(2.0 * t.last().objective);
  const double err = std::abs(d - frozen::kDistanceEstimate);
  o.require(err <= 1e-2, "distance " + num(d));
  o.note("distance " + num(d) + ", error " + num(err));
  return o;
}

// AC5.
Outcome basis_pursuit() {
  Outcome o;
  const Problem p = demo("basis-pursuit");
  const smpec::SolveTrace t = smpec::solve_smpec(p);
  const double err = std::abs(t.last().objective - frozen::kBasisPursuitValue);
  o.require(err <= 1e-2, "terminal l1 " + num(t.last().objective));
  const Vector x_bar = known(p);
  const smpec::KktCertificate c = smpec::kkt_certificate(p, x_bar, 1e-6);
  o.require(c.certified, "no certificate at the known solution");
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 3; ++i) {
    const double s = u(rng);
    const Vector x = vec({s, 1.0 - s});
    const smpec::MembershipReport m =
        smpec::membership_check(p, c, x_bar, x, 1e-6);
    o.require(m.verdict, "rejected segment point t=" + num(s));
  }
  const smpec::MembershipReport off =
      smpec::membership_check(p, c, x_bar, vec({1.5, -0.5}), 1e-6);
  o.require(!off.verdict, "accepted (1.5,-0.5)");
  return o;
}

// AC6.
Outcome gap_properties() {
  Outcome o;
  std::mt19937_64 rng(606);
  int probes = 0;
  for (int n = 1; n <= 5; ++n) {
    const Problem p = support::random_affine_box(rng, n);
    for (int i = 0; i < 500; ++i) {
      const Vector x = p.set().sample(rng);
      const Vector z = p.set().sample(rng);
      const smpec::GapEvaluation gx = smpec::eval_gap(p, x);
      const double gz = smpec::eval_gap(p, z).value;
      const double gm = smpec::eval_gap(p, 0.5 * (x + z)).value;
      if (gx.value < -1e-8) {
        o.require(false, "negative gap " + num(gx.value));
      }
      if (gm > 0.5 * gx.value + 0.5 * gz + 1e-8) {
        o.require(false, "midpoint convexity violated at n=" +
                             std::to_string(n));
      }
      const double lin = gx.value + smpec::gap_subgradient(p, x).dot(z - x);
      if (gz < lin - 1e-7) {
        o.require(false, "subgradient inequality violated by " +
                             num(lin - gz));
      }
      probes += 3;
    }
  }
  o.note(std::to_string(probes) + " probes");
  return o;
}

// AC7.
Outcome oracle_equivalence() {
  Outcome o;
  double worst = 0.0;
  int points = 0;
  for (const std::string& name : smpec::cli::demo_names()) {
    const Problem p = demo(name);
    if (p.dimension() > 2) continue;
    const auto form = p.map().affine_form();
    if (!form) continue;
    const smpec::ConvexSet& C = p.set();
    std::mt19937_64 rng(7000 + points);
    for (int i = 0; i < 100; ++i) {
      const Vector x = C.sample(rng);
      auto fn = [&](const Vector& y) {
        return oracle::affine_integrand(form->M, form->q, x, y);
      };
      double ref;
      if (p.dimension() == 1) {
        ref = oracle::grid_max_1d([&](double t) { return fn(vec({t})); },
                                  C.lower()(0), C.upper()(0), 1e-4)
                  .value;
      } else {
        ref = oracle::grid_max_box(fn, C.lower(), C.upper(), 200, 1e-4).value;
      }
      const double err = std::abs(smpec::eval_gap(p, x).value - ref);
      worst = std::max(worst, err);
      ++points;
    }
  }
  o.require(worst <= 1e-3, "max deviation " + num(worst));
  o.note(std::to_string(points) + " points, max deviation " + num(worst));
  return o;
}

// AC8.
Outcome sequential_residuals() {
  Outcome o;
  for (const std::string& name : smpec::cli::demo_names()) {
    const Problem p = demo(name);
    const smpec::SolveTrace t = smpec::solve_smpec(p);
    if (t.status != smpec::SolveStatus::kThresholdMet) {
      o.note(name + " not converged (" +
             std::string(smpec::to_string(t.status)) + ")");
      continue;
    }
    const smpec::SequentialResiduals r = smpec::sequential_residuals(p, t);
    const double worst =
        std::max({r.tail_r1, r.tail_r2, r.tail_r3, r.tail_r4});
    o.require(worst <= 1e-3, name + " tail maxima (" + num(r.tail_r1) + ", " +
                                 num(r.tail_r2) + ", " + num(r.tail_r3) +
                                 ", " + num(r.tail_r4) + ") over " +
                                 std::to_string(r.tail_length) + " entries");
    for (const smpec::ConvexCombination& cc : r.decompositions) {
      double sum = 0.0;
      bool nonneg = true;
      for (double w : cc.weights) {
        sum += w;
        nonneg = nonneg && w >= 0.0;
      }
      o.require(std::abs(sum - 1.0) <= 1e-12 && nonneg &&
                    static_cast<Index>(cc.points.size()) <= p.dimension() + 1,
                name + " decomposition weights");
    }
    if (worst <= 1e-3) o.note(name + " ok");
  }
  return o;
}

// Known solution plus 0.1 along a direction that stays in C and strictly
// increases f, preferring directions that keep g_D at zero.
std::optional<Vector> perturbed_point(const Problem& p, const Vector& x_bar) {
  const Index n = p.dimension();
  std::vector<Vector> dirs;
  for (Index i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      Vector d = Vector::Zero(n);
      d(i) = s;
      dirs.push_back(d);
    }
  }
  if (n == 2) {
    for (double a : {1.0, -1.0}) {
      for (double b : {1.0, -1.0}) dirs.push_back(vec({a, b}) / std::sqrt(2.0));
    }
  }
  const double f0 = p.objective().value(x_bar);
  std::optional<Vector> fallback;
  for (const Vector& d : dirs) {
    const Vector x = x_bar + 0.1 * d;
    if (!p.set().contains(x) || p.objective().value(x) <= f0 + 1e-12) continue;
    if (smpec::eval_gap(p, x).value <= 1e-9) return x;
    if (!fallback) fallback = x;
  }
  return fallback;
}

// AC9.
Outcome certificate_soundness() {
  Outcome o;
  for (const std::string& name : smpec::cli::demo_names()) {
    const Problem p = demo(name);
    const Vector x_bar = known(p);
    const smpec::KktCertificate c = smpec::kkt_certificate(p, x_bar, 1e-6);
    o.require(c.certified && c.stationarity_residual <= 1e-6 &&
                  c.complementarity_residual <= 1e-6,
              name + " known solution not certified (stationarity " +
                  num(c.stationarity_residual) + ", complementarity " +
                  num(c.complementarity_residual) + ")");
    const std::optional<Vector> x = perturbed_point(p, x_bar);
    if (!x) {
      o.require(false, name + " has no admissible perturbation");
      continue;
    }
    bool rejected = false;
    std::string how;
    try {
      rejected = !smpec::kkt_certificate(p, *x, 1e-6).certified;
      how = "stationarity";
    } catch (const smpec::Error& e) {
      rejected = e.code() == smpec::ErrorCode::kLowerLevelInfeasible;
      how = std::string(smpec::to_string(e.code()));
    }
    o.require(rejected, name + " perturbed point certified");
    o.note(name + " perturbation rejected by " + how);
  }
  return o;
}

// AC10.
Outcome determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "smpec_acceptance";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  for (const std::string& name : smpec::cli::demo_names()) {
    const Problem p = demo(name);
    const std::string a = smpec::trace_to_csv(smpec::solve_smpec(p));
    const std::string b = smpec::trace_to_csv(smpec::solve_smpec(p));
    o.require(a == b, name + " traces differ in process");
    std::string files[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path trace = dir / (name + "." + std::to_string(run) + ".csv");
      const std::string path = trace.string();
      const char* argv[] = {"smpec", "solve", name.c_str(), "--trace",
                            path.c_str()};
      std::ostringstream out, err;
      smpec::cli::run_cli(5, argv, out, err);
      files[run] = slurp(trace);
    }
    o.require(!files[0].empty() && files[0] == files[1] && files[0] == a,
              name + " trace files differ");
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // <= 0 means no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "identity map on [-1,1]: gap and weak BCQ", 1.0,
       identity_map_example},
      {2, "constant map on the unit square", 5.0, constant_map_example},
      {3, "min-norm primal-dual LP", 10.0, min_norm_lp},
      {4, "distance estimation", 10.0, distance_estimation},
      {5, "basis pursuit and membership", 10.0, basis_pursuit},
      {6, "gap property suite", 30.0, gap_properties},
      {7, "grid oracle equivalence", 0.0, oracle_equivalence},
      {8, "sequential optimality residuals", 0.0, sequential_residuals},
      {9, "certificate soundness", 0.0, certificate_soundness},
      {10, "determinism of trace files", 0.0, determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds) {
      o.require(false, "runtime " + num(secs) + " s over " +
                           num(c.budget_seconds) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("AC%-2d %s  %-44s %8.3fs  %s\n", c.id,
                o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
