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

#include "smpec_cli/command.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smpec/certify.hpp"
#include "smpec/error.hpp"
#include "smpec/gap.hpp"
#include "smpec/solver.hpp"
#include "smpec_cli/demos.hpp"
#include "smpec_cli/instance_io.hpp"
#include "smpec_cli/report.hpp"

namespace smpec::cli {
namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kSchemaViolation:
      return kExitParse;
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kMonotonicityViolation:
    case ErrorCode::kUnboundedSet:
    case ErrorCode::kEmptySet:
    case ErrorCode::kInvalidArgument:
      return kExitValidation;
    case ErrorCode::kLowerLevelInfeasible:
    case ErrorCode::kUncertifiedInput:
      return kExitNotCertified;
    case ErrorCode::kNotInSet:
    case ErrorCode::kNonConvergence:
    case ErrorCode::kInnerNonConvergence:
    case ErrorCode::kIterationCap:
    case ErrorCode::kTargetNotInHull:
    case ErrorCode::kUnsupportedSetDimension:
      return kExitSolver;
  }
  return kExitSolver;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string fmt(const Vector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += fmt(v(i));
  }
  return s + ")";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  }
  out << text;
}

ProblemInstance load(const Command& cmd) {
  ProblemInstance inst;
  if (std::filesystem::is_regular_file(cmd.target)) {
    inst = parse_instance(cmd.target);
  } else if (auto demo = make_demo(cmd.target)) {
    inst = std::move(*demo);
  } else {
    throw Error(ErrorCode::kParseError,
                cmd.target + ": no such instance file or demo");
  }
  if (cmd.box_radius) {
    if (*cmd.box_radius < 0.0) {
      inst.box_radius.reset();
    } else {
      inst.box_radius = *cmd.box_radius;
    }
  }
  return inst;
}

SolveConfig solve_config(const Command& cmd) {
  SolveConfig cfg;
  if (cmd.epsilon0) cfg.epsilon0 = *cmd.epsilon0;
  if (cmd.alpha) cfg.alpha = *cmd.alpha;
  if (cmd.mu) cfg.mu = *cmd.mu;
  if (cmd.max_outer) cfg.max_outer_iterations = *cmd.max_outer;
  if (cmd.max_inner) cfg.subproblem.max_inner_iterations = *cmd.max_inner;
  return cfg;
}

SolveTrace do_solve(const Command& cmd, const Problem& problem,
                    std::ostream& out) {
  const SolveTrace trace = solve_smpec(problem, solve_config(cmd));
  const TraceEntry& last = trace.last();
  out << "status: " << to_string(trace.status) << "\n"
      << "iterations: " << trace.entries.size() << "\n"
      << "x: " << fmt(last.x) << "\n"
      << "f: " << fmt(last.objective) << "\n"
      << "g_D: " << fmt(last.gap) << "\n";
  if (problem.touches_wrap(last.x)) {
    out << "warning: terminal point touches the artificial box bound\n";
  }
  if (!cmd.trace_path.empty()) write_file(cmd.trace_path, trace_to_csv(trace));
  return trace;
}

int do_certify(const Command& cmd, const Problem& problem,
               const SolveTrace& trace, std::ostream& out) {
  const double tol = cmd.tol.value_or(1e-6);
  CertifyBundle b;
  if (cmd.at) {
    b.point = *cmd.at;
    b.point_source = "command-line";
  } else if (problem.instance().known_solution) {
    b.point = problem.instance().known_solution->point;
    b.point_source = "known-solution";
  } else {
    b.point = trace.last().x;
    b.point_source = "solver";
  }
  try {
    b.kkt = kkt_certificate(problem, b.point, tol);
  } catch (const Error& e) {
    b.kkt_error = e.what();
  }
  try {
    b.weak_bcq = weak_bcq_check(problem, b.point, tol);
  } catch (const Error& e) {
    b.weak_bcq_error = e.what();
  }
  try {
    b.multiplier = multiplier_certificate(problem, b.point, tol);
  } catch (const Error& e) {
    b.multiplier_error = e.what();
  }
  try {
    b.sequential = sequential_residuals(problem, trace);
  } catch (const Error& e) {
    b.sequential_error = e.what();
  }
  const std::string report = certify_report_json(b);
  out << "certify: " << (b.certified() ? "certified" : "not certified")
      << " at " << fmt(b.point) << " (" << b.point_source << ")\n";
  if (b.kkt) {
    out << "kkt residuals: stationarity "
        << fmt(b.kkt->stationarity_residual) << ", complementarity "
        << fmt(b.kkt->complementarity_residual) << "\n";
  } else {
    out << "kkt: " << b.kkt_error << "\n";
  }
  if (b.weak_bcq) {
    out << "weak BCQ: " << to_string(b.weak_bcq->verdict) << " (distance "
        << fmt(b.weak_bcq->distance) << ")\n";
  } else {
    out << "weak BCQ: " << b.weak_bcq_error << "\n";
  }
  if (b.sequential) {
    out << "sequential tail maxima: " << fmt(b.sequential->tail_r1) << ", "
        << fmt(b.sequential->tail_r2) << ", " << fmt(b.sequential->tail_r3)
        << ", " << fmt(b.sequential->tail_r4) << "\n";
  }
  if (!cmd.report_path.empty()) write_file(cmd.report_path, report);
  return b.certified() ? kExitOk : kExitNotCertified;
}

int dispatch(const Command& cmd, std::ostream& out) {
  if (cmd.subcommand == "demo") {
    auto demo = make_demo(cmd.target);
    if (!demo) {
      throw Error(ErrorCode::kParseError, "unknown demo '" + cmd.target + "'");
    }
    const std::string path =
        (std::filesystem::path(cmd.output_dir) / (cmd.target + ".json"))
            .string();
    write_file(path, serialize_instance(*demo));
    out << "wrote " << path << "\n";
  }
  const Problem problem = Problem::create(load(cmd));

  if (cmd.subcommand == "validate") {
    const ValidationReport& r = problem.report();
    out << "dimension: " << problem.dimension() << "\n"
        << "monotone: " << (r.monotone ? "true" : "false") << " ("
        << r.monotonicity_method << ", margin "
        << fmt(r.monotonicity_margin) << ")\n"
        << "bounded: " << (r.set_bounded ? "true" : "false") << "\n";
    if (r.wrapped) out << "wrapped in box of radius " << fmt(r.box_radius)
                       << "\n";
    return kExitOk;
  }
  if (cmd.subcommand == "gap") {
    const Vector x = cmd.at ? *cmd.at
                            : problem.set().project(
                                  Vector::Zero(problem.dimension()));
    const GapEvaluation g = eval_gap(problem, x);
    out << "value: " << fmt(g.value) << "\n"
        << "subgradient: " << fmt(g.subgradient) << "\n"
        << "maximizers:";
    for (const Vector& y : g.maximizers) out << " " << fmt(y);
    out << "\n"
        << "inner_iterations: " << g.inner_iterations << "\n"
        << "certified: " << (g.certified ? "true" : "false") << "\n";
    return kExitOk;
  }
  if (cmd.subcommand == "vi") {
    ViConfig cfg;
    if (cmd.at) cfg.x0 = *cmd.at;
    const ViSolveResult r = solve_vi(problem, cmd.tol.value_or(1e-8), cfg);
    out << "point: " << fmt(r.point) << "\n"
        << "residual: " << fmt(r.residual) << "\n"
        << "iterations: " << r.iterations << "\n"
        << "converged: " << (r.converged ? "true" : "false") << "\n";
    return kExitOk;
  }
  const SolveTrace trace = do_solve(cmd, problem, out);
  if (cmd.subcommand == "solve") {
    if (!cmd.report_path.empty()) {
      write_file(cmd.report_path, solve_summary_json(problem, trace));
    }
    return kExitOk;
  }
  return do_certify(cmd, problem, trace, out);
}

}  // namespace

int run(const Command& command, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(command, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Simple MPEC solver and optimality certificates"};
  app.require_subcommand(1);
  Command cmd;
  std::string at;

  auto add_common = [&](CLI::App* sub, bool solver_flags) {
    sub->add_option("target", cmd.target, "instance file or demo name")
        ->required();
    sub->add_option("--box-radius", cmd.box_radius,
                    "radius of the artificial box (negative disables)");
    if (solver_flags) {
      sub->add_option("--epsilon0", cmd.epsilon0, "initial epsilon")
          ->check(CLI::PositiveNumber);
      sub->add_option("--alpha", cmd.alpha, "epsilon decay exponent")
          ->check(CLI::Range(1e-12, 1.0));
      sub->add_option("--mu", cmd.mu, "gap threshold")
          ->check(CLI::NonNegativeNumber);
      sub->add_option("--max-outer", cmd.max_outer, "outer iteration cap")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-inner", cmd.max_inner,
                      "subproblem iteration cap")
          ->check(CLI::PositiveNumber);
      sub->add_option("--trace", cmd.trace_path, "trace CSV output");
    }
    sub->add_option("--report", cmd.report_path, "report output");
  };

  CLI::App* solve = app.add_subcommand("solve", "run the regularization loop");
  add_common(solve, true);
  CLI::App* gap = app.add_subcommand("gap", "evaluate the dual gap function");
  add_common(gap, false);
  gap->add_option("--at", at, "point x1,x2,...");
  CLI::App* vi = app.add_subcommand("vi", "solve the lower-level VI");
  add_common(vi, false);
  vi->add_option("--tol", cmd.tol, "gap tolerance")
      ->check(CLI::PositiveNumber);
  vi->add_option("--at", at, "starting point x1,x2,...");
  CLI::App* certify = app.add_subcommand("certify", "solve and certify");
  add_common(certify, true);
  certify->add_option("--tol", cmd.tol, "certificate tolerance")
      ->check(CLI::PositiveNumber);
  certify->add_option("--at", at, "point to certify x1,x2,...");
  CLI::App* demo = app.add_subcommand("demo", "materialize and run a demo");
  add_common(demo, true);
  demo->add_option("--tol", cmd.tol, "certificate tolerance")
      ->check(CLI::PositiveNumber);
  demo->add_option("--output-dir", cmd.output_dir,
                   "directory for the instance file");
  CLI::App* validate = app.add_subcommand("validate", "check an instance");
  add_common(validate, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) cmd.subcommand = sub->get_name();
  if (!at.empty()) {
    try {
      cmd.at = parse_point(at);
    } catch (const Error& e) {
      err << "usage error: --at: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run(cmd, out, err);
}

}  // namespace smpec::cli
