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

#include "smpec_cli/report.hpp"

#include <cmath>
#include <string>

#include "json.hpp"

namespace smpec::cli {
namespace {

using nlohmann::ordered_json;

ordered_json num(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

ordered_json vec(const Vector& v) {
  ordered_json a = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(num(v(i)));
  return a;
}

ordered_json points(const std::vector<Vector>& list) {
  ordered_json a = ordered_json::array();
  for (const Vector& v : list) a.push_back(vec(v));
  return a;
}

ordered_json reals(const std::vector<double>& list) {
  ordered_json a = ordered_json::array();
  for (double v : list) a.push_back(num(v));
  return a;
}

}  // namespace

std::string solve_summary_json(const Problem& problem,
                               const SolveTrace& trace) {
  const TraceEntry& last = trace.last();
  ordered_json j;
  j["status"] = std::string(to_string(trace.status));
  j["iterations"] = trace.entries.size();
  j["point"] = vec(last.x);
  j["objective"] = num(last.objective);
  j["gap"] = num(last.gap);
  j["epsilon"] = num(last.epsilon);
  j["touches_box_wrap"] = problem.touches_wrap(last.x);
  return j.dump(2) + "\n";
}

std::string certify_report_json(const CertifyBundle& b) {
  ordered_json j;
  j["verdict"] = b.certified() ? "certified" : "not-certified";
  j["point"] = vec(b.point);
  j["point_source"] = b.point_source;

  ordered_json kkt;
  if (b.kkt) {
    const KktCertificate& c = *b.kkt;
    kkt["verdict"] = c.certified ? "certified" : "not-certified";
    kkt["gap"] = num(c.gap);
    kkt["residuals"] = {{"stationarity", num(c.stationarity_residual)},
                        {"complementarity", num(c.complementarity_residual)}};
    kkt["multipliers"] = reals(c.multipliers);
    kkt["points"] = points(c.points);
    kkt["u"] = vec(c.u);
  } else {
    kkt["verdict"] = "error";
    kkt["error"] = b.kkt_error;
  }
  j["kkt"] = kkt;

  ordered_json bcq;
  if (b.weak_bcq) {
    const WeakBcqDiagnostic& d = *b.weak_bcq;
    bcq["verdict"] = std::string(to_string(d.verdict));
    bcq["distance"] = num(d.distance);
    bcq["witness"] = d.witness ? vec(*d.witness) : ordered_json(nullptr);
    bcq["cone_dimension"] = d.cone_dimension;
    bcq["boundary"] = d.boundary_description;
    bcq["hull_generators"] = points(d.hull_generators);
  } else {
    bcq["verdict"] = "error";
    bcq["error"] = b.weak_bcq_error;
  }
  j["weak_bcq"] = bcq;

  ordered_json mult;
  if (b.multiplier) {
    const MultiplierCertificate& m = *b.multiplier;
    mult["verdict"] = m.certified ? "certified" : "not-certified";
    mult["residuals"] = {{"stationarity", num(m.residual)},
                         {"complementarity", num(m.complementarity_residual)}};
    mult["multipliers"] = reals(m.beta);
    mult["points"] = points(m.points);
    mult["y_star"] = num(m.y_star);
    mult["convex_weights"] = reals(m.convex_weights);
  } else {
    mult["verdict"] = "error";
    mult["error"] = b.multiplier_error;
  }
  j["multiplier"] = mult;

  ordered_json seq;
  if (b.sequential) {
    const SequentialResiduals& s = *b.sequential;
    seq["reference"] = vec(s.x_bar);
    seq["tail_length"] = s.tail_length;
    seq["residuals"] = {{"r1", num(s.tail_r1)},
                        {"r2", num(s.tail_r2)},
                        {"r3", num(s.tail_r3)},
                        {"r4", num(s.tail_r4)}};
  } else {
    seq["error"] = b.sequential_error;
  }
  j["sequential"] = seq;
  return j.dump(2) + "\n";
}

}  // namespace smpec::cli
