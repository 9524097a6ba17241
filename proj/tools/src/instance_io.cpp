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

#include "smpec_cli/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "smpec/error.hpp"

namespace smpec::cli {
namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation, path + ": " + what);
}

const json& object_at(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  return j;
}

void allow_only(const json& j, const std::string& path,
                std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      schema(path + "/" + it.key(), "unknown field");
    }
  }
}

const json& required(const json& j, const std::string& path,
                     const char* key) {
  if (!j.contains(key)) schema(path + "/" + key, "missing required field");
  return j.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected a number");
  return j.get<double>();
}

// Arrays of numbers; null entries map to null_value when allowed.
Vector vector_at(const json& j, const std::string& path, Index expected,
                 std::optional<double> null_value = std::nullopt) {
  if (!j.is_array()) schema(path, "expected an array of numbers");
  if (expected >= 0 && static_cast<Index>(j.size()) != expected) {
    schema(path, "expected " + std::to_string(expected) + " entries, got " +
                     std::to_string(j.size()));
  }
  Vector v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    if (j[i].is_null() && null_value) {
      v(static_cast<Index>(i)) = *null_value;
    } else {
      v(static_cast<Index>(i)) = number(j[i], p);
    }
  }
  return v;
}

Matrix matrix_at(const json& j, const std::string& path, Index rows,
                 Index cols) {
  if (!j.is_array()) schema(path, "expected an array of rows");
  if (rows >= 0 && static_cast<Index>(j.size()) != rows) {
    schema(path, "expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(j.size()));
  }
  const Index r = static_cast<Index>(j.size());
  Matrix M(r, cols);
  for (Index i = 0; i < r; ++i) {
    const Vector row =
        vector_at(j[i], path + "/" + std::to_string(i), cols);
    M.row(i) = row.transpose();
  }
  return M;
}

std::string variant_of(const json& j, const std::string& path) {
  const json& v = required(j, path, "variant");
  if (!v.is_string()) schema(path + "/variant", "expected a string");
  return v.get<std::string>();
}

const json& params_of(const json& j, const std::string& path) {
  static const json empty = json::object();
  if (!j.contains("params")) return empty;
  return object_at(j.at("params"), path + "/params");
}

ConvexObjective::Term parse_term(const std::string& variant, const json& p,
                                 const std::string& path, Index n) {
  ConvexObjective::Term t;
  if (variant == "quadratic-distance") {
    allow_only(p, path, {"anchor"});
    t.kind = ConvexObjective::TermKind::kQuadraticDistance;
    t.data = vector_at(required(p, path, "anchor"), path + "/anchor", n);
  } else if (variant == "squared-norm") {
    allow_only(p, path, {});
    t.kind = ConvexObjective::TermKind::kSquaredNorm;
  } else if (variant == "l1-norm") {
    allow_only(p, path, {});
    t.kind = ConvexObjective::TermKind::kL1Norm;
  } else if (variant == "linear") {
    allow_only(p, path, {"c"});
    t.kind = ConvexObjective::TermKind::kLinear;
    t.data = vector_at(required(p, path, "c"), path + "/c", n);
  } else {
    schema(path, "unknown objective variant '" + variant + "'");
  }
  return t;
}

ConvexObjective parse_objective(const json& j, Index n) {
  const std::string path = "/objective";
  object_at(j, path);
  allow_only(j, path, {"variant", "params"});
  const std::string variant = variant_of(j, path);
  const json& p = params_of(j, path);
  const std::string ppath = path + "/params";
  if (variant == "weighted-sum") {
    allow_only(p, ppath, {"terms"});
    const json& terms = required(p, ppath, "terms");
    if (!terms.is_array()) schema(ppath + "/terms", "expected an array");
    std::vector<ConvexObjective::Term> out;
    for (size_t i = 0; i < terms.size(); ++i) {
      const std::string tpath = ppath + "/terms/" + std::to_string(i);
      object_at(terms[i], tpath);
      allow_only(terms[i], tpath, {"variant", "weight", "params"});
      const std::string tv = variant_of(terms[i], tpath);
      if (tv == "weighted-sum") schema(tpath + "/variant", "nested sums");
      ConvexObjective::Term t =
          parse_term(tv, params_of(terms[i], tpath), tpath + "/params", n);
      t.weight = terms[i].contains("weight")
                     ? number(terms[i]["weight"], tpath + "/weight")
                     : 1.0;
      if (t.weight < 0.0) schema(tpath + "/weight", "must be nonnegative");
      out.push_back(std::move(t));
    }
    return ConvexObjective::weighted_sum(n, std::move(out));
  }
  ConvexObjective::Term t = parse_term(variant, p, ppath, n);
  switch (t.kind) {
    case ConvexObjective::TermKind::kQuadraticDistance:
      return ConvexObjective::quadratic_distance(t.data);
    case ConvexObjective::TermKind::kSquaredNorm:
      return ConvexObjective::squared_norm(n);
    case ConvexObjective::TermKind::kL1Norm:
      return ConvexObjective::l1_norm(n);
    case ConvexObjective::TermKind::kLinear:
      return ConvexObjective::linear(t.data);
  }
  schema(path, "unsupported objective");
}

MonotoneMap parse_map(const json& j, Index n) {
  const std::string path = "/map";
  object_at(j, path);
  allow_only(j, path, {"variant", "params"});
  const std::string variant = variant_of(j, path);
  const json& p = params_of(j, path);
  const std::string ppath = path + "/params";
  if (variant == "affine") {
    allow_only(p, ppath, {"M", "q"});
    Matrix M = matrix_at(required(p, ppath, "M"), ppath + "/M", n, n);
    Vector q = vector_at(required(p, ppath, "q"), ppath + "/q", n);
    return MonotoneMap::affine(std::move(M), std::move(q));
  }
  if (variant == "gradient-of-quadratic") {
    allow_only(p, ppath, {"A", "b"});
    const json& A = required(p, ppath, "A");
    Vector b = vector_at(required(p, ppath, "b"), ppath + "/b", -1);
    Matrix Am = matrix_at(A, ppath + "/A", b.size(), n);
    return MonotoneMap::quadratic_gradient(std::move(Am), std::move(b));
  }
  if (variant == "black-box") {
    schema(path + "/variant", "black-box maps cannot be read from files");
  }
  schema(path + "/variant", "unknown map variant '" + variant + "'");
}

ConvexSet parse_set(const json& j, Index n) {
  const std::string path = "/set";
  object_at(j, path);
  allow_only(j, path, {"variant", "params"});
  const std::string variant = variant_of(j, path);
  const json& p = params_of(j, path);
  const std::string ppath = path + "/params";
  try {
    if (variant == "box") {
      allow_only(p, ppath, {"lower", "upper"});
      Vector lo = vector_at(required(p, ppath, "lower"), ppath + "/lower", n,
                            -kInf);
      Vector hi = vector_at(required(p, ppath, "upper"), ppath + "/upper", n,
                            kInf);
      return ConvexSet::box(std::move(lo), std::move(hi));
    }
    if (variant == "ball") {
      allow_only(p, ppath, {"center", "radius"});
      Vector c = vector_at(required(p, ppath, "center"), ppath + "/center", n);
      const double r = number(required(p, ppath, "radius"), ppath + "/radius");
      if (!(r > 0.0)) schema(ppath + "/radius", "must be positive");
      return ConvexSet::ball(std::move(c), r);
    }
    if (variant == "polytope") {
      allow_only(p, ppath, {"A", "b"});
      Vector b = vector_at(required(p, ppath, "b"), ppath + "/b", -1);
      Matrix A = matrix_at(required(p, ppath, "A"), ppath + "/A", b.size(), n);
      return ConvexSet::polytope(std::move(A), std::move(b));
    }
    if (variant == "simplex") {
      allow_only(p, ppath, {"scale"});
      const double s = p.contains("scale")
                           ? number(p["scale"], ppath + "/scale")
                           : 1.0;
      if (!(s > 0.0)) schema(ppath + "/scale", "must be positive");
      return ConvexSet::simplex(n, s);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaViolation) throw;
    throw Error(e.code(), ppath + ": " + e.what());
  }
  schema(path + "/variant", "unknown set variant '" + variant + "'");
}

json vec_json(const Vector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::isfinite(v(i))) a.push_back(v(i)); else a.push_back(nullptr);
  }
  return a;
}

json mat_json(const Matrix& M) {
  json a = json::array();
  for (Index i = 0; i < M.rows(); ++i) a.push_back(vec_json(M.row(i)));
  return a;
}

const char* term_name(ConvexObjective::TermKind kind) {
  switch (kind) {
    case ConvexObjective::TermKind::kQuadraticDistance:
      return "quadratic-distance";
    case ConvexObjective::TermKind::kSquaredNorm: return "squared-norm";
    case ConvexObjective::TermKind::kL1Norm: return "l1-norm";
    case ConvexObjective::TermKind::kLinear: return "linear";
  }
  return "";
}

json term_params(const ConvexObjective::Term& t) {
  json p = json::object();
  if (t.kind == ConvexObjective::TermKind::kQuadraticDistance) {
    p["anchor"] = vec_json(t.data);
  }
  if (t.kind == ConvexObjective::TermKind::kLinear) p["c"] = vec_json(t.data);
  return p;
}

}  // namespace

ProblemInstance parse_instance_text(const std::string& text,
                                    const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t end = std::min<size_t>(e.byte > 0 ? e.byte - 1 : 0,
                                        text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    throw Error(ErrorCode::kParseError, source + ":" + std::to_string(line) +
                                            ":" + std::to_string(col) + ": " +
                                            msg);
  }
  object_at(root, "");
  allow_only(root, "", {"dimension", "objective", "map", "set", "box_radius",
                        "known_solution"});
  const json& dim = required(root, "", "dimension");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) {
    schema("/dimension", "expected a positive integer");
  }
  ProblemInstance inst;
  inst.dimension = static_cast<Index>(dim.get<long long>());
  const Index n = inst.dimension;
  inst.objective = parse_objective(required(root, "", "objective"), n);
  inst.map = parse_map(required(root, "", "map"), n);
  inst.set = parse_set(required(root, "", "set"), n);
  if (root.contains("box_radius")) {
    const json& r = root["box_radius"];
    if (r.is_null()) {
      inst.box_radius.reset();
    } else {
      const double R = number(r, "/box_radius");
      if (!(R > 0.0)) schema("/box_radius", "must be positive or null");
      inst.box_radius = R;
    }
  }
  if (root.contains("known_solution")) {
    const json& ks = object_at(root["known_solution"], "/known_solution");
    allow_only(ks, "/known_solution", {"point", "objective"});
    KnownSolution sol;
    sol.point = vector_at(required(ks, "/known_solution", "point"),
                          "/known_solution/point", n);
    if (ks.contains("objective")) {
      sol.objective = number(ks["objective"], "/known_solution/objective");
    }
    inst.known_solution = std::move(sol);
  }
  validate_instance(inst);
  return inst;
}

ProblemInstance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), path);
}

std::string serialize_instance(const ProblemInstance& inst) {
  json root;
  root["dimension"] = inst.dimension;

  const ConvexObjective& f = inst.objective;
  json obj;
  if (f.variant() == ConvexObjective::Variant::kWeightedSum) {
    obj["variant"] = "weighted-sum";
    json terms = json::array();
    for (const auto& t : f.terms()) {
      terms.push_back({{"variant", term_name(t.kind)},
                       {"weight", t.weight},
                       {"params", term_params(t)}});
    }
    obj["params"] = {{"terms", terms}};
  } else {
    const auto& t = f.terms().front();
    obj["variant"] = term_name(t.kind);
    obj["params"] = term_params(t);
  }
  root["objective"] = obj;

  const MonotoneMap& F = inst.map;
  switch (F.kind()) {
    case MonotoneMap::Kind::kAffine:
      root["map"] = {{"variant", "affine"},
                     {"params", {{"M", mat_json(F.matrix())},
                                 {"q", vec_json(F.vector())}}}};
      break;
    case MonotoneMap::Kind::kQuadraticGradient:
      root["map"] = {{"variant", "gradient-of-quadratic"},
                     {"params", {{"A", mat_json(F.matrix())},
                                 {"b", vec_json(F.vector())}}}};
      break;
    case MonotoneMap::Kind::kBlackBox:
      throw Error(ErrorCode::kSchemaViolation,
                  "/map: black-box maps cannot be serialized");
  }

  const ConvexSet& C = inst.set;
  switch (C.kind()) {
    case ConvexSet::Kind::kBox:
      root["set"] = {{"variant", "box"},
                     {"params", {{"lower", vec_json(C.lower())},
                                 {"upper", vec_json(C.upper())}}}};
      break;
    case ConvexSet::Kind::kBall:
      root["set"] = {{"variant", "ball"},
                     {"params", {{"center", vec_json(C.center())},
                                 {"radius", C.radius()}}}};
      break;
    case ConvexSet::Kind::kPolytope:
      root["set"] = {{"variant", "polytope"},
                     {"params", {{"A", mat_json(C.A())},
                                 {"b", vec_json(C.b())}}}};
      break;
    case ConvexSet::Kind::kSimplex:
      root["set"] = {{"variant", "simplex"},
                     {"params", {{"scale", C.scale()}}}};
      break;
  }
  if (inst.box_radius) {
    root["box_radius"] = *inst.box_radius;
  } else {
    root["box_radius"] = nullptr;
  }
  if (inst.known_solution) {
    json ks;
    ks["point"] = vec_json(inst.known_solution->point);
    if (inst.known_solution->objective) {
      ks["objective"] = *inst.known_solution->objective;
    }
    root["known_solution"] = ks;
  }
  return root.dump(2) + "\n";
}

Vector parse_point(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      values.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(
                 static_cast<unsigned char>(item[used]))) {
        ++used;
      }
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError,
                  "cannot parse point component '" + item + "'");
    }
  }
  if (values.empty()) {
    throw Error(ErrorCode::kParseError, "empty point");
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Index>(values.size()));
}

}  // namespace smpec::cli
