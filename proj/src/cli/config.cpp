// Copyright 2026 The condgrad Authors
//
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

#include "condgrad/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "condgrad/problems.hpp"

namespace condgrad::cli {
namespace {

using nlohmann::json;

Vector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of numbers");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(std::string(what) + ": expected an array of numbers");
    v[static_cast<Index>(i)] = j[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    const Vector row = vector_from_json(j[i], what);
    if (static_cast<std::size_t>(row.size()) != cols) throw ParseError(std::string(what) + ": ragged rows");
    m.row(static_cast<Index>(i)) = row.transpose();
  }
  return m;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vector(m.row(i).transpose())));
  return out;
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
T require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw UsageError(where + ": missing parameter '" + key + "'");
  return get_or<T>(j, key, T{});
}

SetDescriptor set_from_json(const json& j, Index n) {
  if (!j.is_object()) throw ParseError("set: expected an object");
  const std::string kind = get_or<std::string>(j, "kind", "simplex");
  if (kind == "simplex") return SimplexSet{n};
  if (kind == "lp_ball") return LpBallSet{n, get_or<double>(j, "p", 2.0), get_or<double>(j, "r", 1.0)};
  throw UsageError("set: unknown kind '" + kind + "'");
}

Vector shift_param(const json& p, Index n, std::uint64_t seed, const std::string& where) {
  if (p.contains("c")) return vector_from_json(p.at("c"), "c");
  if (p.contains("c_norm")) return random_shift(n, get_or<double>(p, "c_norm", 0.0), seed);
  if (p.contains("c_axis")) return get_or<double>(p, "c_axis", 0.0) * Vector::Unit(n, 0);
  throw UsageError(where + ": give one of c, c_norm or c_axis");
}

std::string kind_name(X0Policy::Kind kind) {
  switch (kind) {
    case X0Policy::Kind::kVertex:
      return "vertex";
    case X0Policy::Kind::kCenter:
      return "center";
    case X0Policy::Kind::kGiven:
      return "given";
  }
  return "vertex";
}

json to_json(const CertificateRequest& req) {
  json out;
  out["target"] = req.target == CertificateTarget::kGap ? "gap" : "subopt";
  if (req.source == CertificateRequest::Source::kCase) {
    out["case"] = req.case_id;
    return out;
  }
  json body;
  body["kind"] = to_string(req.kind);
  body["q"] = req.q;
  body["r"] = req.r;
  if (req.epsilon) body["epsilon"] = *req.epsilon;
  if (req.source == CertificateRequest::Source::kExplicit) {
    body["M"] = req.M;
    out["explicit"] = body;
  } else {
    body["samples"] = req.samples;
    body["theta_grid"] = req.theta_grid;
    body["seed"] = req.sample_seed;
    out["empirical"] = body;
  }
  return out;
}

CertificateRequest certificate_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("certificates: each entry must be an object");
  CertificateRequest req;
  const std::string target = get_or<std::string>(j, "target", "gap");
  if (target == "gap") {
    req.target = CertificateTarget::kGap;
  } else if (target == "subopt") {
    req.target = CertificateTarget::kSubopt;
  } else {
    throw UsageError("certificates: target must be 'gap' or 'subopt'");
  }
  if (j.contains("case")) {
    req.source = CertificateRequest::Source::kCase;
    req.case_id = get_or<std::string>(j, "case", "");
    return req;
  }
  const bool explicit_cert = j.contains("explicit");
  if (!explicit_cert && !j.contains("empirical"))
    throw UsageError("certificates: entry needs 'case', 'empirical' or 'explicit'");
  const json& body = explicit_cert ? j.at("explicit") : j.at("empirical");
  if (!body.is_object()) throw ParseError("certificates: body must be an object");
  req.source = explicit_cert ? CertificateRequest::Source::kExplicit : CertificateRequest::Source::kEmpirical;
  req.kind = parse_growth_kind(get_or<std::string>(body, "kind", "growth"));
  req.q = get_or<double>(body, "q", 2.0);
  req.r = get_or<double>(body, "r", 0.0);
  if (body.contains("epsilon")) req.epsilon = get_or<double>(body, "epsilon", 1.0);
  req.M = get_or<double>(body, "M", 1.0);
  req.samples = get_or<int>(body, "samples", 2000);
  req.theta_grid = get_or<int>(body, "theta_grid", 50);
  req.sample_seed = get_or<std::uint64_t>(body, "seed", 1);
  return req;
}

json to_json(const ReparamSpec& spec) {
  json out;
  switch (spec.kind) {
    case ReparamSpec::Kind::kRandom:
      out["kind"] = "random";
      out["condition"] = spec.condition;
      out["seed"] = spec.seed;
      break;
    case ReparamSpec::Kind::kIdentity:
      out["kind"] = "identity";
      break;
    case ReparamSpec::Kind::kExplicit:
      out["kind"] = "explicit";
      out["A"] = to_json(spec.A);
      out["b"] = to_json(spec.b);
      break;
  }
  return out;
}

ReparamSpec reparam_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("reparametrization: expected an object");
  ReparamSpec spec;
  const std::string kind = get_or<std::string>(j, "kind", "random");
  if (kind == "random") {
    spec.kind = ReparamSpec::Kind::kRandom;
    spec.condition = get_or<double>(j, "condition", 10.0);
    spec.seed = get_or<std::uint64_t>(j, "seed", 0);
  } else if (kind == "identity") {
    spec.kind = ReparamSpec::Kind::kIdentity;
  } else if (kind == "explicit") {
    spec.kind = ReparamSpec::Kind::kExplicit;
    if (!j.contains("A") || !j.contains("b")) throw UsageError("reparametrization: explicit needs A and b");
    spec.A = matrix_from_json(j.at("A"), "A");
    spec.b = vector_from_json(j.at("b"), "b");
  } else {
    throw UsageError("reparametrization: unknown kind '" + kind + "'");
  }
  return spec;
}

}  // namespace

json to_json(const InstanceSpec& spec) {
  return json{{"constructor", spec.constructor}, {"params", spec.params}, {"seed", spec.seed}};
}

InstanceSpec instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected an object");
  InstanceSpec spec;
  if (!j.contains("constructor")) throw UsageError("instance: missing 'constructor'");
  spec.constructor = get_or<std::string>(j, "constructor", "");
  spec.params = j.contains("params") ? j.at("params") : json::object();
  if (!spec.params.is_object()) throw ParseError("instance: params must be an object");
  spec.seed = get_or<std::uint64_t>(j, "seed", 0);
  return spec;
}

Problem build_instance(const InstanceSpec& spec) {
  const json& p = spec.params;
  const std::string& name = spec.constructor;
  try {
    if (name == "quadratic_over_simplex") {
      if (p.contains("Q")) {
        const Matrix Q = matrix_from_json(p.at("Q"), "Q");
        const Vector c = vector_from_json(require<json>(p, "c", name), "c");
        return quadratic_over_simplex(Q, c);
      }
      return quadratic_over_simplex(require<long>(p, "n", name), spec.seed);
    }
    if (name == "quadratic_over_lp_ball") {
      const long n = require<long>(p, "n", name);
      if (n < 1) throw UsageError(name + ": n must be >= 1");
      return quadratic_over_lp_ball(n, get_or<double>(p, "p", 2.0), get_or<double>(p, "r", 1.0),
                                    shift_param(p, n, spec.seed, name), spec.seed);
    }
    if (name == "smooth_plus_strongly_convex") {
      const double mu = require<double>(p, "mu", name);
      if (p.contains("c")) return smooth_plus_strongly_convex(vector_from_json(p.at("c"), "c"), mu);
      return smooth_plus_strongly_convex(require<long>(p, "n", name), mu, spec.seed);
    }
    if (name == "holder_objective_over_set") {
      const long n = require<long>(p, "n", name);
      if (n < 1) throw UsageError(name + ": n must be >= 1");
      const SetDescriptor set = set_from_json(p.contains("set") ? p.at("set") : json::object(), n);
      const Vector c = p.contains("c") || p.contains("c_norm") || p.contains("c_axis")
                           ? shift_param(p, n, spec.seed, name)
                           : Vector(Vector::Zero(n));
      return holder_objective_over_set(n, require<double>(p, "nu", name), set, c, spec.seed);
    }
    if (name == "error_bound_instance") {
      if (p.contains("center")) return error_bound_instance(vector_from_json(p.at("center"), "center"));
      return error_bound_instance(require<long>(p, "n", name));
    }
    if (name == "local_scaling_instance") return local_scaling_instance(require<long>(p, "n", name));
  } catch (const json::exception& e) {
    throw ParseError(name + ": " + e.what());
  }
  throw UsageError("unknown instance constructor '" + name + "'");
}

Vector initial_point(const Problem& problem, const X0Policy& policy) {
  const Index n = problem.dimension;
  switch (policy.kind) {
    case X0Policy::Kind::kVertex:
      return problem.psi.lmo(-Vector::Unit(n, 0));
    case X0Policy::Kind::kCenter: {
      Vector sum = Vector::Zero(n);
      for (Index i = 0; i < n; ++i) sum += problem.psi.lmo(-Vector::Unit(n, i));
      return sum / static_cast<double>(n);
    }
    case X0Policy::Kind::kGiven:
      if (policy.given.size() != n) throw UsageError("x0: given vector has the wrong dimension");
      return policy.given;
  }
  return problem.psi.lmo(-Vector::Unit(n, 0));
}

Reparametrization build_reparametrization(const ReparamSpec& spec, Index n) {
  switch (spec.kind) {
    case ReparamSpec::Kind::kIdentity:
      return Reparametrization::identity(n);
    case ReparamSpec::Kind::kExplicit:
      return Reparametrization(spec.A, spec.b);
    case ReparamSpec::Kind::kRandom:
      break;
  }
  return random_reparametrization(n, spec.condition, spec.seed);
}

json to_json(const ExperimentConfig& c) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["instance"] = to_json(c.instance);
  out["strategy"] = c.strategy;
  if (c.x0.kind == X0Policy::Kind::kGiven) {
    out["x0"] = to_json(c.x0.given);
  } else {
    out["x0"] = kind_name(c.x0.kind);
  }
  out["max_iters"] = c.max_iters;
  out["gap_tol"] = c.gap_tol;
  out["record_every"] = c.record_every;
  out["certificates"] = json::array();
  for (const CertificateRequest& req : c.certificates) out["certificates"].push_back(to_json(req));
  out["reparametrization"] = to_json(c.reparam);
  out["invariance_iters"] = c.invariance_iters;
  if (c.sweep) {
    json grid;
    grid["instances"] = json::array();
    for (const SweepCellSpec& cell : c.sweep->instances) {
      json entry = to_json(cell.instance);
      if (!cell.certificate.empty()) entry["certificate"] = cell.certificate;
      grid["instances"].push_back(entry);
    }
    grid["strategies"] = c.sweep->strategies;
    grid["seeds"] = c.sweep->seeds;
    out["sweep"] = grid;
  }
  out["outputs"] = json{{"trajectory", c.outputs.trajectory},
                        {"summary", c.outputs.summary},
                        {"report", c.outputs.report},
                        {"sweep", c.outputs.sweep}};
  return out;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  try {
    ExperimentConfig c;
    const int version = get_or<int>(j, "schema_version", kSchemaVersion);
    if (version != kSchemaVersion)
      throw ParseError("config: unsupported schema_version " + std::to_string(version));
    if (j.contains("instance")) c.instance = instance_from_json(j.at("instance"));
    c.strategy = get_or<std::string>(j, "strategy", c.strategy);
    if (j.contains("x0")) {
      const json& x0 = j.at("x0");
      if (x0.is_string()) {
        const std::string kind = x0.get<std::string>();
        if (kind == "vertex") {
          c.x0.kind = X0Policy::Kind::kVertex;
        } else if (kind == "center") {
          c.x0.kind = X0Policy::Kind::kCenter;
        } else {
          throw UsageError("x0: expected 'vertex', 'center' or an array");
        }
      } else {
        c.x0.kind = X0Policy::Kind::kGiven;
        c.x0.given = vector_from_json(x0, "x0");
      }
    }
    c.max_iters = get_or<long>(j, "max_iters", c.max_iters);
    c.gap_tol = get_or<double>(j, "gap_tol", c.gap_tol);
    c.record_every = get_or<long>(j, "record_every", c.record_every);
    if (j.contains("certificates")) {
      const json& certs = j.at("certificates");
      if (!certs.is_array()) throw ParseError("certificates: expected an array");
      for (const json& entry : certs) c.certificates.push_back(certificate_from_json(entry));
    }
    if (j.contains("reparametrization")) c.reparam = reparam_from_json(j.at("reparametrization"));
    c.invariance_iters = get_or<long>(j, "invariance_iters", c.invariance_iters);
    if (j.contains("sweep")) {
      const json& grid = j.at("sweep");
      if (!grid.is_object()) throw ParseError("sweep: expected an object");
      SweepGrid g;
      if (grid.contains("instances")) {
        if (!grid.at("instances").is_array()) throw ParseError("sweep.instances: expected an array");
        for (const json& entry : grid.at("instances"))
          g.instances.push_back({instance_from_json(entry), get_or<std::string>(entry, "certificate", "")});
      }
      g.strategies = get_or<std::vector<std::string>>(grid, "strategies", {"exact"});
      g.seeds = get_or<std::vector<std::uint64_t>>(grid, "seeds", {0});
      c.sweep = std::move(g);
    }
    if (j.contains("outputs")) {
      const json& o = j.at("outputs");
      if (!o.is_object()) throw ParseError("outputs: expected an object");
      c.outputs.trajectory = get_or<std::string>(o, "trajectory", c.outputs.trajectory);
      c.outputs.summary = get_or<std::string>(o, "summary", c.outputs.summary);
      c.outputs.report = get_or<std::string>(o, "report", c.outputs.report);
      c.outputs.sweep = get_or<std::string>(o, "sweep", c.outputs.sweep);
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError("config '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

}  // namespace condgrad::cli
