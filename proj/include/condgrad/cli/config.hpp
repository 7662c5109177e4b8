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

// JSON experiment configuration.
//
//   {
//     "schema_version": 1,
//     "instance": {"constructor": "quadratic_over_simplex", "params": {"n": 50}, "seed": 7},
//     "strategy": "exact",
//     "x0": "vertex",
//     "max_iters": 2000,
//     "gap_tol": 0,
//     "certificates": [{"case": "bounded-domain"}],
//     "outputs": {"trajectory": "trajectory.csv", "summary": "summary.json"}
//   }
//
// Constructors and their params:
//   quadratic_over_simplex       n | Q (rows), c
//   quadratic_over_lp_ball       n, p, r, and one of c (array), c_norm (seeded
//                                direction) or c_axis (multiple of e_1)
//   smooth_plus_strongly_convex  mu, and n (seeded c) or c
//   holder_objective_over_set    n, nu, set {"kind": "simplex" | "lp_ball", p, r}, c
//   error_bound_instance         n | center
//   local_scaling_instance       n

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "condgrad/analysis.hpp"
#include "condgrad/invariance.hpp"

namespace condgrad::cli {

inline constexpr int kSchemaVersion = 1;

struct InstanceSpec {
  std::string constructor;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
};

/// Throws UsageError for unknown constructors or invalid parameter values and
/// ParseError for parameters of the wrong JSON type.
Problem build_instance(const InstanceSpec& spec);

/// vertex: lmo(-e_1). center: mean of lmo(-e_i) over i. given: the vector.
struct X0Policy {
  enum class Kind { kVertex, kCenter, kGiven };
  Kind kind = Kind::kVertex;
  Vector given;
};

Vector initial_point(const Problem& problem, const X0Policy& policy);

struct CertificateRequest {
  enum class Source { kCase, kEmpirical, kExplicit };
  Source source = Source::kCase;
  std::string case_id;
  /// Empirical and explicit requests.
  GrowthKind kind = GrowthKind::kGrowth;
  double q = 2.0;
  double r = 0.0;
  std::optional<double> epsilon;
  /// Explicit requests.
  double M = 1.0;
  /// Empirical requests.
  int samples = 2000;
  int theta_grid = 50;
  std::uint64_t sample_seed = 1;
  CertificateTarget target = CertificateTarget::kGap;
};

struct ReparamSpec {
  enum class Kind { kRandom, kIdentity, kExplicit };
  Kind kind = Kind::kRandom;
  double condition = 10.0;
  std::uint64_t seed = 0;
  Matrix A;
  Vector b;
};

Reparametrization build_reparametrization(const ReparamSpec& spec, Index n);

struct SweepCellSpec {
  InstanceSpec instance;
  /// Case id to certify; the first applicable case when empty.
  std::string certificate;
};

struct SweepGrid {
  std::vector<SweepCellSpec> instances;
  std::vector<std::string> strategies;
  std::vector<std::uint64_t> seeds;
};

struct OutputPaths {
  std::string trajectory = "trajectory.csv";
  std::string summary = "summary.json";
  std::string report = "report.json";
  std::string sweep = "sweep.csv";
};

struct ExperimentConfig {
  InstanceSpec instance;
  std::string strategy = "exact";
  X0Policy x0;
  long max_iters = 1000;
  double gap_tol = 0.0;
  long record_every = 1;
  std::vector<CertificateRequest> certificates;
  ReparamSpec reparam;
  long invariance_iters = 200;
  std::optional<SweepGrid> sweep;
  OutputPaths outputs;
};

nlohmann::json to_json(const ExperimentConfig& config);
/// Throws ParseError on structural problems; fields not present keep defaults.
ExperimentConfig config_from_json(const nlohmann::json& j);
/// Reads and parses a config file. Throws ParseError when it cannot.
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const InstanceSpec& spec);
InstanceSpec instance_from_json(const nlohmann::json& j);

}  // namespace condgrad::cli
