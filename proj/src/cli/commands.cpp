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

#include "condgrad/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "condgrad/cli/io.hpp"
#include "condgrad/random.hpp"

namespace condgrad::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kEnvelopeHead = 20;

void apply_run_overrides(ExperimentConfig& config, const Overrides& o) {
  if (o.max_iters) config.max_iters = *o.max_iters;
  if (o.gap_tol) config.gap_tol = *o.gap_tol;
  if (o.strategy) config.strategy = *o.strategy;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<double> target_series(const Trajectory& traj, CertificateTarget target,
                                  std::vector<double>* ks) {
  std::vector<double> out;
  for (const IterateRecord& rec : traj.records) {
    double v = 0.0;
    if (target == CertificateTarget::kGap) {
      v = rec.best_gap;
    } else if (rec.subopt) {
      v = *rec.subopt;
    } else {
      continue;
    }
    if (!(v > 0.0) || !std::isfinite(v)) continue;
    out.push_back(v);
    if (ks) ks->push_back(static_cast<double>(rec.k));
  }
  return out;
}

std::optional<RateFit> fit_series(const Trajectory& traj, CertificateTarget target) {
  std::vector<double> ks;
  const std::vector<double> series = target_series(traj, target, &ks);
  if (series.size() < 3) {
    // A run that reached an exactly zero value converged in finitely many
    // steps: linear factor 0, order undefined.
    if (series.empty() || traj.records.empty()) return std::nullopt;
    const IterateRecord& last = traj.records.back();
    const std::optional<double> v = target == CertificateTarget::kGap ? std::optional<double>(last.best_gap) : last.subopt;
    if (v && *v <= 0.0) return RateFit{std::numeric_limits<double>::quiet_NaN(), 0.0};
    return std::nullopt;
  }
  const std::size_t window = std::max<std::size_t>(3, series.size() / 2);
  return rate_fit(ks, series, window);
}

json fit_json(const std::optional<RateFit>& fit) {
  if (!fit) return nullptr;
  return json{{"order", number_or_null(fit->order)}, {"linear_factor", number_or_null(fit->linear_factor)}};
}

std::vector<Vector> empirical_samples(const Problem& problem, const Trajectory* traj, int count,
                                      std::uint64_t seed) {
  std::vector<Vector> samples = growth_samples(problem, count, seed);
  if (traj != nullptr) {
    for (const IterateRecord& rec : traj->records) {
      if (rec.x.size() == problem.dimension) samples.push_back(rec.x);
    }
  }
  return samples;
}

bool same_exponents(const GrowthCertificate& a, const GrowthCertificate& b) {
  return a.kind == b.kind && std::abs(a.q - b.q) <= 1e-12 && std::abs(a.r - b.r) <= 1e-12;
}

json certificate_json(const GrowthCertificate& cert) {
  json out{{"kind", to_string(cert.kind)}, {"q", cert.q}, {"r", cert.r}, {"M", cert.M},
           {"provenance", cert.provenance}};
  if (cert.epsilon) out["epsilon"] = *cert.epsilon;
  return out;
}

GrowthCertificate resolve_certificate(const CertificateRequest& req, const Problem& problem,
                                      const Trajectory* traj) {
  switch (req.source) {
    case CertificateRequest::Source::kCase:
      return theoretical_growth_constant(instance_metadata(problem), req.case_id);
    case CertificateRequest::Source::kExplicit: {
      GrowthCertificate cert{req.kind, req.q, req.r, req.M, req.epsilon, "explicit"};
      validate(cert);
      return cert;
    }
    case CertificateRequest::Source::kEmpirical:
      break;
  }
  return empirical_growth_constant(problem, req.kind, req.q, req.r,
                                   empirical_samples(problem, traj, req.samples, req.sample_seed),
                                   req.theta_grid, req.epsilon);
}

/// Cases in the order sweeps pick a default certificate: fastest rate first.
const std::vector<std::string>& preferred_cases() {
  static const std::vector<std::string> order = {
      "strongly-convex-psi",  "strongly-convex-set", "uniformly-convex-psi", "uniformly-convex-set",
      "error-bound",          "bounded-domain",      "local-scaling"};
  return order;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

SweepRow run_cell(const ExperimentConfig& config, const SweepCellSpec& cell, const std::string& strategy_text,
                  std::uint64_t seed) {
  SweepRow row;
  row.instance = cell.instance.constructor;
  row.strategy = strategy_text;
  row.seed = seed;
  try {
    InstanceSpec spec = cell.instance;
    spec.seed = seed;
    const Problem problem = build_instance(spec);
    row.instance = problem.name;
    const StepsizeStrategy strategy = parse_strategy(strategy_text);
    RunOptions options;
    options.max_iters = config.max_iters;
    options.gap_tol = config.gap_tol;
    const Trajectory traj = run(problem, strategy, initial_point(problem, config.x0), options);

    const InstanceMetadata meta = instance_metadata(problem);
    std::optional<GrowthCertificate> cert;
    if (!cell.certificate.empty()) {
      cert = theoretical_growth_constant(meta, cell.certificate);
      row.certificate = cell.certificate;
    } else {
      for (const std::string& id : preferred_cases()) {
        try {
          cert = theoretical_growth_constant(meta, id);
          row.certificate = id;
          break;
        } catch (const UsageError&) {
        }
      }
    }
    if (!cert) throw UsageError("no theoretical certificate applies");
    row.q = cert->q;
    row.r = cert->r;
    row.M_theoretical = cert->M;

    const CertificateTarget target =
        cert->kind == GrowthKind::kWeakGrowth ? CertificateTarget::kSubopt : CertificateTarget::kGap;
    try {
      row.M_emp = empirical_growth_constant(problem, cert->kind, cert->q, cert->r,
                                            empirical_samples(problem, &traj, 200, seed), 20, cert->epsilon)
                      .M;
    } catch (const DegenerateInputError&) {
      row.M_emp = std::numeric_limits<double>::quiet_NaN();
    }
    const auto fit = fit_series(traj, target);
    row.fitted_order = fit ? fit->order : std::numeric_limits<double>::quiet_NaN();
    row.fitted_linear_factor = fit ? fit->linear_factor : std::numeric_limits<double>::quiet_NaN();
    row.envelope_pass = check_certificate(traj, *cert, target).passed;
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

}  // namespace

std::string output_path(const std::string& out_dir, const std::string& name) {
  const std::filesystem::path p(name);
  if (p.is_absolute()) return name;
  return (std::filesystem::path(out_dir) / p).string();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return kExitParse;
  if (dynamic_cast<const UsageError*>(&e) != nullptr) return kExitUsage;
  return kExitOracle;
}

CommandResult cmd_solve(ExperimentConfig config, const Overrides& overrides) {
  apply_run_overrides(config, overrides);
  if (overrides.seed) config.instance.seed = *overrides.seed;
  const Problem problem = build_instance(config.instance);
  const StepsizeStrategy strategy = parse_strategy(config.strategy);
  RunOptions options;
  options.max_iters = config.max_iters;
  options.gap_tol = config.gap_tol;
  options.record_every = config.record_every;
  options.store_iterates = false;
  const Trajectory traj = run(problem, strategy, initial_point(problem, config.x0), options);

  std::ostringstream csv;
  write_trajectory_csv(csv, traj);
  write_text_file(output_path(overrides.out_dir, config.outputs.trajectory), csv.str());
  CommandResult result;
  result.report = summary_json(traj);
  result.report["command"] = "solve";
  result.report["instance"] = to_json(config.instance);
  result.report["rng"] = Rng::kName;
  write_json_file(output_path(overrides.out_dir, config.outputs.summary), result.report);
  return result;
}

json analyze_trajectory(const ExperimentConfig& config, const Trajectory& trajectory) {
  const Problem problem = build_instance(config.instance);
  std::vector<CertificateRequest> requests = config.certificates;
  if (requests.empty()) {
    for (const GrowthCertificate& cert : applicable_certificates(instance_metadata(problem))) {
      CertificateRequest req;
      req.case_id = cert.provenance.substr(std::string("theoretical(").size());
      req.case_id.pop_back();
      if (cert.kind == GrowthKind::kWeakGrowth) req.target = CertificateTarget::kSubopt;
      requests.push_back(req);
    }
  }
  const std::vector<GrowthCertificate> theoretical = applicable_certificates(instance_metadata(problem));

  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "analyze";
  out["problem"] = problem.name;
  out["strategy"] = describe(trajectory.strategy);
  out["records"] = trajectory.records.size();
  out["certificates"] = json::array();
  bool all_passed = true;
  for (const CertificateRequest& req : requests) {
    json entry;
    entry["target"] = req.target == CertificateTarget::kGap ? "gap" : "subopt";
    try {
      const GrowthCertificate cert = resolve_certificate(req, problem, &trajectory);
      entry["certificate"] = certificate_json(cert);
      if (req.source == CertificateRequest::Source::kEmpirical) {
        json matches = json::array();
        for (const GrowthCertificate& t : theoretical) {
          if (same_exponents(t, cert)) matches.push_back(certificate_json(t));
        }
        entry["theoretical"] = matches;
      }
      const CertificateReport report = check_certificate(trajectory, cert, req.target);
      const auto& bounds = report.envelope.bounds;
      json head = json::array();
      for (std::size_t i = 0; i < std::min(bounds.size(), kEnvelopeHead); ++i) head.push_back(bounds[i]);
      entry["envelope_head"] = head;
      entry["envelope_source"] = report.envelope.source;
      entry["k0"] = report.envelope.k0;
      entry["max_closed_form_excess"] = number_or_null(report.envelope.max_closed_form_excess);
      entry["start_index"] = report.start_index;
      entry["passed"] = report.passed;
      entry["first_failing_k"] = report.first_failing_k ? json(*report.first_failing_k) : json(nullptr);
      entry["note"] = report.note;
      entry["rate_fit"] = fit_json(fit_series(trajectory, req.target));
      all_passed = all_passed && report.passed;
    } catch (const Error& e) {
      entry["passed"] = false;
      entry["error"] = e.what();
      all_passed = false;
    }
    out["certificates"].push_back(entry);
  }
  out["passed"] = all_passed;
  return out;
}

CommandResult cmd_analyze(ExperimentConfig config, const std::string& trajectory_path, const Overrides& overrides) {
  if (overrides.seed) config.instance.seed = *overrides.seed;
  Trajectory traj = read_trajectory_csv_file(trajectory_path);
  if (overrides.strategy) traj.strategy = parse_strategy(*overrides.strategy);
  CommandResult result;
  result.report = analyze_trajectory(config, traj);
  result.report["trajectory"] = trajectory_path;
  write_json_file(output_path(overrides.out_dir, config.outputs.report), result.report);
  result.exit_code = result.report["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
  return result;
}

CommandResult cmd_invariance(ExperimentConfig config, const Overrides& overrides) {
  apply_run_overrides(config, overrides);
  if (overrides.seed) config.reparam.seed = *overrides.seed;
  const Problem problem = build_instance(config.instance);
  const StepsizeStrategy strategy = parse_strategy(config.strategy);
  const Reparametrization rep = build_reparametrization(config.reparam, problem.dimension);
  const long iters = overrides.max_iters ? *overrides.max_iters : config.invariance_iters;
  const InvarianceReport report = paired_run(problem, rep, strategy, initial_point(problem, config.x0), iters);
  const CurveInvarianceCheck curve = check_curve_invariance(problem, rep, 100, config.reparam.seed);

  json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "invariance";
  out["problem"] = problem.name;
  out["strategy"] = describe(strategy);
  out["condition"] = report.condition;
  out["condition_limited"] = report.condition_limited;
  out["tolerance_scale"] = report.tolerance_scale;
  out["thresholds"] = json{{"gap", kInvarianceGapTolerance * report.tolerance_scale},
                           {"theta", kInvarianceThetaTolerance * report.tolerance_scale},
                           {"iterate", kInvarianceIterateTolerance * report.condition}};
  out["compared"] = report.compared;
  out["max_gap_deviation"] = report.max_gap_deviation;
  out["max_best_gap_deviation"] = report.max_best_gap_deviation;
  out["max_theta_deviation"] = report.max_theta_deviation;
  out["max_iterate_deviation"] = report.max_iterate_deviation;
  out["gap_deviation"] = report.gap_deviation;
  out["best_gap_deviation"] = report.best_gap_deviation;
  out["theta_deviation"] = report.theta_deviation;
  out["theta_threshold"] = report.theta_threshold;
  out["theta_resolution_limited"] = report.theta_resolution_limited;
  out["theta_flat_limited"] = report.theta_flat_limited;
  out["noise_floor_limited"] = report.noise_floor_limited;
  out["iterate_deviation"] = report.iterate_deviation;
  out["curve_check"] = json{{"samples", curve.samples}, {"max_deviation", curve.max_deviation},
                            {"passed", curve.passed}};
  out["note"] = report.note;
  out["passed"] = report.passed && curve.passed;

  CommandResult result;
  result.report = out;
  result.exit_code = out["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
  write_json_file(output_path(overrides.out_dir, config.outputs.report), out);
  return result;
}

std::vector<SweepRow> sweep_rows(const ExperimentConfig& config, int threads) {
  if (!config.sweep || config.sweep->instances.empty() || config.sweep->strategies.empty() ||
      config.sweep->seeds.empty())
    throw UsageError("sweep: the grid is empty");
  const SweepGrid& grid = *config.sweep;
  struct Cell {
    const SweepCellSpec* spec;
    const std::string* strategy;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (const SweepCellSpec& spec : grid.instances)
    for (const std::string& strategy : grid.strategies)
      for (std::uint64_t seed : grid.seeds) cells.push_back({&spec, &strategy, seed});

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++)
      rows[i] = run_cell(config, *cells[i].spec, *cells[i].strategy, cells[i].seed);
  };
  const int n_threads = std::clamp(threads, 1, static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# schema_version: " << kSchemaVersion << "\n";
  out << "instance,strategy,seed,certificate,q,r,M_theoretical,M_emp,fitted_order,fitted_linear_factor,"
         "envelope_pass,status\n";
  for (const SweepRow& row : rows) {
    out << csv_quote(row.instance) << ',' << csv_quote(row.strategy) << ',' << row.seed << ','
        << row.certificate << ',' << format_double(row.q) << ',' << format_double(row.r) << ','
        << format_double(row.M_theoretical) << ',' << format_double(row.M_emp) << ','
        << format_double(row.fitted_order) << ',' << format_double(row.fitted_linear_factor) << ','
        << (row.envelope_pass ? "pass" : "fail") << ',' << csv_quote(row.status) << "\n";
  }
  return out.str();
}

CommandResult cmd_sweep(ExperimentConfig config, const Overrides& overrides) {
  apply_run_overrides(config, overrides);
  if (overrides.seed && config.sweep) config.sweep->seeds = {*overrides.seed};
  const std::vector<SweepRow> rows = sweep_rows(config, overrides.threads);
  write_text_file(output_path(overrides.out_dir, config.outputs.sweep), sweep_csv(rows));
  CommandResult result;
  result.report = json{{"schema_version", kSchemaVersion}, {"command", "sweep"}, {"cells", rows.size()}};
  std::size_t failures = 0;
  for (const SweepRow& row : rows) failures += (row.status != "ok" || !row.envelope_pass) ? 1 : 0;
  result.report["failed_cells"] = failures;
  result.exit_code = failures == 0 ? kExitOk : kExitCheckFailed;
  return result;
}

int run_main(int argc, char** argv) {
  CLI::App app{"Conditional gradient experiments: solve, analyze, invariance, sweep"};
  app.require_subcommand(1);

  std::string config_path;
  std::string trajectory_path;
  Overrides overrides;
  std::uint64_t seed = 0;
  long max_iters = 0;
  double gap_tol = 0.0;
  std::string strategy;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Experiment config (JSON)")->required();
    sub->add_option("--out", overrides.out_dir, "Output directory");
    sub->add_option("--seed", seed, "Seed override");
    sub->add_option("--max-iters", max_iters, "Iteration limit override")->check(CLI::PositiveNumber);
    sub->add_option("--gap-tol", gap_tol, "Best-gap tolerance override")->check(CLI::NonNegativeNumber);
    sub->add_option("--strategy", strategy, "exact | backtrack:C,RHO | openloop");
    sub->add_option("--threads", overrides.threads, "Worker threads (sweep)")->check(CLI::PositiveNumber);
  };
  CLI::App* solve = app.add_subcommand("solve", "Run the solver and write a trajectory");
  CLI::App* analyze = app.add_subcommand("analyze", "Check certificates against a trajectory");
  CLI::App* invariance = app.add_subcommand("invariance", "Paired run under an affine reparametrization");
  CLI::App* sweep = app.add_subcommand("sweep", "Run a grid of cells");
  for (CLI::App* sub : {solve, analyze, invariance, sweep}) add_common(sub);
  analyze->add_option("--trajectory", trajectory_path, "Trajectory CSV from solve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
  CLI::App* active = app.get_subcommands().front();
  if (given(active, "--seed")) overrides.seed = seed;
  if (given(active, "--max-iters")) overrides.max_iters = max_iters;
  if (given(active, "--gap-tol")) overrides.gap_tol = gap_tol;
  if (given(active, "--strategy")) overrides.strategy = strategy;

  try {
    const ExperimentConfig config = load_config(config_path);
    CommandResult result;
    if (active == solve) {
      result = cmd_solve(config, overrides);
      std::cout << fmt::format("solve: {} after {} iterations, best_gap {}\n",
                               result.report["stop_reason"].get<std::string>(),
                               result.report["iterations"].get<long>(),
                               format_double(result.report["final_best_gap"].get<double>()));
    } else if (active == analyze) {
      result = cmd_analyze(config, trajectory_path, overrides);
      std::cout << fmt::format("analyze: {}\n", result.exit_code == kExitOk ? "all certificates pass"
                                                                             : "certificate check failed");
    } else if (active == invariance) {
      result = cmd_invariance(config, overrides);
      std::cout << fmt::format("invariance: {} (condition {:.4g})\n", result.exit_code == kExitOk ? "pass" : "fail",
                               result.report["condition"].get<double>());
    } else {
      result = cmd_sweep(config, overrides);
      std::cout << fmt::format("sweep: {} cells, {} failed\n", result.report["cells"].get<std::size_t>(),
                               result.report["failed_cells"].get<std::size_t>());
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "condgrad: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace condgrad::cli
