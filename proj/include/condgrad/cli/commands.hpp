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

// Subcommands of the condgrad tool: solve, analyze, invariance, sweep.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "condgrad/cli/config.hpp"

namespace condgrad::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitOracle = 70;

/// Command-line flags layered over the config file.
struct Overrides {
  /// Instance seed for solve/analyze, the (A, b) seed for invariance and the
  /// seed list for sweep.
  std::optional<std::uint64_t> seed;
  std::optional<long> max_iters;
  std::optional<double> gap_tol;
  std::optional<std::string> strategy;
  int threads = 1;
  std::string out_dir = ".";
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

/// Output path for a configured file name: absolute paths are kept, relative
/// ones resolve against out_dir.
std::string output_path(const std::string& out_dir, const std::string& name);

/// Exit code for an exception thrown by the library.
int exit_code_for(const std::exception& e);

/// Runs the solver and writes the trajectory CSV and summary JSON.
CommandResult cmd_solve(ExperimentConfig config, const Overrides& overrides);

/// Certificate checks on a trajectory file; exit 1 when any check fails.
CommandResult cmd_analyze(ExperimentConfig config, const std::string& trajectory_path,
                          const Overrides& overrides);
/// Same on an in-memory trajectory; writes nothing.
nlohmann::json analyze_trajectory(const ExperimentConfig& config, const Trajectory& trajectory);

/// Paired original/transported run; exit 1 when invariance fails.
CommandResult cmd_invariance(ExperimentConfig config, const Overrides& overrides);

struct SweepRow {
  std::string instance;
  std::string strategy;
  std::uint64_t seed = 0;
  std::string certificate;
  double q = 0.0;
  double r = 0.0;
  double M_theoretical = 0.0;
  double M_emp = 0.0;
  double fitted_order = 0.0;
  double fitted_linear_factor = 0.0;
  bool envelope_pass = false;
  /// "ok" or "error: <message>".
  std::string status = "ok";
};

/// Cells in (instance, strategy, seed) order regardless of thread count.
/// Throws UsageError for an empty grid.
std::vector<SweepRow> sweep_rows(const ExperimentConfig& config, int threads);
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// Writes the sweep CSV; exit 1 when any cell errored or failed its envelope.
CommandResult cmd_sweep(ExperimentConfig config, const Overrides& overrides);

/// Entry point of the condgrad executable.
int run_main(int argc, char** argv);

}  // namespace condgrad::cli
