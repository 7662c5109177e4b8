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

// The conditional gradient loop.
//
//   s_k     in argmin_y { <grad f(x_k), y> + psi(y) }
//   x_{k+1} = (1 - theta_k) x_k + theta_k s_k
//
// Each iterate records the Wolfe gap at x_k and the best duality gap
//   gap_k = min_{i <= k} gap(x_k, g_i) = primal(x_k) + min_{i <= k} dual_value_i,
// i.e. the fixed primal point x_k paired with the best dual point seen so far.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condgrad/stepsize.hpp"

namespace condgrad {

enum class StopReason { kGapTolerance, kMaxIterations, kZeroGap };

std::string to_string(StopReason reason);
/// Throws UsageError for unknown names.
StopReason parse_stop_reason(const std::string& text);

/// Wolfe gaps at or below kZeroGapRelative * (1 + |primal|) stop the run, as
/// does a backtracking scan that raises StepResolutionError.
inline constexpr double kZeroGapRelative = 1e-14;

struct IterateRecord {
  long k = 0;
  /// Empty when iterates are not stored (or the record was read from CSV).
  Vector x;
  Vector s;
  /// Step taken from x_k; empty on the terminal record.
  std::optional<double> theta;
  double wolfe_gap = 0.0;
  double dual_value = 0.0;
  double best_gap = 0.0;
  double primal = 0.0;
  std::optional<double> subopt;
};

struct Trajectory {
  std::vector<IterateRecord> records;
  std::string problem;
  StepsizeStrategy strategy = ExactLineSearch{};
  StopReason stop_reason = StopReason::kMaxIterations;
  double wall_seconds = 0.0;
};

struct RunOptions {
  long max_iters = 1000;
  double gap_tol = 0.0;
  /// Keep every m-th record (the terminal record is always kept).
  long record_every = 1;
  bool store_iterates = true;
};

/// Runs the method from x0. Throws UsageError when x0 is outside dom(psi) or
/// options are invalid; oracle inconsistencies surface as OracleError.
Trajectory run(const Problem& problem, const StepsizeStrategy& strategy, const Vector& x0,
               const RunOptions& options);
Trajectory run(const Problem& problem, const StepsizeStrategy& strategy, const Vector& x0,
               long max_iters, double gap_tol);

struct BestGapUpdate {
  double best_gap = 0.0;
  double running_min_dual = 0.0;
};

/// primal + min(running_min_dual, new_dual), with the minimum carried forward.
/// Pass +inf as running_min_dual on the first iteration.
BestGapUpdate best_gap_update(double running_min_dual, double new_dual, double primal_at_xk);

/// primal_k - optimal_value per record. Throws UsageError when optimal_value
/// exceeds a recorded primal by more than 1e-9.
std::vector<double> suboptimality_series(const Trajectory& trajectory, double optimal_value);

/// The best_gap column.
std::vector<double> best_gap_series(const Trajectory& trajectory);

}  // namespace condgrad
