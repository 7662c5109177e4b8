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

#include "condgrad/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace condgrad {

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kGapTolerance:
      return "gap-tolerance";
    case StopReason::kMaxIterations:
      return "max-iterations";
    case StopReason::kZeroGap:
      return "zero-gap";
  }
  return "max-iterations";
}

StopReason parse_stop_reason(const std::string& text) {
  if (text == "gap-tolerance") return StopReason::kGapTolerance;
  if (text == "max-iterations") return StopReason::kMaxIterations;
  if (text == "zero-gap") return StopReason::kZeroGap;
  throw UsageError("unknown stop reason '" + text + "'");
}

BestGapUpdate best_gap_update(double running_min_dual, double new_dual, double primal_at_xk) {
  const double m = std::min(running_min_dual, new_dual);
  return {primal_at_xk + m, m};
}

Trajectory run(const Problem& problem, const StepsizeStrategy& strategy, const Vector& x0,
               const RunOptions& options) {
  check_dimension(problem, x0, "run");
  if (options.max_iters < 1) throw UsageError("run: max_iters must be >= 1");
  if (!(options.gap_tol >= 0.0)) throw UsageError("run: gap_tol must be >= 0");
  if (options.record_every < 1) throw UsageError("run: record_every must be >= 1");
  if (!x0.allFinite() || !problem.psi.contains(x0) || !primal_value(problem, x0).is_finite())
    throw UsageError("run: x0 lies outside dom(psi)");

  const auto start = std::chrono::steady_clock::now();
  Trajectory traj;
  traj.problem = problem.name;
  traj.strategy = strategy;

  Vector x = x0;
  double running_min_dual = std::numeric_limits<double>::infinity();
  for (long k = 0;; ++k) {
    const StepContext ctx = make_step_context(problem, x);
    const BestGapUpdate best = best_gap_update(running_min_dual, ctx.dual_value, ctx.primal_at_x);
    running_min_dual = best.running_min_dual;

    IterateRecord rec;
    rec.k = k;
    rec.wolfe_gap = ctx.wolfe_gap;
    rec.dual_value = ctx.dual_value;
    rec.best_gap = best.best_gap;
    rec.primal = ctx.primal_at_x;
    if (problem.optimum) rec.subopt = ctx.primal_at_x - problem.optimum->value;
    if (options.store_iterates) {
      rec.x = ctx.x;
      rec.s = ctx.s;
    }

    std::optional<StopReason> stop;
    if (ctx.wolfe_gap <= kZeroGapRelative * (1.0 + std::abs(ctx.primal_at_x))) {
      stop = StopReason::kZeroGap;
    } else if (best.best_gap <= options.gap_tol) {
      stop = StopReason::kGapTolerance;
    } else if (k >= options.max_iters) {
      stop = StopReason::kMaxIterations;
    }
    if (stop) {
      traj.stop_reason = *stop;
      traj.records.push_back(std::move(rec));
      break;
    }

    double theta = 0.0;
    try {
      theta = choose_step(problem, ctx, strategy, k);
    } catch (const StepResolutionError&) {
      traj.stop_reason = StopReason::kZeroGap;
      traj.records.push_back(std::move(rec));
      break;
    }
    rec.theta = theta;
    if (k % options.record_every == 0) traj.records.push_back(std::move(rec));
    x = step_point(ctx.x, ctx.s, theta);
  }
  traj.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return traj;
}

Trajectory run(const Problem& problem, const StepsizeStrategy& strategy, const Vector& x0,
               long max_iters, double gap_tol) {
  RunOptions options;
  options.max_iters = max_iters;
  options.gap_tol = gap_tol;
  return run(problem, strategy, x0, options);
}

std::vector<double> suboptimality_series(const Trajectory& trajectory, double optimal_value) {
  std::vector<double> out;
  out.reserve(trajectory.records.size());
  for (const IterateRecord& rec : trajectory.records) {
    if (optimal_value > rec.primal + 1e-9) {
      throw UsageError("suboptimality_series: claimed optimal value exceeds primal at k=" +
                       std::to_string(rec.k));
    }
    out.push_back(rec.primal - optimal_value);
  }
  return out;
}

std::vector<double> best_gap_series(const Trajectory& trajectory) {
  std::vector<double> out;
  out.reserve(trajectory.records.size());
  for (const IterateRecord& rec : trajectory.records) out.push_back(rec.best_gap);
  return out;
}

}  // namespace condgrad
