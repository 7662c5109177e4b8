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

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "condgrad/gap_kernel.hpp"

namespace condgrad {

/// theta = argmin over [0, 1] of phi(theta) = (1 - theta) gap(x, g) + D(x, s, theta).
struct ExactLineSearch {
  double tolerance = 1e-10;
};

/// Relaxed Armijo rule: accepts the first theta in 1, rho, rho^2, ... with
/// D(x, s, theta) <= (1 - c) theta gap(x, g). Requires c + rho > 1.
class Backtracking {
 public:
  explicit Backtracking(double c = 0.5, double rho = 0.8);
  double c() const { return c_; }
  double rho() const { return rho_; }

 private:
  double c_;
  double rho_;
};

/// theta_k = 2 / (k + 2).
struct OpenLoop {};

using StepsizeStrategy = std::variant<ExactLineSearch, Backtracking, OpenLoop>;

/// "exact", "backtrack:C,RHO" or "openloop".
std::string describe(const StepsizeStrategy& strategy);
/// Inverse of describe(); "backtrack" alone uses the defaults.
/// Throws UsageError on anything else.
StepsizeStrategy parse_strategy(std::string_view text);

/// phi(theta) = (1 - theta) gap(x, g) + D(x, s, theta).
double line_objective(const Problem& problem, const StepContext& ctx, double theta);

/// Golden-section minimization of a unimodal function on [0, 1]; the result
/// is compared against both endpoints.
double golden_section_minimize(const std::function<double(double)>& fn, double tolerance,
                               int max_iterations = 80);

/// Exact line search. Uses the problem's closed-form line minimizer when present,
/// golden-section search on phi otherwise. Throws UsageError when tolerance <= 0.
double exact_linesearch(const Problem& problem, const StepContext& ctx, double tolerance);

struct BacktrackingStep {
  double theta = 1.0;
  /// Smallest rejected trial (1 when the first trial passed). Since D(.)/theta
  /// is nondecreasing, the maximal admissible step lies in [theta, theta_hat_upper]
  /// and theta >= rho * theta_hat_upper.
  double theta_hat_upper = 1.0;
  int trials = 1;
};

/// Returns std::nullopt when gap(x, g) <= 0 (the point is optimal; the caller
/// should stop). Throws UsageError on invalid (c, rho), StepResolutionError
/// when (1 - c) theta gap falls below kArmijoResolution * (1 + |primal|)
/// before a trial passes, and OracleError when the scan drops below 1e-16.
inline constexpr double kArmijoResolution = 1e-14;

std::optional<BacktrackingStep> backtracking_step(const Problem& problem, const StepContext& ctx,
                                                  double c, double rho);

/// 2 / (k + 2). Throws UsageError for k < 0.
double open_loop_step(long k);

/// Dispatches on the strategy. Returns 0 when backtracking reports a zero gap.
double choose_step(const Problem& problem, const StepContext& ctx,
                   const StepsizeStrategy& strategy, long k);

}  // namespace condgrad
