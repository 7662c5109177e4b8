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

#include "condgrad/stepsize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

namespace condgrad {
namespace {

void check_backtracking(double c, double rho) {
  if (!(c > 0.0 && c < 1.0)) throw UsageError("backtracking: c must lie in (0, 1)");
  if (!(rho > 0.0 && rho < 1.0)) throw UsageError("backtracking: rho must lie in (0, 1)");
  if (!(c + rho > 1.0)) throw UsageError("backtracking: requires c + rho > 1");
}

double parse_double(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("strategy: cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw UsageError("strategy: cannot parse number '" + s + "'");
  return v;
}

}  // namespace

Backtracking::Backtracking(double c, double rho) : c_(c), rho_(rho) { check_backtracking(c, rho); }

std::string describe(const StepsizeStrategy& strategy) {
  struct Visitor {
    std::string operator()(const ExactLineSearch&) const { return "exact"; }
    std::string operator()(const Backtracking& b) const {
      return fmt::format("backtrack:{},{}", b.c(), b.rho());
    }
    std::string operator()(const OpenLoop&) const { return "openloop"; }
  };
  return std::visit(Visitor{}, strategy);
}

StepsizeStrategy parse_strategy(std::string_view text) {
  if (text == "exact") return ExactLineSearch{};
  if (text == "openloop") return OpenLoop{};
  if (text == "backtrack") return Backtracking{};
  constexpr std::string_view prefix = "backtrack:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view rest = text.substr(prefix.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw UsageError("strategy: expected backtrack:C,RHO, got '" + std::string(text) + "'");
    return Backtracking(parse_double(rest.substr(0, comma)), parse_double(rest.substr(comma + 1)));
  }
  throw UsageError("unknown strategy '" + std::string(text) + "'");
}

double line_objective(const Problem& problem, const StepContext& ctx, double theta) {
  return (1.0 - theta) * ctx.wolfe_gap + curve_gap(problem, ctx.x, ctx.g, ctx.s, theta);
}

double golden_section_minimize(const std::function<double(double)>& fn, double tolerance,
                               int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int it = 0; it < max_iterations && (b - a) > tolerance; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  double best = 0.5 * (a + b);
  double f_best = fn(best);
  for (double endpoint : {0.0, 1.0}) {
    const double fe = fn(endpoint);
    if (fe <= f_best) {
      best = endpoint;
      f_best = fe;
    }
  }
  return best;
}

namespace {

// On a set, phi'(theta) = <grad f(x + theta d), d> is nondecreasing. Locating
// its sign change stays accurate where phi itself is flat to roundoff.
double derivative_bisection(const Problem& problem, const StepContext& ctx, double tolerance) {
  const Vector d = ctx.s - ctx.x;
  const auto slope = [&](double theta) { return problem.f.gradient(step_point(ctx.x, ctx.s, theta)).dot(d); };
  if (slope(1.0) <= 0.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double exact_linesearch(const Problem& problem, const StepContext& ctx, double tolerance) {
  if (!(tolerance > 0.0)) throw UsageError("exact_linesearch: tolerance must be positive");
  if (problem.line_minimizer) {
    const double t = problem.line_minimizer(ctx.x, ctx.s - ctx.x);
    return std::clamp(t, 0.0, 1.0);
  }
  if (problem.psi.is_indicator) return derivative_bisection(problem, ctx, tolerance);
  return golden_section_minimize(
      [&](double theta) { return line_objective(problem, ctx, theta); }, tolerance);
}

std::optional<BacktrackingStep> backtracking_step(const Problem& problem, const StepContext& ctx,
                                                  double c, double rho) {
  check_backtracking(c, rho);
  if (!(ctx.wolfe_gap > 0.0)) return std::nullopt;
  BacktrackingStep step;
  double theta = 1.0;
  while (curve_gap(problem, ctx.x, ctx.g, ctx.s, theta) > (1.0 - c) * theta * ctx.wolfe_gap) {
    step.theta_hat_upper = theta;
    theta *= rho;
    ++step.trials;
    if ((1.0 - c) * theta * ctx.wolfe_gap < kArmijoResolution * (1.0 + std::abs(ctx.primal_at_x))) {
      throw StepResolutionError("backtracking: Armijo test below roundoff resolution (gap " +
                                fmt::format("{:.3e}", ctx.wolfe_gap) + ")");
    }
    if (theta < 1e-16) {
      throw OracleError("backtracking: no admissible step above 1e-16 (gap " +
                        fmt::format("{:.3e}", ctx.wolfe_gap) + ")");
    }
  }
  step.theta = theta;
  return step;
}

double open_loop_step(long k) {
  if (k < 0) throw UsageError("open_loop_step: k must be >= 0");
  return 2.0 / (static_cast<double>(k) + 2.0);
}

double choose_step(const Problem& problem, const StepContext& ctx,
                   const StepsizeStrategy& strategy, long k) {
  struct Visitor {
    const Problem& problem;
    const StepContext& ctx;
    long k;
    double operator()(const ExactLineSearch& e) const {
      return exact_linesearch(problem, ctx, e.tolerance);
    }
    double operator()(const Backtracking& b) const {
      const auto step = backtracking_step(problem, ctx, b.c(), b.rho());
      return step ? step->theta : 0.0;
    }
    double operator()(const OpenLoop&) const { return open_loop_step(k); }
  };
  return std::visit(Visitor{problem, ctx, k}, strategy);
}

}  // namespace condgrad
