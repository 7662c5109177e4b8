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

#include "condgrad/gap_kernel.hpp"

#include <cmath>
#include <string>

namespace condgrad {
namespace {

double finite_or_throw(const ExtendedReal& v, const char* what) {
  if (!v.is_finite()) throw DomainError(std::string(what) + ": point outside the domain");
  return v.value();
}

double psi_value(const Problem& problem, const Vector& y, const char* what) {
  if (problem.psi.is_indicator) {
    if (!problem.psi.contains(y)) throw DomainError(std::string(what) + ": point outside the set");
    return 0.0;
  }
  return finite_or_throw(problem.psi.value(y), what);
}

}  // namespace

Vector step_point(const Vector& x, const Vector& s, double theta) {
  return (1.0 - theta) * x + theta * s;
}

double bregman(const SmoothObjective& f, const Vector& y, const Vector& x, const Vector& grad_x) {
  const double fy = finite_or_throw(f.value(y), "bregman");
  const double fx = finite_or_throw(f.value(x), "bregman");
  return fy - fx - grad_x.dot(y - x);
}

double bregman(const SmoothObjective& f, const Vector& y, const Vector& x) {
  return bregman(f, y, x, f.gradient(x));
}

double wolfe_gap(const Problem& problem, const Vector& x, const Vector& g, const Vector& s) {
  check_dimension(problem, x, "wolfe_gap");
  check_dimension(problem, s, "wolfe_gap");
  const double psi_x = psi_value(problem, x, "wolfe_gap");
  const double psi_s = psi_value(problem, s, "wolfe_gap");
  return g.dot(x - s) + psi_x - psi_s;
}

double dual_value(const Problem& problem, const Vector& x, const Vector& g, const Vector& s) {
  const double gap = wolfe_gap(problem, x, g, s);
  return gap - finite_or_throw(primal_value(problem, x), "dual_value");
}

StepContext make_step_context(const Problem& problem, const Vector& x) {
  check_dimension(problem, x, "make_step_context");
  StepContext ctx;
  ctx.x = x;
  ctx.g = problem.f.gradient(x);
  if (!ctx.g.allFinite()) throw OracleError("gradient oracle returned non-finite entries");
  ctx.s = problem.psi.lmo(ctx.g);
  if (!ctx.s.allFinite()) throw OracleError("LMO returned non-finite entries");
  if (!problem.psi.contains(ctx.s)) throw OracleError("LMO output lies outside dom(psi)");
  ctx.primal_at_x = finite_or_throw(primal_value(problem, x), "make_step_context");
  double gap = wolfe_gap(problem, x, ctx.g, ctx.s);
  if (gap < 0.0) {
    if (gap < -kWolfeGapSlack * (1.0 + std::abs(ctx.primal_at_x))) {
      throw OracleError("Wolfe gap " + std::to_string(gap) +
                        " is negative beyond roundoff; LMO is not optimal");
    }
    gap = 0.0;
  }
  ctx.wolfe_gap = gap;
  ctx.dual_value = gap - ctx.primal_at_x;
  return ctx;
}

double curve_gap(const Problem& problem, const Vector& x, const Vector& g, const Vector& s,
                 double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw UsageError("curve_gap: theta must lie in [0, 1]");
  if (theta == 0.0) return 0.0;
  const Vector xt = step_point(x, s, theta);
  const double breg = bregman(problem.f, xt, x, g);
  if (problem.psi.is_indicator) {
    if (!problem.psi.contains(x) || !problem.psi.contains(s))
      throw DomainError("curve_gap: x or s outside the set");
    return breg;
  }
  const double psi_t = psi_value(problem, xt, "curve_gap");
  const double psi_x = psi_value(problem, x, "curve_gap");
  const double psi_s = psi_value(problem, s, "curve_gap");
  return breg + psi_t - (1.0 - theta) * psi_x - theta * psi_s;
}

double curve_gap(const Problem& problem, const Vector& x, const Vector& s, double theta) {
  return curve_gap(problem, x, problem.f.gradient(x), s, theta);
}

double gap_at(const Problem& problem, const Vector& y, double dual) {
  return finite_or_throw(primal_value(problem, y), "gap_at") + dual;
}

double gap_reduction_residual(const Problem& problem, const StepContext& ctx, double theta) {
  const double d = curve_gap(problem, ctx.x, ctx.g, ctx.s, theta);
  const double lhs = gap_at(problem, step_point(ctx.x, ctx.s, theta), ctx.dual_value);
  return std::abs(lhs - (1.0 - theta) * ctx.wolfe_gap - d);
}

}  // namespace condgrad
