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

// Duality gap bookkeeping for one conditional-gradient step.
//
// For g = grad f(x) and s = lmo(g) the Fenchel duality gap between x and the
// dual point g equals the Wolfe gap <g, x - s> + psi(x) - psi(s). Because the
// gap separates as primal(x) + dual(g), the scalar
//   dual_value(g) = wolfe_gap - primal(x) = f*(g) + psi*(-g)
// is all that needs to be stored to evaluate gap(y, g) at any other y.

#pragma once

#include "condgrad/model.hpp"

namespace condgrad {

/// Roundoff slack below zero that a Wolfe gap is clamped from:
/// gaps in [-kWolfeGapSlack * (1 + |primal|), 0) become 0.
inline constexpr double kWolfeGapSlack = 1e-9;

struct StepContext {
  Vector x;
  Vector g;  // grad f(x)
  Vector s;  // lmo(g)
  double wolfe_gap = 0.0;
  double dual_value = 0.0;  // f*(g) + psi*(-g)
  double primal_at_x = 0.0;
};

/// D_f(y, x) = f(y) - f(x) - <grad f(x), y - x>. Throws DomainError when f is
/// infinite at x or y.
double bregman(const SmoothObjective& f, const Vector& y, const Vector& x);
/// Same, reusing a precomputed grad f(x).
double bregman(const SmoothObjective& f, const Vector& y, const Vector& x, const Vector& grad_x);

/// <g, x - s> + psi(x) - psi(s). Throws DomainError when x or s is outside dom(psi).
double wolfe_gap(const Problem& problem, const Vector& x, const Vector& g, const Vector& s);

/// wolfe_gap(x, g, s) - primal(x), the dual-point value f*(g) + psi*(-g).
double dual_value(const Problem& problem, const Vector& x, const Vector& g, const Vector& s);

/// Evaluates gradient, LMO, Wolfe gap and dual value at x.
///
/// Wolfe gaps within the roundoff slack below zero are clamped to 0 (and the
/// dual value adjusted so that wolfe_gap == dual_value + primal_at_x); more
/// negative gaps throw OracleError.
StepContext make_step_context(const Problem& problem, const Vector& x);

/// D(x, s, theta) = D_f(x_t, x) + psi(x_t) - (1 - theta) psi(x) - theta psi(s)
/// with x_t = (1 - theta) x + theta s. For indicator psi the psi terms are
/// zero once x and s are checked to lie in the set.
/// Throws UsageError when theta is outside [0, 1].
double curve_gap(const Problem& problem, const Vector& x, const Vector& s, double theta);
double curve_gap(const Problem& problem, const Vector& x, const Vector& g, const Vector& s,
                 double theta);

/// gap(y, g) = primal(y) + dual_value(g).
double gap_at(const Problem& problem, const Vector& y, double dual_value);

/// |gap(x_t, g) - (1 - theta) gap(x, g) - D(x, s, theta)|; zero in exact arithmetic.
double gap_reduction_residual(const Problem& problem, const StepContext& ctx, double theta);

/// (1 - theta) x + theta s.
Vector step_point(const Vector& x, const Vector& s, double theta);

}  // namespace condgrad
