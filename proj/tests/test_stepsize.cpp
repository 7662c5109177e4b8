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

#include <cmath>
#include <variant>

#include <gtest/gtest.h>

#include "condgrad/stepsize.hpp"
#include "support.hpp"

namespace condgrad {
namespace {

using testing::simplex_toy;
using testing::strongly_convex_toy;
using testing::unit_ball_toy;
using testing::vec;

Problem without_line_minimizer(Problem p) {
  p.line_minimizer = nullptr;
  return p;
}

// Golden section compares function values, so a flat minimum is located only
// to about sqrt(machine epsilon).
TEST(ExactLineSearch, Examples) {
  for (bool closed_form : {true, false}) {
    SCOPED_TRACE(closed_form ? "closed form" : "golden section");
    auto prep = [&](Problem p) { return closed_form ? p : without_line_minimizer(std::move(p)); };
    const double tol = closed_form ? 1e-10 : 1e-7;
    const Problem ball = prep(unit_ball_toy());
    EXPECT_NEAR(exact_linesearch(ball, make_step_context(ball, vec({1.0, 0.0})), 1e-10), 0.5, tol);
    const Problem simplex = prep(simplex_toy());
    EXPECT_NEAR(exact_linesearch(simplex, make_step_context(simplex, vec({0.0, 0.0, 1.0})), 1e-10), 1.0,
                tol);
    const Problem sc = prep(strongly_convex_toy());
    EXPECT_NEAR(exact_linesearch(sc, make_step_context(sc, vec({0.0, 0.0})), 1e-10), 0.5, tol);
  }
}

TEST(ExactLineSearch, NonpositiveToleranceIsUsageError) {
  const Problem ball = unit_ball_toy();
  const StepContext ctx = make_step_context(ball, vec({1.0, 0.0}));
  EXPECT_THROW(exact_linesearch(ball, ctx, 0.0), UsageError);
  EXPECT_THROW(exact_linesearch(ball, ctx, -1.0), UsageError);
}

TEST(GoldenSection, FindsInteriorAndEndpointMinima) {
  EXPECT_NEAR(golden_section_minimize([](double t) { return (t - 0.3) * (t - 0.3); }, 1e-10), 0.3, 1e-8);
  EXPECT_DOUBLE_EQ(golden_section_minimize([](double t) { return -t; }, 1e-10), 1.0);
  EXPECT_DOUBLE_EQ(golden_section_minimize([](double t) { return t; }, 1e-10), 0.0);
}

TEST(Backtracking, RejectsInvalidParameters) {
  EXPECT_THROW(Backtracking(0.2, 0.5), UsageError);
  EXPECT_THROW(Backtracking(0.0, 0.9), UsageError);
  EXPECT_THROW(Backtracking(0.5, 1.0), UsageError);
  EXPECT_NO_THROW(Backtracking(0.5, 0.8));
}

TEST(Backtracking, UnitBallTrace) {
  const Problem ball = unit_ball_toy();
  const auto step = backtracking_step(ball, make_step_context(ball, vec({1.0, 0.0})), 0.5, 0.8);
  ASSERT_TRUE(step);
  EXPECT_NEAR(step->theta, 0.4096, 1e-15);
  EXPECT_EQ(step->trials, 5);
  EXPECT_NEAR(step->theta_hat_upper, 0.512, 1e-15);
  EXPECT_GE(step->theta, 0.8 * 0.5);
  EXPECT_LE(step->theta, 0.5);
}

TEST(Backtracking, StronglyConvexTrace) {
  const Problem sc = strongly_convex_toy();
  const auto step = backtracking_step(sc, make_step_context(sc, vec({0.0, 0.0})), 0.5, 0.8);
  ASSERT_TRUE(step);
  EXPECT_NEAR(step->theta, 0.64, 1e-15);
  EXPECT_GE(step->theta, 0.6);
  EXPECT_LE(step->theta, 0.75);
}

TEST(Backtracking, FirstTrialAccepted) {
  const Problem simplex = simplex_toy();
  const auto step = backtracking_step(simplex, make_step_context(simplex, vec({0.0, 0.0, 1.0})), 0.5, 0.8);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->theta, 1.0);
  EXPECT_EQ(step->trials, 1);
  EXPECT_EQ(step->theta_hat_upper, 1.0);
}

TEST(Backtracking, ZeroGapSignalsConvergence) {
  const Problem ball = unit_ball_toy();
  EXPECT_FALSE(backtracking_step(ball, make_step_context(ball, Vector::Zero(2)), 0.5, 0.8));
}

TEST(Backtracking, NonTerminatingScanIsOracleError) {
  Problem bad = unit_ball_toy();
  // A smooth part whose value jumps up off x makes every trial fail.
  const auto base = bad.f.value;
  bad.f.value = [base](const Vector& x) {
    return ExtendedReal(base(x).value() + ((x - Vector::Unit(2, 0)).norm() == 0.0 ? 0.0 : 1.0));
  };
  EXPECT_THROW(backtracking_step(bad, make_step_context(bad, vec({1.0, 0.0})), 0.5, 0.8), OracleError);
}

TEST(OpenLoop, Examples) {
  EXPECT_DOUBLE_EQ(open_loop_step(0), 1.0);
  EXPECT_DOUBLE_EQ(open_loop_step(2), 0.5);
  EXPECT_DOUBLE_EQ(open_loop_step(98), 0.02);
  EXPECT_THROW(open_loop_step(-1), UsageError);
}

TEST(Strategy, DescribeParseRoundTrip) {
  for (const char* text : {"exact", "backtrack:0.5,0.8", "backtrack:0.6000000000000001,0.45", "openloop"}) {
    EXPECT_EQ(describe(parse_strategy(text)), text);
  }
  const StepsizeStrategy def = parse_strategy("backtrack");
  ASSERT_TRUE(std::holds_alternative<Backtracking>(def));
  EXPECT_EQ(std::get<Backtracking>(def).c(), 0.5);
  EXPECT_EQ(std::get<Backtracking>(def).rho(), 0.8);
  EXPECT_THROW(parse_strategy("newton"), UsageError);
  EXPECT_THROW(parse_strategy("backtrack:0.1,0.2"), UsageError);
  EXPECT_THROW(parse_strategy("backtrack:abc"), UsageError);
}

TEST(ChooseStep, Dispatches) {
  const Problem ball = unit_ball_toy();
  const StepContext ctx = make_step_context(ball, vec({1.0, 0.0}));
  EXPECT_NEAR(choose_step(ball, ctx, ExactLineSearch{}, 0), 0.5, 1e-9);
  EXPECT_NEAR(choose_step(ball, ctx, Backtracking(0.5, 0.8), 0), 0.4096, 1e-15);
  EXPECT_DOUBLE_EQ(choose_step(ball, ctx, OpenLoop{}, 3), 0.4);
}

// phi(theta - tol) >= phi(theta) <= phi(theta + tol) with golden section and
// closed forms alike.
TEST(StepsizeProperties, ExactLineSearchIsLocalMinimum) {
  for (const Problem& original : testing::builtin_problems(6, 3)) {
    for (bool closed_form : {true, false}) {
      const Problem p = closed_form ? original : without_line_minimizer(original);
      Rng rng(41);
      for (int i = 0; i < 40; ++i) {
        const StepContext ctx = make_step_context(p, sample_domain_point(p, rng));
        if (ctx.wolfe_gap <= 0.0) continue;
        const double tol = 1e-6;
        const double theta = exact_linesearch(p, ctx, 1e-10);
        ASSERT_GE(theta, 0.0);
        ASSERT_LE(theta, 1.0);
        const double phi = line_objective(p, ctx, theta);
        const double slack = 1e-12 * (1.0 + std::abs(phi));
        EXPECT_LE(phi, line_objective(p, ctx, std::max(0.0, theta - tol)) + slack) << p.name;
        EXPECT_LE(phi, line_objective(p, ctx, std::min(1.0, theta + tol)) + slack) << p.name;
        EXPECT_LE(phi, std::min(line_objective(p, ctx, 0.0), line_objective(p, ctx, 1.0)) + slack) << p.name;
      }
    }
  }
}

// The accepted step satisfies the sufficient-decrease test, and the first
// rejected trial bounds it to within a factor rho.
TEST(StepsizeProperties, BacktrackingCertificate) {
  Rng params(43);
  for (const Problem& p : testing::builtin_problems(5, 4)) {
    Rng rng(47);
    for (int i = 0; i < 40; ++i) {
      const double c = params.uniform(0.05, 0.95);
      const double rho = params.uniform(1.0 - c + 0.01, 0.99);
      const StepContext ctx = make_step_context(p, sample_domain_point(p, rng));
      const auto step = backtracking_step(p, ctx, c, rho);
      if (!step) continue;
      EXPECT_LE(curve_gap(p, ctx.x, ctx.g, ctx.s, step->theta), (1.0 - c) * step->theta * ctx.wolfe_gap)
          << p.name;
      EXPECT_GE(step->theta, rho * step->theta_hat_upper * (1.0 - 1e-15)) << p.name;
      if (step->theta_hat_upper < 1.0) {
        EXPECT_GT(curve_gap(p, ctx.x, ctx.g, ctx.s, step->theta_hat_upper),
                  (1.0 - c) * step->theta_hat_upper * ctx.wolfe_gap)
            << p.name;
      }
    }
  }
}

// The two line-search objectives agree: (1 - theta) gap + D = primal(x_theta) + dual.
TEST(StepsizeProperties, LineObjectivesAgree) {
  for (const Problem& p : testing::builtin_problems(5, 5)) {
    Rng rng(53);
    for (int i = 0; i < 100; ++i) {
      const StepContext ctx = make_step_context(p, sample_domain_point(p, rng));
      const double theta = rng.uniform();
      const double lhs = line_objective(p, ctx, theta);
      const double rhs = primal_value(p, step_point(ctx.x, ctx.s, theta)).value() + ctx.dual_value;
      EXPECT_NEAR(lhs, rhs, 1e-10 * (1.0 + std::abs(ctx.wolfe_gap))) << p.name;
    }
  }
}

}  // namespace
}  // namespace condgrad
