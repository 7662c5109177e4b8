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

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "condgrad/gap_kernel.hpp"
#include "condgrad/problems.hpp"
#include "support.hpp"

namespace condgrad {
namespace {

using testing::unit;
using testing::vec;

TEST(SimplexLmo, ArgminAndTieBreak) {
  const SetDescriptor s = SimplexSet{3};
  EXPECT_EQ(set_lmo(s, vec({0.5, -1.0, 2.0})), unit(3, 1));
  EXPECT_EQ(set_lmo(s, vec({0.0, 0.0, 1.0})), unit(3, 0));
  EXPECT_THROW(set_lmo(s, vec({1.0, 2.0})), UsageError);
}

TEST(QuadraticOverSimplex, ExplicitOptimum) {
  const Problem p = quadratic_over_simplex(Matrix::Identity(3, 3), -unit(3, 0));
  const StepContext ctx = make_step_context(p, unit(3, 0));
  EXPECT_NEAR(ctx.primal_at_x, -0.5, 1e-15);
  EXPECT_NEAR(ctx.wolfe_gap, 0.0, 1e-15);
}

TEST(QuadraticOverSimplex, Metadata) {
  const Problem p = quadratic_over_simplex(12, 4);
  const InstanceMetadata meta = instance_metadata(p);
  ASSERT_TRUE(meta.smoothness);
  EXPECT_EQ(meta.smoothness->q, 2.0);
  EXPECT_NEAR(meta.smoothness->L, 1.0, 1e-12);
  EXPECT_TRUE(meta.psi_is_indicator);
  ASSERT_GE(meta.constants.diameters.size(), 2u);
  EXPECT_NEAR(meta.constants.diameters[0].value, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(meta.constants.diameters[0].norm, Norm::l2());
  EXPECT_EQ(meta.constants.diameters[1].value, 2.0);
  EXPECT_EQ(meta.constants.diameters[1].norm, Norm::l1());
  EXPECT_THROW(quadratic_over_simplex(1, 0), UsageError);
}

// Q from the seeded construction is symmetric PSD with spectrum in [0, 1].
TEST(QuadraticOverSimplex, HessianSpectrum) {
  const Problem p = quadratic_over_simplex(10, 5);
  Matrix Q(10, 10);
  const Vector g0 = p.f.gradient(Vector::Zero(10));
  for (Index j = 0; j < 10; ++j) Q.col(j) = p.f.gradient(unit(10, j)) - g0;
  EXPECT_LE((Q - Q.transpose()).norm(), 1e-12);
  const Eigen::SelfAdjointEigenSolver<Matrix> es(Q);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
  EXPECT_NEAR(es.eigenvalues().maxCoeff(), 1.0, 1e-12);
}

TEST(LpBallLmo, Examples) {
  const Vector s2 = set_lmo(LpBallSet{2, 2.0, 1.0}, vec({3.0, 4.0}));
  EXPECT_NEAR(s2(0), -0.6, 1e-15);
  EXPECT_NEAR(s2(1), -0.8, 1e-15);

  const Vector g = vec({1.0, 1.0});
  const Vector s4 = set_lmo(LpBallSet{2, 4.0, 1.0}, g);
  EXPECT_NEAR(s4(0), -std::pow(2.0, -0.25), 1e-15);
  EXPECT_NEAR(s4(1), -std::pow(2.0, -0.25), 1e-15);
  EXPECT_NEAR(g.dot(s4), -std::pow(2.0, 0.75), 1e-14);
  EXPECT_NEAR(g.dot(s4), testing::brute_ball_min(g, 4.0, 1.0), 1e-3);

  EXPECT_EQ(set_lmo(LpBallSet{3, 3.0, 2.0}, Vector::Zero(3)), -2.0 * unit(3, 0));
}

TEST(QuadraticOverLpBall, ShiftOutsideBall) {
  const Problem p = quadratic_over_lp_ball(2, 2.0, 1.0, vec({3.0, 0.0}));
  ASSERT_TRUE(p.optimum);
  EXPECT_TRUE(p.optimum->x.isApprox(vec({1.0, 0.0})));
  EXPECT_DOUBLE_EQ(p.optimum->value, 2.0);
  ASSERT_TRUE(p.constants.gradient_lower_bound);
  EXPECT_DOUBLE_EQ(p.constants.gradient_lower_bound->value, 2.0);
  const InstanceMetadata meta = instance_metadata(p);
  ASSERT_TRUE(meta.convexity);
  EXPECT_EQ(meta.convexity->p, 2.0);
  EXPECT_GE(meta.convexity->mu, 1.0);
  EXPECT_LE(meta.convexity->mu, 1.0 + 1e-5);
}

TEST(QuadraticOverLpBall, ShiftInsideOmitsGradientBound) {
  const Problem p = quadratic_over_lp_ball(3, 4.0, 1.0, vec({0.2, -0.1, 0.3}));
  EXPECT_FALSE(p.constants.gradient_lower_bound);
  ASSERT_TRUE(p.optimum);
  EXPECT_EQ(p.optimum->value, 0.0);
}

// With a generic shift the recorded ell must stay below the true distance,
// here bracketed by a long run.
TEST(QuadraticOverLpBall, GenericShiftGradientBoundIsValid) {
  const Vector c = vec({2.0, -1.5, 0.7});
  const Problem p = quadratic_over_lp_ball(3, 4.0, 1.0, c);
  ASSERT_TRUE(p.constants.gradient_lower_bound);
  const double ell = p.constants.gradient_lower_bound->value;
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Vector y = set_lmo(LpBallSet{3, 4.0, 1.0}, rng.normal_vector(3));
    EXPECT_GE((y - c).norm(), ell * (1.0 - 1e-12));
  }
  EXPECT_GT(ell, 0.5 * (c.norm() - std::pow(3.0, 0.25)));
}

TEST(QuadraticOverLpBall, PreconditionsAreUsageErrors) {
  EXPECT_THROW(quadratic_over_lp_ball(0, 2.0, 1.0, Vector()), UsageError);
  EXPECT_THROW(quadratic_over_lp_ball(2, 1.5, 1.0, Vector::Zero(2)), UsageError);
  EXPECT_THROW(quadratic_over_lp_ball(2, 2.0, 0.0, Vector::Zero(2)), UsageError);
  EXPECT_THROW(quadratic_over_lp_ball(2, 2.0, 1.0, Vector::Zero(3)), UsageError);
}

TEST(SmoothPlusStronglyConvex, Examples) {
  const Problem p = smooth_plus_strongly_convex(vec({2.0, 0.0}), 1.0);
  EXPECT_TRUE(p.psi.lmo(vec({2.0, 0.0})).isApprox(vec({-2.0, 0.0})));
  ASSERT_TRUE(p.optimum);
  EXPECT_TRUE(p.optimum->x.isApprox(vec({1.0, 0.0})));
  EXPECT_DOUBLE_EQ(p.optimum->value, 1.0);
  EXPECT_DOUBLE_EQ(p.psi.value(vec({2.0, 0.0})).value(), 2.0);
  EXPECT_THROW(smooth_plus_strongly_convex(2, 0.0, 1), UsageError);
  EXPECT_THROW(smooth_plus_strongly_convex(2, -1.0, 1), UsageError);
}

TEST(SmoothPlusStronglyConvex, OptimumSatisfiesStationarity) {
  for (double mu : {0.25, 1.0, 3.0}) {
    const Problem p = smooth_plus_strongly_convex(7, mu, 12);
    const Vector& xs = p.optimum->x;
    EXPECT_LE((p.f.gradient(xs) + mu * xs).norm(), 1e-12);
    EXPECT_NEAR(primal_value(p, xs).value(), p.optimum->value, 1e-12);
  }
}

TEST(HolderObjective, Examples) {
  const Problem p = holder_objective_over_set(2, 0.5, LpBallSet{2, 2.0, 3.0}, vec({0.0, 0.0}));
  EXPECT_NEAR(p.f.value(vec({1.0, 0.0})).value(), 2.0 / 3.0, 1e-15);
  EXPECT_TRUE(p.f.gradient(vec({1.0, 0.0})).isApprox(vec({1.0, 0.0})));
  EXPECT_EQ(p.f.gradient(vec({0.0, 0.0})), Vector::Zero(2));
  EXPECT_THROW(holder_objective_over_set(2, 0.0, SimplexSet{2}, Vector::Zero(2)), UsageError);
  EXPECT_THROW(holder_objective_over_set(2, 1.5, SimplexSet{2}, Vector::Zero(2)), UsageError);
}

TEST(HolderObjective, Metadata) {
  const Problem p = holder_objective_over_set(4, 0.5, SimplexSet{4}, random_shift(4, 0.3, 2));
  ASSERT_TRUE(p.f.smoothness);
  EXPECT_DOUBLE_EQ(p.f.smoothness->q, 1.5);
  EXPECT_GE(p.f.smoothness->L, std::pow(2.0, 0.5));
  EXPECT_NE(p.f.smoothness->source.find("holder-candidate"), std::string::npos);
  ASSERT_TRUE(p.constants.holder_nu);
  EXPECT_EQ(*p.constants.holder_nu, 0.5);
}

// nu = 1 coincides with the quadratic instance pointwise.
TEST(HolderObjective, NuOneMatchesQuadratic) {
  const Vector c = random_shift(5, 2.5, 8);
  const Problem h = holder_objective_over_set(5, 1.0, LpBallSet{5, 2.0, 1.0}, c);
  const Problem q = quadratic_over_lp_ball(5, 2.0, 1.0, c);
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Vector x = sample_domain_point(q, rng);
    EXPECT_NEAR(h.f.value(x).value(), q.f.value(x).value(), 1e-12);
    EXPECT_LE((h.f.gradient(x) - q.f.gradient(x)).norm(), 1e-12);
  }
}

TEST(ErrorBoundInstance, Examples) {
  const Problem p = error_bound_instance(2);
  const Vector x = vec({0.5, 0.0});
  const double excess = p.f.value(x).value() - p.optimum->value;
  EXPECT_DOUBLE_EQ(excess, 0.25);
  const ErrorBoundInfo& eb = *p.constants.error_bound;
  EXPECT_DOUBLE_EQ((x - p.optimum->x).norm(), eb.K * std::pow(excess, eb.gamma));
  EXPECT_EQ(p.f.value(Vector::Zero(2)).value(), 0.0);
  EXPECT_EQ(p.f.smoothness->L, 2.0);
  EXPECT_THROW(error_bound_instance(vec({2.0, 0.0})), UsageError);
}

// dist(x, X*) <= K (f - f*)^gamma on sampled points.
TEST(ErrorBoundInstance, HolderianErrorBoundHolds) {
  for (const Problem& p : {error_bound_instance(6), error_bound_instance(vec({0.3, 0.0, -0.4}))}) {
    const ErrorBoundInfo& eb = *p.constants.error_bound;
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
      const Vector x = sample_domain_point(p, rng);
      const double excess = primal_value(p, x).value() - p.optimum->value;
      EXPECT_LE((x - p.optimum->x).norm(), eb.K * std::pow(excess, eb.gamma) + 1e-12);
    }
  }
}

TEST(LocalScalingInstance, Examples) {
  const Problem p = local_scaling_instance(2);
  const Vector xs = p.optimum->x;
  EXPECT_TRUE(xs.isApprox(vec({1.0, 0.0})));
  const Vector g = p.f.gradient(xs);
  const Vector x = vec({-1.0, 0.0});
  const LocalScalingInfo& ls = *p.constants.local_scaling;
  EXPECT_DOUBLE_EQ(g.dot(x - xs), 2.0);
  EXPECT_DOUBLE_EQ(ls.sigma * std::pow((x - xs).norm(), ls.p), 2.0);
  EXPECT_EQ(g.dot(xs - xs), 0.0);
  EXPECT_EQ(*p.constants.holder_nu, 1.0);
  EXPECT_THROW(local_scaling_instance(1), UsageError);
}

TEST(LocalScalingInstance, ScalingInequalityOnSamples) {
  const Problem p = local_scaling_instance(5);
  const Vector xs = p.optimum->x;
  const Vector g = p.f.gradient(xs);
  Rng rng(6);
  for (int i = 0; i < 2000; ++i) {
    const Vector x = i % 2 ? Vector(p.psi.lmo(rng.normal_vector(5))) : sample_domain_point(p, rng);
    EXPECT_GE(g.dot(x - xs), 0.5 * (x - xs).squaredNorm() - 1e-12);
  }
}

TEST(UniformConvexity, EuclideanBallExamples) {
  const SetDescriptor ball = LpBallSet{2, 2.0, 1.0};
  EXPECT_TRUE(verify_set_uniform_convexity(ball, 2.0, 1.0, 10000, 1).holds);
  const UniformConvexityCheck fail = verify_set_uniform_convexity(ball, 2.0, 4.0, 10000, 1);
  EXPECT_FALSE(fail.holds);
  EXPECT_GT(fail.max_violation, 0.0);
  EXPECT_TRUE(verify_set_uniform_convexity(ball, 2.0, 1e-9, 1000, 1).holds);
  EXPECT_TRUE(verify_set_uniform_convexity(SimplexSet{3}, 2.0, 0.0, 1000, 1).holds);
}

// Midpoint of (1, 0) and (-1, 0) pushed by mu/2 * 4 * 1/4 = mu/2 along e_2.
TEST(UniformConvexity, HandCounterexampleAtMuFour) {
  const Vector pushed = vec({0.0, 4.0 / 2.0 * 0.25 * 4.0});
  EXPECT_GT(set_violation(LpBallSet{2, 2.0, 1.0}, pushed), 0.0);
}

TEST(UniformConvexity, SimplexIsNotUniformlyConvex) {
  EXPECT_FALSE(verify_set_uniform_convexity(SimplexSet{3}, 2.0, 0.1, 2000, 2).holds);
  EXPECT_EQ(measure_set_convexity(SimplexSet{3}, 2.0, 2000, 2), 0.0);
}

TEST(UniformConvexity, MeasuredConstants) {
  const double mu2 = measure_set_convexity(LpBallSet{2, 2.0, 1.0}, 2.0);
  EXPECT_GE(mu2, 1.0);
  EXPECT_LE(mu2, 1.0 + 1e-5);
  // mu scales as 1/r^{p-1} for radius r.
  const double mu2r = measure_set_convexity(LpBallSet{2, 2.0, 2.0}, 2.0);
  EXPECT_NEAR(mu2r, 0.5, 1e-5);
  // The l4 ball is 4-uniformly convex but not 2-uniformly convex near its axes.
  EXPECT_GT(measure_set_convexity(LpBallSet{2, 4.0, 1.0}, 4.0), 0.1);
  EXPECT_LT(measure_set_convexity(LpBallSet{2, 4.0, 1.0}, 2.0), 0.05);
}

TEST(UniformConvexity, MeasuredMuIsMonotoneBoundary) {
  const SetDescriptor ball = LpBallSet{3, 3.0, 1.0};
  const double mu = measure_set_convexity(ball, 3.0, 4000, 9);
  EXPECT_TRUE(verify_set_uniform_convexity(ball, 3.0, mu, 4000, 9).holds);
  EXPECT_FALSE(verify_set_uniform_convexity(ball, 3.0, mu * 1.01, 4000, 9).holds);
}

TEST(SetDescriptor, Basics) {
  EXPECT_EQ(set_dimension(SimplexSet{4}), 4);
  EXPECT_NEAR(set_diameter_l2(SimplexSet{4}), std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(set_diameter_l2(LpBallSet{3, 2.0, 1.5}), 3.0);
  EXPECT_TRUE(set_contains(SimplexSet{2}, vec({0.5, 0.5})));
  EXPECT_FALSE(set_contains(SimplexSet{2}, vec({0.7, 0.5})));
  EXPECT_FALSE(set_contains(SimplexSet{2}, vec({1.1, -0.1})));
  EXPECT_NEAR(set_violation(LpBallSet{2, 2.0, 1.0}, vec({3.0, 4.0})), 4.0, 1e-15);
}

TEST(UniformConvexity, ZeroSamplesIsUsageError) {
  EXPECT_THROW(verify_set_uniform_convexity(SimplexSet{2}, 2.0, 1.0, 0, 1), UsageError);
}

// Every LMO output lies in the domain and matches enumeration in dims 2 and 3.
TEST(ProblemProperties, LmoMatchesBruteForce) {
  Rng rng(7);
  for (Index n : {2, 3}) {
    for (int i = 0; i < 60; ++i) {
      const Vector g = rng.normal_vector(n);
      const Vector s = set_lmo(SimplexSet{n}, g);
      EXPECT_NEAR(g.dot(s), testing::brute_simplex_min(g), 1e-15);
      for (double p : {2.0, 3.0, 4.0}) {
        const LpBallSet ball{n, p, 1.5};
        const Vector sb = set_lmo(ball, g);
        EXPECT_TRUE(set_contains(ball, sb));
        const double brute = testing::brute_ball_min(g, p, 1.5, n == 2 ? 4000 : 800);
        EXPECT_LE(g.dot(sb), brute + 1e-12);
        EXPECT_NEAR(g.dot(sb), brute, 1e-3);
      }
    }
  }
}

// D_f(y, x) <= (L / q) ||y - x||^q on 10^4 seeded pairs per instance.
TEST(ProblemProperties, SmoothnessInequality) {
  for (const Problem& p : testing::builtin_problems(5, 13)) {
    const SmoothnessInfo& sm = *p.f.smoothness;
    Rng rng(8);
    for (int i = 0; i < 10000; ++i) {
      const Vector x = (i % 3 == 0) ? Vector(p.psi.lmo(rng.normal_vector(5))) : sample_domain_point(p, rng);
      const Vector y = (i % 5 == 0) ? Vector(p.psi.lmo(rng.normal_vector(5))) : sample_domain_point(p, rng);
      const double d = bregman(p.f, y, x);
      const double bound = sm.L / sm.q * std::pow(sm.norm(y - x), sm.q);
      ASSERT_LE(d, bound + 1e-12 * (1.0 + bound)) << p.name << " sample " << i;
    }
  }
}

// Recorded constants lie in their admissible ranges.
TEST(ProblemProperties, MetadataRanges) {
  for (const Problem& p : testing::builtin_problems(4, 14)) {
    const InstanceMetadata meta = instance_metadata(p);
    ASSERT_TRUE(meta.smoothness) << p.name;
    EXPECT_GT(meta.smoothness->q, 1.0);
    EXPECT_LE(meta.smoothness->q, 2.0);
    EXPECT_GT(meta.smoothness->L, 0.0);
    if (meta.convexity) {
      EXPECT_GE(meta.convexity->p, 2.0) << p.name;
      EXPECT_GT(meta.convexity->mu, 0.0) << p.name;
    }
    if (meta.constants.gradient_lower_bound) {
      EXPECT_GT(meta.constants.gradient_lower_bound->value, 0.0);
    }
    if (meta.constants.error_bound) {
      EXPECT_GE(meta.constants.error_bound->gamma, 0.0);
      EXPECT_LE(meta.constants.error_bound->gamma, 1.0);
    }
    if (meta.constants.holder_nu) {
      EXPECT_GT(*meta.constants.holder_nu, 0.0);
      EXPECT_LE(*meta.constants.holder_nu, 1.0);
    }
    for (const NormedConstant& d : meta.constants.diameters) EXPECT_GT(d.value, 0.0);
  }
}

TEST(ProblemProperties, ConstructionIsDeterministic) {
  const Problem a = quadratic_over_simplex(9, 77);
  const Problem b = quadratic_over_simplex(9, 77);
  const Problem c = quadratic_over_simplex(9, 78);
  const Vector x = Vector::Constant(9, 1.0 / 9.0);
  EXPECT_EQ(a.f.gradient(x), b.f.gradient(x));
  EXPECT_NE(a.f.gradient(x), c.f.gradient(x));
  EXPECT_EQ(random_shift(4, 2.0, 3), random_shift(4, 2.0, 3));
  EXPECT_NEAR(random_shift(4, 2.0, 3).norm(), 2.0, 1e-15);
}

}  // namespace
}  // namespace condgrad
