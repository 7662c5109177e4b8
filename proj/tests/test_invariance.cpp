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

#include <gtest/gtest.h>

#include "condgrad/invariance.hpp"
#include "support.hpp"

namespace condgrad {
namespace {

using testing::unit_ball_toy;
using testing::vec;

Matrix diag2(double a, double b) {
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = a;
  A(1, 1) = b;
  return A;
}

TEST(Reparametrization, ForwardInverseAndCondition) {
  const Reparametrization rep(diag2(2.0, 0.5), vec({0.3, -0.1}));
  EXPECT_NEAR(rep.condition(), 4.0, 1e-12);
  const Vector xt = vec({1.0, 2.0});
  EXPECT_TRUE(rep.forward(xt).isApprox(vec({2.3, 0.9})));
  EXPECT_TRUE(rep.inverse(rep.forward(xt)).isApprox(xt));
  EXPECT_TRUE(rep.gradient_to_original(vec({2.0, 1.0})).isApprox(vec({1.0, 2.0})));
  EXPECT_LE((rep.A() * rep.A_inverse() - Matrix::Identity(2, 2)).norm(), 1e-8 * rep.condition());
}

TEST(Reparametrization, RejectsBadInput) {
  EXPECT_THROW(Reparametrization(Matrix::Zero(2, 2), Vector::Zero(2)), UsageError);
  EXPECT_THROW(Reparametrization(Matrix::Identity(2, 3), Vector::Zero(2)), UsageError);
  EXPECT_THROW(Reparametrization(Matrix::Identity(2, 2), Vector::Zero(3)), UsageError);
  Matrix nearly = Matrix::Identity(2, 2);
  nearly(1, 1) = 1e-16;
  EXPECT_THROW(Reparametrization(nearly, Vector::Zero(2)), UsageError);
}

TEST(RandomReparametrization, ConditionAndSeeding) {
  const Reparametrization a = random_reparametrization(6, 50.0, 3);
  EXPECT_NEAR(a.condition(), 50.0, 1e-8);
  const Reparametrization b = random_reparametrization(6, 50.0, 3);
  EXPECT_EQ(a.A(), b.A());
  EXPECT_EQ(a.b(), b.b());
  EXPECT_THROW(random_reparametrization(3, 0.5, 1), UsageError);
  EXPECT_THROW(random_reparametrization(0, 2.0, 1), UsageError);
}

TEST(TransportProblem, IdentityIsPointwiseIdentical) {
  const Problem p = quadratic_over_simplex(5, 2);
  const Problem t = transport_problem(p, Reparametrization::identity(5));
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Vector x = sample_domain_point(p, rng);
    const Vector g = rng.normal_vector(5);
    EXPECT_NEAR(t.f.value(x).value(), p.f.value(x).value(), 1e-15);
    EXPECT_LE((t.f.gradient(x) - p.f.gradient(x)).norm(), 1e-15);
    EXPECT_LE((t.psi.lmo(g) - p.psi.lmo(g)).norm(), 1e-15);
  }
}

TEST(TransportProblem, ChainRuleExample) {
  const Problem t = transport_problem(unit_ball_toy(), Reparametrization(2.0 * Matrix::Identity(2, 2), Vector::Zero(2)));
  EXPECT_DOUBLE_EQ(t.f.value(vec({0.5, 0.0})).value(), 0.5);
  EXPECT_TRUE(t.f.gradient(vec({0.5, 0.0})).isApprox(vec({2.0, 0.0})));
}

TEST(TransportProblem, TranslatedDomain) {
  const Problem t = transport_problem(unit_ball_toy(), Reparametrization(Matrix::Identity(2, 2), vec({1.0, 0.0})));
  EXPECT_TRUE(t.psi.contains(vec({-2.0, 0.0})));
  EXPECT_FALSE(t.psi.contains(vec({0.5, 0.0})));
  EXPECT_FALSE(t.psi.value(vec({0.5, 0.0})).is_finite());
}

TEST(TransportProblem, OptimumTransported) {
  const Problem p = quadratic_over_lp_ball(3, 2.0, 1.0, vec({0.0, 3.0, 0.0}));
  const Reparametrization rep = random_reparametrization(3, 10.0, 4);
  const Problem t = transport_problem(p, rep);
  ASSERT_TRUE(t.optimum);
  EXPECT_TRUE(rep.forward(t.optimum->x).isApprox(p.optimum->x, 1e-12));
  EXPECT_NEAR(t.optimum->value, p.optimum->value, 1e-12);
  EXPECT_FALSE(t.f.smoothness);
}

TEST(PairedRun, IdentityHasZeroDeviation) {
  const Problem p = quadratic_over_simplex(8, 3);
  const InvarianceReport r =
      paired_run(p, Reparametrization::identity(8), ExactLineSearch{}, Vector::Unit(8, 0), 100);
  EXPECT_TRUE(r.passed) << r.note;
  EXPECT_LE(r.max_gap_deviation, 1e-15);
  EXPECT_LE(r.max_theta_deviation, 1e-15);
  EXPECT_LE(r.max_iterate_deviation, 1e-15);
  EXPECT_LE(r.max_best_gap_deviation, 1e-15);
}

TEST(PairedRun, UnitBallDiagonalMap) {
  const Reparametrization rep(diag2(2.0, 0.5), vec({0.3, -0.1}));
  const InvarianceReport r = paired_run(unit_ball_toy(), rep, ExactLineSearch{}, vec({0.6, 0.8}), 200);
  EXPECT_TRUE(r.passed) << r.note;
  EXPECT_LE(r.max_gap_deviation, 1e-8);
  EXPECT_GE(r.compared, 2);
}

TEST(PairedRun, IllConditionedMapIsFlagged) {
  const Problem p = quadratic_over_lp_ball(4, 2.0, 1.0, random_shift(4, 3.0, 2));
  const Reparametrization rep = random_reparametrization(4, 1e4, 5);
  const InvarianceReport r = paired_run(p, rep, ExactLineSearch{}, p.psi.lmo(-Vector::Unit(4, 0)), 100);
  EXPECT_TRUE(r.condition_limited);
  EXPECT_NEAR(r.tolerance_scale, 100.0, 1e-6);
  EXPECT_FALSE(r.note.empty());
  EXPECT_TRUE(r.passed) << r.note;
}

TEST(PairedRun, BacktrackingAgrees) {
  const Problem p = quadratic_over_simplex(6, 4);
  const InvarianceReport r =
      paired_run(p, random_reparametrization(6, 20.0, 6), Backtracking(0.5, 0.8), Vector::Unit(6, 1), 150);
  EXPECT_TRUE(r.passed) << r.note;
}

TEST(PairedRun, SolverFailureIsReported) {
  const Problem p = unit_ball_toy();
  const InvarianceReport r = paired_run(p, Reparametrization::identity(2), ExactLineSearch{}, vec({3.0, 0.0}), 10);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.note.empty());
}

TEST(PairedRun, WellConditionedRunsKeepFixedTolerances) {
  const Problem p = quadratic_over_simplex(8, 3);
  const InvarianceReport r = paired_run(p, random_reparametrization(8, 50.0, 2), ExactLineSearch{}, Vector::Unit(8, 0), 200);
  EXPECT_TRUE(r.passed) << r.note;
  EXPECT_FALSE(r.noise_floor_limited);
  EXPECT_EQ(r.theta_flat_limited, 0);
  for (double t : r.iterate_threshold) EXPECT_DOUBLE_EQ(t, kInvarianceIterateTolerance * r.condition);
}

// The l3-ball LMO has a square-root singularity where a gradient component
// vanishes, so this run drifts by far more than roundoff from a 1e-15 change
// of start; the thresholds follow that drift.
TEST(PairedRun, RoundoffSensitiveRunUsesNoiseFloor) {
  const Problem p = holder_objective_over_set(10, 0.7, LpBallSet{10, 3.0, 1.0}, random_shift(10, 2.0, 21));
  const Reparametrization rep = random_reparametrization(10, 78.0, 1008);
  const InvarianceReport r = paired_run(p, rep, ExactLineSearch{}, testing::random_start(p, 8), 200);
  EXPECT_TRUE(r.passed) << r.note;
  EXPECT_TRUE(r.noise_floor_limited);
  EXPECT_GT(r.max_iterate_deviation, kInvarianceIterateTolerance * r.condition);
  EXPECT_NE(r.note.find("noise floor"), std::string::npos);
  ASSERT_EQ(r.iterate_threshold.size(), r.iterate_deviation.size());
  for (std::size_t i = 1; i < r.iterate_threshold.size(); ++i)
    EXPECT_GE(r.iterate_threshold[i], r.iterate_threshold[i - 1]);
}

// Per-iteration agreement for every builtin problem under seeded
// well-conditioned maps.
TEST(InvarianceProperties, BuiltinsAgree) {
  for (const Problem& p : testing::builtin_problems(5, 17)) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Reparametrization rep = random_reparametrization(5, 1.0 + 33.0 * seed, seed);
      const InvarianceReport r = paired_run(p, rep, ExactLineSearch{}, testing::random_start(p, seed), 200);
      EXPECT_TRUE(r.passed) << p.name << " seed " << seed << ": " << r.note << " gap " << r.max_gap_deviation
                            << " theta " << r.max_theta_deviation << " x " << r.max_iterate_deviation;
    }
  }
}

TEST(InvarianceProperties, CurveValuesAgree) {
  for (const Problem& p : testing::builtin_problems(5, 18)) {
    const CurveInvarianceCheck c = check_curve_invariance(p, random_reparametrization(5, 30.0, 7), 100, 8);
    EXPECT_TRUE(c.passed) << p.name << " " << c.max_deviation;
    EXPECT_EQ(c.samples, 100);
  }
}

}  // namespace
}  // namespace condgrad
