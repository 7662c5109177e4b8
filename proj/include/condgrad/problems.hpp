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

// Builtin instances with closed-form LMOs and recorded regularity constants.
//
// All constants are stored with respect to the Euclidean norm. Set-convexity
// constants mu of balls are measured by bisection over
// verify_set_uniform_convexity rather than taken from the literature.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "condgrad/model.hpp"

namespace condgrad {

struct SimplexSet {
  Index n = 2;
};

/// { y : ||y||_p <= radius }.
struct LpBallSet {
  Index n = 2;
  double p = 2.0;
  double radius = 1.0;
};

using SetDescriptor = std::variant<SimplexSet, LpBallSet>;

std::string describe(const SetDescriptor& set);
Index set_dimension(const SetDescriptor& set);
/// Positive when y is outside: ||y||_p - r for balls; the largest negative
/// coordinate or |sum - 1| for the simplex.
double set_violation(const SetDescriptor& set, const Vector& y);
bool set_contains(const SetDescriptor& set, const Vector& y);
/// Deterministic closed-form argmin_{y in set} <g, y>.
Vector set_lmo(const SetDescriptor& set, const Vector& g);
/// Euclidean diameter.
double set_diameter_l2(const SetDescriptor& set);

/// set_contains accepts violations up to kMembershipSlack * (1 + scale);
/// the convexity verifier uses the tighter kConvexitySlack.
inline constexpr double kMembershipSlack = 1e-10;
inline constexpr double kConvexitySlack = 1e-14;

struct UniformConvexityCheck {
  bool holds = false;
  /// Largest set_violation over all perturbed points.
  double max_violation = 0.0;
  int samples = 0;
};

/// Samples x, y in the set, theta in (0, 1) and ||z||_2 <= 1 and tests whether
///   x + theta (y - x) + (mu / p) theta (1 - theta) ||y - x||_2^p z
/// stays in the set. Pairs are drawn far apart, close together and near the
/// flattest boundary points (the coordinate axes of lp balls); z is taken along
/// the outward normal and at random.
UniformConvexityCheck verify_set_uniform_convexity(const SetDescriptor& set, double p, double mu,
                                                   int samples, std::uint64_t seed);

/// Largest mu (to bisection precision) for which verify_set_uniform_convexity
/// holds; 0 when even tiny mu fails. The result is memoized per (set, p,
/// samples, seed).
double measure_set_convexity(const SetDescriptor& set, double p, int samples = 10000,
                             std::uint64_t seed = 0x5eedc0de);

/// Default sample count used when instances measure mu.
inline constexpr int kConvexitySamples = 10000;

/// f(x) = 1/2 x'Qx + c'x over the standard simplex. Q = U diag(lambda) U' with
/// Haar U, lambda uniform on [0, 1) and lambda_0 = 1; c ~ 0.3 N(0, I).
/// Throws UsageError for n < 2.
Problem quadratic_over_simplex(Index n, std::uint64_t seed);
/// Same with explicit data; the optimum is attached when provided.
Problem quadratic_over_simplex(const Matrix& Q, const Vector& c,
                               std::optional<KnownOptimum> optimum = std::nullopt);

/// f(x) = 1/2 ||x - c||^2 over { ||y||_p <= r }. Throws UsageError for
/// n < 1, p < 2, r <= 0 or a shift of the wrong size.
Problem quadratic_over_lp_ball(Index n, double p, double radius, const Vector& shift,
                               std::uint64_t seed = 0);

/// f(x) = 1/2 ||x - c||^2 with seeded c, psi(x) = mu/2 ||x||^2.
Problem smooth_plus_strongly_convex(Index n, double mu, std::uint64_t seed);
Problem smooth_plus_strongly_convex(const Vector& shift, double mu);

/// f(x) = ||x - c||^{1+nu} / (1 + nu) over a simplex or lp ball. Throws
/// UsageError for nu outside (0, 1].
Problem holder_objective_over_set(Index n, double nu, const SetDescriptor& set, const Vector& shift,
                                  std::uint64_t seed = 0);

/// f(x) = ||x - a||^2 over the unit Euclidean ball, a = 0 by default.
/// Satisfies the 1/2-Holderian error bound with K = 1.
Problem error_bound_instance(Index n);
Problem error_bound_instance(const Vector& center);

/// f(x) = 1/2 ||x - 2 e_1||^2 over the unit Euclidean ball, x* = e_1,
/// local scaling sigma = 1/2 with p = 2. Throws UsageError for n < 2.
Problem local_scaling_instance(Index n);

/// Seeded shift c with ||c||_2 = norm along a random direction.
Vector random_shift(Index n, double norm, std::uint64_t seed);

}  // namespace condgrad
