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

// Toy problems and generators shared by the unit tests and the acceptance
// binary.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "condgrad/problems.hpp"
#include "condgrad/random.hpp"

namespace condgrad::testing {

inline Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

inline Vector unit(Index n, Index i) { return Vector::Unit(n, i); }

/// f = 1/2 ||x||^2 over the unit Euclidean disc.
inline Problem unit_ball_toy() { return quadratic_over_lp_ball(2, 2.0, 1.0, Vector::Zero(2)); }

/// f = 1/2 ||x - (2, 0)||^2, psi = 1/2 ||x||^2.
inline Problem strongly_convex_toy() { return smooth_plus_strongly_convex(vec({2.0, 0.0}), 1.0); }

/// f = 1/2 ||x||^2 - x_1 over the simplex in R^3, which is 1/2 ||x - e_1||^2 - 1/2.
inline Problem simplex_toy() {
  return quadratic_over_simplex(Matrix::Identity(3, 3), -unit(3, 0), KnownOptimum{unit(3, 0), -0.5});
}

/// One instance per builtin constructor at dimension n (n >= 2).
inline std::vector<Problem> builtin_problems(Index n, std::uint64_t seed) {
  std::vector<Problem> out;
  out.push_back(quadratic_over_simplex(n, seed));
  out.push_back(quadratic_over_lp_ball(n, 2.0, 1.0, random_shift(n, 3.0, seed)));
  out.push_back(quadratic_over_lp_ball(n, 4.0, 1.0, 3.0 * unit(n, 0)));
  out.push_back(smooth_plus_strongly_convex(n, 1.0, seed));
  out.push_back(holder_objective_over_set(n, 0.5, SimplexSet{n}, random_shift(n, 0.5, seed)));
  out.push_back(holder_objective_over_set(n, 0.7, LpBallSet{n, 3.0, 1.0}, random_shift(n, 2.0, seed)));
  out.push_back(error_bound_instance(n));
  out.push_back(local_scaling_instance(n));
  return out;
}

/// Seeded starting point in dom(psi).
inline Vector random_start(const Problem& problem, std::uint64_t seed) {
  Rng rng(seed);
  return sample_domain_point(problem, rng);
}

}  // namespace condgrad::testing
