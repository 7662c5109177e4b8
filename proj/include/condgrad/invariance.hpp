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

// Affine reparametrizations x = A x~ + b and paired runs.
//
// The method is affine invariant: gaps, curve values D and exact stepsizes are
// identical on f~(x~) = f(A x~ + b), psi~(x~) = psi(A x~ + b), and iterates
// correspond through the map.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "condgrad/solver.hpp"

namespace condgrad {

class Reparametrization {
 public:
  /// Throws UsageError when A is not square, b has the wrong size, or A is
  /// numerically singular (sigma_min <= 1e-14 sigma_max).
  Reparametrization(Matrix A, Vector b);
  static Reparametrization identity(Index n);

  Index dimension() const { return b_.size(); }
  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  const Matrix& A_inverse() const { return A_inv_; }
  /// sigma_max / sigma_min.
  double condition() const { return condition_; }

  /// A x~ + b.
  Vector forward(const Vector& x_tilde) const;
  /// A^{-1} (x - b).
  Vector inverse(const Vector& x) const;
  /// A^{-T} g~: the original-space gradient matching a transported one.
  Vector gradient_to_original(const Vector& g_tilde) const;

 private:
  Matrix A_;
  Vector b_;
  Matrix A_inv_;
  double condition_ = 1.0;
};

/// A = U diag(sigma) V' with Haar U, V and sigma log-spaced on [1, condition];
/// b has standard normal entries scaled by 1/2. Throws UsageError for
/// condition < 1 or n < 1.
Reparametrization random_reparametrization(Index n, double condition, std::uint64_t seed);

/// f~(x~) = f(A x~ + b), grad f~ = A' grad f, psi~(x~) = psi(A x~ + b); the LMO
/// reuses the original oracle, s~ = A^{-1}(lmo(A^{-T} g~) - b). Norm-tagged
/// constants are dropped; the optimum and line minimizer are transported.
Problem transport_problem(const Problem& problem, const Reparametrization& rep);

/// Tolerances below are multiplied by max(1, condition / kConditionReference).
inline constexpr double kConditionReference = 100.0;
inline constexpr double kInvarianceGapTolerance = 1e-8;
inline constexpr double kInvarianceThetaTolerance = 1e-8;
inline constexpr double kInvarianceIterateTolerance = 1e-7;
/// Multiple of the noise-floor drift allowed per unit of condition.
inline constexpr double kNoiseFloorFactor = 10.0;

struct InvarianceReport {
  double condition = 1.0;
  bool condition_limited = false;
  double tolerance_scale = 1.0;
  long compared = 0;
  /// |wg - wg~| / (1 + |wg|) per compared iteration; likewise for best gaps.
  std::vector<double> gap_deviation;
  std::vector<double> best_gap_deviation;
  /// |theta - theta~|; zero on the terminal record.
  std::vector<double> theta_deviation;
  /// Allowed theta deviation per record: the theta tolerance times
  /// max(1, (1 + ||x_k||) / ||s_k - x_k||). A short segment fixes theta only
  /// up to the resolution of its endpoints.
  std::vector<double> theta_threshold;
  /// Records whose theta threshold exceeds the base tolerance.
  long theta_resolution_limited = 0;
  /// Records whose theta values exceed the threshold but give line objective
  /// values (on the original segment) equal within the gap tolerance. Near
  /// the optimum the line objective is flat to roundoff and any minimizer of
  /// it is as good as another.
  std::vector<bool> theta_value_equivalent;
  long theta_flat_limited = 0;
  /// ||x_k - (A x~_k + b)|| / (1 + ||x_k||).
  std::vector<double> iterate_deviation;
  /// Allowed deviations per record. Each is the fixed tolerance (scaled by
  /// condition as above) unless that is exceeded; then it is at least
  /// kNoiseFloorFactor times the condition times the running drift between
  /// the original run and the same run started a 1e-15 step away.
  std::vector<double> iterate_threshold;
  std::vector<double> gap_threshold;
  std::vector<double> best_gap_threshold;
  bool noise_floor_limited = false;
  double max_gap_deviation = 0.0;
  double max_best_gap_deviation = 0.0;
  double max_theta_deviation = 0.0;
  double max_iterate_deviation = 0.0;
  bool passed = false;
  std::string note;
};

/// Runs from x0 and from A^{-1}(x0 - b) for `iterations` steps and compares.
/// Never throws for solver failures; they are reported through note/passed.
InvarianceReport paired_run(const Problem& problem, const Reparametrization& rep,
                            const StepsizeStrategy& strategy, const Vector& x0, long iterations);

struct CurveInvarianceCheck {
  int samples = 0;
  /// max |D - D~| / (1 + |D|).
  double max_deviation = 0.0;
  bool passed = false;
};

/// Compares D(x, s, theta) against D~(x~, s~, theta) at seeded (x, theta);
/// passes at 1e-9 scaled as above.
CurveInvarianceCheck check_curve_invariance(const Problem& problem, const Reparametrization& rep,
                                            int samples, std::uint64_t seed);

}  // namespace condgrad
