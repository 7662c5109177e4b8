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

// Composite problems min f(x) + psi(x) described through oracles.
//
// A Problem owns a smooth part (value + gradient) and a composite part
// (value + linear minimization oracle + domain test). All oracles are pure and
// may be called concurrently. Conjugates are never represented: dual
// quantities are derived from oracle outputs (see gap_kernel.hpp).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "condgrad/errors.hpp"

namespace condgrad {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

class Rng;

/// A value in R u {+inf}.
///
/// Constructing from +inf yields the infinite flag; NaN and -inf are rejected.
/// Arithmetic is only defined between finite values: anything that would
/// combine an infinite flag throws instead of propagating.
class ExtendedReal {
 public:
  ExtendedReal(double v);  // NOLINT: implicit on purpose, oracles return doubles
  static ExtendedReal infinity();

  bool is_finite() const { return !infinite_; }
  /// Throws DomainError when infinite.
  double value() const;
  /// +inf as a double when infinite; for display and serialization only.
  double to_double() const;

  friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
  friend ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b);
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b);

 private:
  ExtendedReal() = default;
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Norms that regularity constants may refer to.
struct Norm {
  enum class Kind { kL1, kL2, kLp, kLInf };
  Kind kind = Kind::kL2;
  double p = 2.0;  // only meaningful for kLp

  static Norm l1() { return {Kind::kL1, 1.0}; }
  static Norm l2() { return {Kind::kL2, 2.0}; }
  static Norm lp(double p);
  static Norm linf() { return {Kind::kLInf, 0.0}; }

  double operator()(const Vector& v) const;
  Norm dual() const;
  std::string tag() const;
  friend bool operator==(const Norm& a, const Norm& b);
};

/// D_f(y, x) <= (L/q) ||y - x||^q on dom(psi).
struct SmoothnessInfo {
  double q = 2.0;
  double L = 1.0;
  Norm norm;
  /// Where L came from, e.g. "analytic" or "holder-candidate (sampled max 0.93)".
  std::string source = "analytic";
};

/// Uniform convexity of psi, or of C when psi = indicator of C.
struct ConvexityInfo {
  double p = 2.0;
  double mu = 1.0;
  Norm norm;
  std::string source = "analytic";
};

struct SmoothObjective {
  std::function<ExtendedReal(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  std::optional<SmoothnessInfo> smoothness;
};

struct CompositePart {
  std::function<ExtendedReal(const Vector&)> value;
  /// Returns a point of argmin_y { <g, y> + psi(y) }. Deterministic.
  std::function<Vector(const Vector&)> lmo;
  std::function<bool(const Vector&)> contains;
  /// True when psi is the indicator of a set.
  bool is_indicator = false;
  std::optional<ConvexityInfo> convexity;
};

/// Minimizer of (f + psi)(x + t * d) over t in [0, 1].
using LineMinimizer = std::function<double(const Vector& x, const Vector& direction)>;

struct KnownOptimum {
  Vector x;
  double value = 0.0;
};

/// A regularity constant measured in a given norm.
struct NormedConstant {
  double value = 0.0;
  Norm norm;
};

struct ErrorBoundInfo {
  double gamma = 0.5;
  double K = 1.0;
  Norm norm;
};

/// <grad f(x*), x - x*> >= sigma ||x - x*||^p on C.
struct LocalScalingInfo {
  double sigma = 0.5;
  double p = 2.0;
  Norm norm;
};

/// Problem-level constants that are not attached to f or psi alone.
struct ProblemConstants {
  /// ell = inf over C of the dual norm of grad f; stored in the dual norm of `norm`.
  std::optional<NormedConstant> gradient_lower_bound;
  std::optional<ErrorBoundInfo> error_bound;
  std::optional<LocalScalingInfo> local_scaling;
  /// nu for objectives with nu-Holder gradient.
  std::optional<double> holder_nu;
  std::vector<NormedConstant> diameters;
};

struct Problem {
  std::string name;
  Index dimension = 0;
  SmoothObjective f;
  CompositePart psi;
  std::optional<KnownOptimum> optimum;
  /// Closed-form exact line search; empty when unavailable.
  LineMinimizer line_minimizer;
  ProblemConstants constants;
};

/// Everything known about the regularity of an instance, gathered from the
/// problem and its parts.
struct InstanceMetadata {
  std::optional<SmoothnessInfo> smoothness;
  std::optional<ConvexityInfo> convexity;
  bool psi_is_indicator = false;
  ProblemConstants constants;
};

InstanceMetadata instance_metadata(const Problem& problem);

/// f(x) + psi(x); infinite iff x is outside dom(psi). Throws UsageError on a
/// dimension mismatch.
ExtendedReal primal_value(const Problem& problem, const Vector& x);

/// Throws UsageError when x does not have the problem dimension.
void check_dimension(const Problem& problem, const Vector& x, const char* what);

/// True when every entry of v is finite.
bool all_finite(const Vector& v);

/// Draws a point of dom(psi) as a random convex combination of LMO outputs.
Vector sample_domain_point(const Problem& problem, Rng& rng);

struct ValidationTolerances {
  double gradient_relative = 1e-5;
  double lmo_suboptimality = 1e-9;
};

struct ValidationReport {
  int probes = 0;
  /// max |fd - <grad f(x), d>| / max(1, |<grad f(x), d>|) over probes.
  double max_gradient_discrepancy = 0.0;
  /// max of lmo objective minus comparison objective, relative to 1 + |obj|.
  double max_lmo_suboptimality = 0.0;
  int domain_failures = 0;
  int nonfinite_values = 0;
  bool passed = false;
};

/// Probes the standing assumptions: gradients agree with central differences,
/// LMO outputs are optimal against sampled comparison points and lie in the
/// domain. Throws UsageError when probes < 1.
ValidationReport validate_problem(const Problem& problem, int probes, std::uint64_t seed,
                                  const ValidationTolerances& tol = {});

}  // namespace condgrad
