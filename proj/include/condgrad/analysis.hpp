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

// Growth constants, rate envelopes and certificate checks.
//
// A (q, r)-growth certificate asserts
//   D(x, s, theta) <= (M / q) theta^q gap(x, g)^r     for all theta in [0, 1].
// The weak variant multiplies D by subopt^{1-r} and uses gap instead of gap^r;
// the local variant only requires the inequality where gap(x, g) < epsilon.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condgrad/solver.hpp"

namespace condgrad {

enum class GrowthKind { kGrowth, kWeakGrowth, kLocalGrowth };

std::string to_string(GrowthKind kind);
GrowthKind parse_growth_kind(const std::string& text);

struct GrowthCertificate {
  GrowthKind kind = GrowthKind::kGrowth;
  double q = 2.0;
  double r = 0.0;
  double M = 1.0;
  /// Present iff kind == kLocalGrowth.
  std::optional<double> epsilon;
  /// "theoretical(<case>)" or "empirical(<sample spec>)".
  std::string provenance;
};

/// Throws UsageError unless q > 1, r in [0, 1], M > 0 and epsilon matches kind.
void validate(const GrowthCertificate& cert);

/// Case ids accepted by theoretical_growth_constant.
///   bounded-domain        (q, 0),      M = L diam^q
///   strongly-convex-psi   (2, 1),      M = 2L / mu
///   strongly-convex-set   (2, 1),      M = 2L / (ell mu)
///   uniformly-convex-psi  (q, q/p),    M = L (p / mu)^{q/p}
///   uniformly-convex-set  (q, q/p),    M = L (p / (ell mu))^{q/p}
///   error-bound           weak (q, gamma q/p),  M = L (p K / mu)^{q/p}
///   local-scaling         local (1+nu, q(q-1)/(p(p-1))), epsilon = 1,
///                         M = L (sigma^{-1/p} + sigma^{-nu/(p(p-1))} (L/sigma)^{1/(p-1)})^{1+nu}
const std::vector<std::string>& growth_cases();

/// Throws UsageError for unknown cases or when a required constant is missing
/// (the message names the field).
GrowthCertificate theoretical_growth_constant(const InstanceMetadata& meta, const std::string& case_id);

/// Every case whose constants are present in meta.
std::vector<GrowthCertificate> applicable_certificates(const InstanceMetadata& meta);

/// Ratio below which a sample is skipped.
inline constexpr double kEmpiricalGapFloor = 1e-14;

/// max over samples and theta = j / grid (j = 1..grid) of
///   growth:      q D / (theta^q gap^r)
///   weak growth: q D subopt^{1-r} / (theta^q gap)
///   local:       as growth, on samples with gap < epsilon only.
/// Throws UsageError for grid < 2, a weak kind without a known optimum or a
/// local kind without epsilon; DegenerateInputError when every sample is skipped.
GrowthCertificate empirical_growth_constant(const Problem& problem, GrowthKind kind, double q, double r,
                                            const std::vector<Vector>& samples, int theta_grid,
                                            std::optional<double> epsilon = std::nullopt);

/// sup of 2 D_f(x + theta (s - x), x) / theta^2 over pairs and theta = j / grid.
/// Throws UsageError when psi is not an indicator or grid < 1.
double curvature_constant(const Problem& problem, const std::vector<std::pair<Vector, Vector>>& pairs,
                          int theta_grid);

/// Seeded points in dom(psi): sample_domain_point draws plus LMO vertices.
std::vector<Vector> growth_samples(const Problem& problem, int count, std::uint64_t seed);

struct RateEnvelope {
  std::vector<double> bounds;
  /// First k with b_k^{1-r} <= threshold; bounds.size() when never reached.
  long k0 = 0;
  /// "theorem1", "theorem2", "theorem3" or "theorem4".
  std::string source;
  double q = 2.0;
  double r = 0.0;
  double M = 1.0;
  std::optional<double> c;
  std::optional<double> rho;
  /// Largest (b_k - closed_form_k) / closed_form_k over applicable closed forms.
  double max_closed_form_excess = 0.0;
};

/// One step of b -> b (1 - a min{1, (t b^{1-r} / M)^{1/(q-1)}}), with 0^0 = 1.
double recurrence_map(double b, double a, double t, double q, double r, double M);

/// Iterates the exact-line-search recurrence from gap0 for K steps.
/// Throws UsageError when q <= 1, r outside [0, 1], M <= 0, gap0 <= 0 or K < 0.
RateEnvelope envelope_theorem1(double q, double r, double M, double gap0, long K);
/// Backtracking recurrence. Accepts c in (0, 1), rho in (0, 1] with c + rho > 1;
/// rho = 1, c = (q-1)/q coincides with envelope_theorem1.
RateEnvelope envelope_theorem2(double q, double r, double M, double c, double rho, double gap0, long K);
/// Same maps applied to the suboptimality; c and rho select the relaxed variant.
RateEnvelope envelope_subopt(double q, double r, double M, double subopt0, long K,
                             std::optional<double> c = std::nullopt,
                             std::optional<double> rho = std::nullopt);

/// Closed forms, evaluated independently of the iterated envelopes.
double closed_form_linear(double q, double M, double gap0, long k);
double closed_form_initial_linear(double q, double gap0, long k);
double closed_form_sublinear(double q, double r, double M, double b_k0, long k0, long k);
/// M (q / (k - 1 + q^{q/(q-1)}))^{q-1} for k >= 1, i.e. 2M/(k+3) at q = 2. Needs gap0 <= M.
double closed_form_q0(double q, double M, long k);
/// M (q/k)^{q-1}: the weaker Holder form with M = L diam^{1+nu}, q = 1 + nu.
double closed_form_holder(double q, double M, long k);
/// (M^{-(1-r)/(q-1)} + ((1-r)/q) k M^{-1/(q-1)})^{(q-1)/(r-1)}, r < 1.
/// Needs gap0 <= M and gap0^{1-r} <= M.
double closed_form_general(double q, double r, double M, long k);
double closed_form_linear_relaxed(double q, double M, double c, double rho, double gap0, long k);
double closed_form_initial_linear_relaxed(double c, double rho, double gap0, long k);
double closed_form_sublinear_relaxed(double q, double r, double M, double c, double rho, double b_k0,
                                     long k0, long k);

enum class CertificateTarget { kGap, kSubopt };

struct CertificateReport {
  bool passed = false;
  /// Per record: transition k -> k+1 satisfies the one-step recurrence (the
  /// last record and non-consecutive records are vacuously true).
  std::vector<bool> recurrence_ok;
  /// Per record: observed <= envelope + 1e-9 (1 + envelope).
  std::vector<bool> envelope_ok;
  std::optional<long> first_failing_k;
  /// Index of the first record the check applies to (nonzero for local certificates).
  long start_index = 0;
  RateEnvelope envelope;
  std::string note;
};

/// Checks the per-iteration recurrence and envelope domination. The map is
/// chosen by the trajectory's strategy; open-loop trajectories fail with a note.
/// Local certificates start at the first record whose Wolfe gap is below epsilon.
CertificateReport check_certificate(const Trajectory& trajectory, const GrowthCertificate& cert,
                                    CertificateTarget which);

/// (beta0^{-p} + p sum_{i<k} delta_i)^{-1/p}; 0 when beta0 = 0.
/// Throws UsageError for p <= 0, beta0 < 0, negative delta or k > delta.size().
double bly_bound(double p, double beta0, const std::vector<double>& delta, long k);

struct RateFit {
  /// Slope of log b_i against log(i + 1).
  double order = 0.0;
  /// exp of the slope of log b_i against i.
  double linear_factor = 1.0;
};

/// Least squares over the trailing window. Throws UsageError for nonpositive
/// entries in the window or window < 3 or a series shorter than window.
RateFit rate_fit(const std::vector<double>& series, std::size_t window);
/// Same with explicit abscissae k_i (for thinned trajectories).
RateFit rate_fit(const std::vector<double>& ks, const std::vector<double>& series, std::size_t window);

}  // namespace condgrad
