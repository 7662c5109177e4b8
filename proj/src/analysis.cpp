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

#include "condgrad/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "condgrad/random.hpp"

namespace condgrad {
namespace {

void check_qrM(double q, double r, double M, const char* what) {
  if (!(q > 1.0) || !std::isfinite(q)) throw UsageError(std::string(what) + ": q must exceed 1");
  if (!(r >= 0.0 && r <= 1.0)) throw UsageError(std::string(what) + ": r must lie in [0, 1]");
  if (!(M > 0.0) || !std::isfinite(M)) throw UsageError(std::string(what) + ": M must be positive");
}

void check_relaxed(double c, double rho, const char* what) {
  if (!(c > 0.0 && c < 1.0)) throw UsageError(std::string(what) + ": c must lie in (0, 1)");
  if (!(rho > 0.0 && rho <= 1.0)) throw UsageError(std::string(what) + ": rho must lie in (0, 1]");
  if (!(c + rho > 1.0)) throw UsageError(std::string(what) + ": requires c + rho > 1");
}

double power_1mr(double b, double r) { return r == 1.0 ? 1.0 : std::pow(b, 1.0 - r); }

/// Relative excess of b over a closed form, ignoring vacuous forms.
double excess(double b, double form) {
  if (!std::isfinite(form) || form <= 0.0) return 0.0;
  return (b - form) / form;
}

struct MapParams {
  double a;  // contraction weight
  double t;  // scale inside the min
  double threshold;
};

RateEnvelope iterate_envelope(double q, double r, double M, const MapParams& mp, double b0, long K) {
  RateEnvelope env;
  env.q = q;
  env.r = r;
  env.M = M;
  env.bounds.reserve(static_cast<std::size_t>(K) + 1);
  double b = b0;
  env.k0 = -1;
  for (long k = 0; k <= K; ++k) {
    env.bounds.push_back(b);
    if (env.k0 < 0 && power_1mr(b, r) <= mp.threshold) env.k0 = k;
    b = recurrence_map(b, mp.a, mp.t, q, r, M);
  }
  if (env.k0 < 0) env.k0 = static_cast<long>(env.bounds.size());
  return env;
}

void cross_check_exact(RateEnvelope& env) {
  const double q = env.q;
  const double r = env.r;
  const double M = env.M;
  const double b0 = env.bounds.front();
  double worst = -std::numeric_limits<double>::infinity();
  for (long k = 0; k < static_cast<long>(env.bounds.size()); ++k) {
    const double b = env.bounds[static_cast<std::size_t>(k)];
    if (r == 1.0) {
      worst = std::max(worst, excess(b, closed_form_linear(q, M, b0, k)));
      continue;
    }
    if (k <= env.k0) worst = std::max(worst, excess(b, closed_form_initial_linear(q, b0, k)));
    if (k >= env.k0 && env.k0 < static_cast<long>(env.bounds.size())) {
      const double bk0 = env.bounds[static_cast<std::size_t>(env.k0)];
      worst = std::max(worst, excess(b, closed_form_sublinear(q, r, M, bk0, env.k0, k)));
    }
    if (b0 <= M && k >= 1) {
      if (r == 0.0) {
        worst = std::max(worst, excess(b, closed_form_q0(q, M, k)));
        worst = std::max(worst, excess(b, closed_form_holder(q, M, k)));
      }
      if (power_1mr(b0, r) <= M) worst = std::max(worst, excess(b, closed_form_general(q, r, M, k)));
    }
  }
  env.max_closed_form_excess = worst;
}

void cross_check_relaxed(RateEnvelope& env) {
  const double q = env.q;
  const double r = env.r;
  const double M = env.M;
  const double c = *env.c;
  const double rho = *env.rho;
  const double b0 = env.bounds.front();
  double worst = -std::numeric_limits<double>::infinity();
  for (long k = 0; k < static_cast<long>(env.bounds.size()); ++k) {
    const double b = env.bounds[static_cast<std::size_t>(k)];
    if (r == 1.0) {
      worst = std::max(worst, excess(b, closed_form_linear_relaxed(q, M, c, rho, b0, k)));
      continue;
    }
    if (k <= env.k0) worst = std::max(worst, excess(b, closed_form_initial_linear_relaxed(c, rho, b0, k)));
    if (k >= env.k0 && env.k0 < static_cast<long>(env.bounds.size())) {
      const double bk0 = env.bounds[static_cast<std::size_t>(env.k0)];
      worst = std::max(worst, excess(b, closed_form_sublinear_relaxed(q, r, M, c, rho, bk0, env.k0, k)));
    }
  }
  env.max_closed_form_excess = worst;
}

double ratio_power(double theta, double q) { return q == 2.0 ? theta * theta : std::pow(theta, q); }

}  // namespace

std::string to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::kGrowth:
      return "growth";
    case GrowthKind::kWeakGrowth:
      return "weak-growth";
    case GrowthKind::kLocalGrowth:
      return "local-growth";
  }
  return "growth";
}

GrowthKind parse_growth_kind(const std::string& text) {
  if (text == "growth") return GrowthKind::kGrowth;
  if (text == "weak-growth") return GrowthKind::kWeakGrowth;
  if (text == "local-growth") return GrowthKind::kLocalGrowth;
  throw UsageError("unknown growth kind '" + text + "'");
}

void validate(const GrowthCertificate& cert) {
  check_qrM(cert.q, cert.r, cert.M, "certificate");
  const bool local = cert.kind == GrowthKind::kLocalGrowth;
  if (local != cert.epsilon.has_value())
    throw UsageError("certificate: epsilon must be present exactly for local-growth");
  if (cert.epsilon && !(*cert.epsilon > 0.0)) throw UsageError("certificate: epsilon must be positive");
}

const std::vector<std::string>& growth_cases() {
  static const std::vector<std::string> cases = {
      "bounded-domain",       "strongly-convex-psi", "strongly-convex-set", "uniformly-convex-psi",
      "uniformly-convex-set", "error-bound",         "local-scaling"};
  return cases;
}

GrowthCertificate theoretical_growth_constant(const InstanceMetadata& meta, const std::string& case_id) {
  auto need = [&](bool present, const char* field) {
    if (!present) throw UsageError(fmt::format("{}: metadata lacks {}", case_id, field));
  };
  if (std::find(growth_cases().begin(), growth_cases().end(), case_id) == growth_cases().end())
    throw UsageError("unknown growth case '" + case_id + "'");
  need(meta.smoothness.has_value(), "smoothness (q, L)");
  const SmoothnessInfo& sm = *meta.smoothness;
  const double q = sm.q;
  const double L = sm.L;

  GrowthCertificate cert;
  cert.q = q;
  cert.provenance = "theoretical(" + case_id + ")";

  if (case_id == "bounded-domain") {
    const auto it = std::find_if(meta.constants.diameters.begin(), meta.constants.diameters.end(),
                                 [&](const NormedConstant& d) { return d.norm == sm.norm; });
    need(it != meta.constants.diameters.end(), "a diameter in the smoothness norm");
    cert.r = 0.0;
    cert.M = L * std::pow(it->value, q);
    validate(cert);
    return cert;
  }
  if (case_id == "local-scaling") {
    need(meta.constants.local_scaling.has_value(), "local_scaling (sigma, p)");
    const LocalScalingInfo& ls = *meta.constants.local_scaling;
    if (!(ls.norm == sm.norm)) throw UsageError("local-scaling: norms of sigma and L differ");
    const double nu = meta.constants.holder_nu.value_or(q - 1.0);
    const double qq = 1.0 + nu;
    const double p = ls.p;
    cert.kind = GrowthKind::kLocalGrowth;
    cert.q = qq;
    cert.r = qq * (qq - 1.0) / (p * (p - 1.0));
    if (cert.r > 1.0) throw UsageError("local-scaling: exponents give r > 1");
    const double inner = std::pow(ls.sigma, -1.0 / p) +
                         std::pow(ls.sigma, -nu / (p * (p - 1.0))) * std::pow(L / ls.sigma, 1.0 / (p - 1.0));
    cert.M = L * std::pow(inner, 1.0 + nu);
    cert.epsilon = 1.0;
    validate(cert);
    return cert;
  }

  need(meta.convexity.has_value(), "convexity (p, mu)");
  const ConvexityInfo& cv = *meta.convexity;
  if (!(cv.norm == sm.norm)) throw UsageError(case_id + ": norms of mu and L differ");
  const double p = cv.p;
  const double mu = cv.mu;
  const bool set_case = case_id == "strongly-convex-set" || case_id == "uniformly-convex-set" ||
                        case_id == "error-bound";
  if (set_case && !meta.psi_is_indicator)
    throw UsageError(case_id + ": requires psi to be a set indicator");
  if (!set_case && meta.psi_is_indicator)
    throw UsageError(case_id + ": requires psi to be a function, not a set indicator");

  double ell = 1.0;
  if (case_id == "strongly-convex-set" || case_id == "uniformly-convex-set") {
    need(meta.constants.gradient_lower_bound.has_value(), "gradient_lower_bound (ell)");
    ell = meta.constants.gradient_lower_bound->value;
    need(ell > 0.0, "a positive gradient_lower_bound (ell)");
  }

  if (case_id == "strongly-convex-psi" || case_id == "strongly-convex-set") {
    if (q != 2.0 || p != 2.0) throw UsageError(case_id + ": requires q = 2 and p = 2");
    cert.r = 1.0;
    cert.M = 2.0 * L / (ell * mu);
  } else if (case_id == "uniformly-convex-psi" || case_id == "uniformly-convex-set") {
    if (q > p) throw UsageError(case_id + ": requires q <= p");
    cert.r = q / p;
    cert.M = L * std::pow(p / (ell * mu), q / p);
  } else {  // error-bound
    need(meta.constants.error_bound.has_value(), "error_bound (gamma, K)");
    const ErrorBoundInfo& eb = *meta.constants.error_bound;
    cert.kind = GrowthKind::kWeakGrowth;
    cert.r = eb.gamma * q / p;
    cert.M = L * std::pow(p * eb.K / mu, q / p);
  }
  validate(cert);
  return cert;
}

std::vector<GrowthCertificate> applicable_certificates(const InstanceMetadata& meta) {
  std::vector<GrowthCertificate> out;
  for (const std::string& id : growth_cases()) {
    try {
      out.push_back(theoretical_growth_constant(meta, id));
    } catch (const UsageError&) {
    }
  }
  return out;
}

GrowthCertificate empirical_growth_constant(const Problem& problem, GrowthKind kind, double q, double r,
                                            const std::vector<Vector>& samples, int theta_grid,
                                            std::optional<double> epsilon) {
  check_qrM(q, r, 1.0, "empirical_growth_constant");
  if (theta_grid < 2) throw UsageError("empirical_growth_constant: theta grid must be >= 2");
  if (kind == GrowthKind::kWeakGrowth && !problem.optimum)
    throw UsageError("empirical_growth_constant: weak growth needs a known optimum");
  if (kind == GrowthKind::kLocalGrowth && !epsilon)
    throw UsageError("empirical_growth_constant: local growth needs epsilon");

  double best = 0.0;
  std::size_t used = 0;
  for (const Vector& x : samples) {
    const StepContext ctx = make_step_context(problem, x);
    const double gap = ctx.wolfe_gap;
    if (gap <= kEmpiricalGapFloor) continue;
    if (kind == GrowthKind::kLocalGrowth && !(gap < *epsilon)) continue;
    double scale = 0.0;  // multiplies q D / theta^q
    if (kind == GrowthKind::kWeakGrowth) {
      const double subopt = std::max(0.0, ctx.primal_at_x - problem.optimum->value);
      scale = power_1mr(subopt, r) / gap;
    } else {
      scale = 1.0 / std::pow(gap, r);
    }
    ++used;
    for (int j = 1; j <= theta_grid; ++j) {
      const double theta = static_cast<double>(j) / theta_grid;
      const double D = curve_gap(problem, ctx.x, ctx.g, ctx.s, theta);
      best = std::max(best, q * D * scale / ratio_power(theta, q));
    }
  }
  if (used == 0) throw DegenerateInputError("empirical_growth_constant: every sample was skipped");

  GrowthCertificate cert;
  cert.kind = kind;
  cert.q = q;
  cert.r = r;
  cert.M = best;
  cert.epsilon = kind == GrowthKind::kLocalGrowth ? epsilon : std::nullopt;
  cert.provenance = fmt::format("empirical({} samples, {} used, theta grid {})", samples.size(), used, theta_grid);
  return cert;
}

double curvature_constant(const Problem& problem, const std::vector<std::pair<Vector, Vector>>& pairs,
                          int theta_grid) {
  if (!problem.psi.is_indicator) throw UsageError("curvature_constant: psi must be a set indicator");
  if (theta_grid < 1) throw UsageError("curvature_constant: theta grid must be >= 1");
  double best = 0.0;
  for (const auto& [x, s] : pairs) {
    const Vector gx = problem.f.gradient(x);
    for (int j = 1; j <= theta_grid; ++j) {
      const double theta = static_cast<double>(j) / theta_grid;
      const double D = bregman(problem.f, step_point(x, s, theta), x, gx);
      best = std::max(best, 2.0 * D / (theta * theta));
    }
  }
  return best;
}

std::vector<Vector> growth_samples(const Problem& problem, int count, std::uint64_t seed) {
  if (count < 1) throw UsageError("growth_samples: count must be >= 1");
  Rng rng(seed);
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Vector x;
    switch (i % 4) {
      case 0:
        x = problem.psi.lmo(rng.log_uniform(1e-2, 1e2) * rng.normal_vector(problem.dimension));
        break;
      case 1:
        if (problem.optimum) {
          // Approach the optimum: small gaps are where r > 0 certificates bite.
          const Vector y = sample_domain_point(problem, rng);
          const double t = rng.log_uniform(1e-3, 1.0);
          x = problem.optimum->x + t * (y - problem.optimum->x);
          break;
        }
        [[fallthrough]];
      default:
        x = sample_domain_point(problem, rng);
    }
    if (problem.psi.contains(x)) out.push_back(std::move(x));
  }
  return out;
}

double recurrence_map(double b, double a, double t, double q, double r, double M) {
  if (b <= 0.0) return 0.0;
  const double inner = std::pow(t * power_1mr(b, r) / M, 1.0 / (q - 1.0));
  return b * (1.0 - a * std::min(1.0, inner));
}

RateEnvelope envelope_theorem1(double q, double r, double M, double gap0, long K) {
  check_qrM(q, r, M, "envelope_theorem1");
  if (!(gap0 > 0.0) || !std::isfinite(gap0)) throw UsageError("envelope_theorem1: gap0 must be positive");
  if (K < 0) throw UsageError("envelope_theorem1: horizon must be >= 0");
  RateEnvelope env = iterate_envelope(q, r, M, {(q - 1.0) / q, 1.0, M}, gap0, K);
  env.source = "theorem1";
  cross_check_exact(env);
  return env;
}

RateEnvelope envelope_theorem2(double q, double r, double M, double c, double rho, double gap0, long K) {
  check_qrM(q, r, M, "envelope_theorem2");
  check_relaxed(c, rho, "envelope_theorem2");
  if (!(gap0 > 0.0) || !std::isfinite(gap0)) throw UsageError("envelope_theorem2: gap0 must be positive");
  if (K < 0) throw UsageError("envelope_theorem2: horizon must be >= 0");
  const double t = q * (1.0 - c);
  RateEnvelope env = iterate_envelope(q, r, M, {c + rho - 1.0, t, M / t}, gap0, K);
  env.source = "theorem2";
  env.c = c;
  env.rho = rho;
  cross_check_relaxed(env);
  return env;
}

RateEnvelope envelope_subopt(double q, double r, double M, double subopt0, long K, std::optional<double> c,
                             std::optional<double> rho) {
  if (c.has_value() != rho.has_value()) throw UsageError("envelope_subopt: give both c and rho or neither");
  RateEnvelope env = c ? envelope_theorem2(q, r, M, *c, *rho, subopt0, K)
                       : envelope_theorem1(q, r, M, subopt0, K);
  env.source = c ? "theorem4" : "theorem3";
  return env;
}

double closed_form_linear(double q, double M, double gap0, long k) {
  const double factor = 1.0 - ((q - 1.0) / q) * std::min(1.0, std::pow(M, -1.0 / (q - 1.0)));
  return gap0 * std::pow(factor, static_cast<double>(k));
}

double closed_form_initial_linear(double q, double gap0, long k) {
  return gap0 * std::pow(1.0 / q, static_cast<double>(k));
}

double closed_form_sublinear(double q, double r, double M, double b_k0, long k0, long k) {
  const double base = std::pow(b_k0, (r - 1.0) / (q - 1.0)) +
                      ((1.0 - r) / q) * std::pow(M, -1.0 / (q - 1.0)) * static_cast<double>(k - k0);
  return std::pow(base, (q - 1.0) / (r - 1.0));
}

double closed_form_q0(double q, double M, long k) {
  const double denom = static_cast<double>(k) - 1.0 + std::pow(q, q / (q - 1.0));
  return M * std::pow(q / denom, q - 1.0);
}

double closed_form_holder(double q, double M, long k) {
  return M * std::pow(q / static_cast<double>(k), q - 1.0);
}

double closed_form_general(double q, double r, double M, long k) {
  const double base = std::pow(M, -(1.0 - r) / (q - 1.0)) +
                      ((1.0 - r) / q) * static_cast<double>(k) / std::pow(M, 1.0 / (q - 1.0));
  return std::pow(base, (q - 1.0) / (r - 1.0));
}

double closed_form_linear_relaxed(double q, double M, double c, double rho, double gap0, long k) {
  const double factor =
      1.0 - (c + rho - 1.0) * std::min(1.0, std::pow(q * (1.0 - c) / M, 1.0 / (q - 1.0)));
  return gap0 * std::pow(factor, static_cast<double>(k));
}

double closed_form_initial_linear_relaxed(double c, double rho, double gap0, long k) {
  return gap0 * std::pow(2.0 - c - rho, static_cast<double>(k));
}

double closed_form_sublinear_relaxed(double q, double r, double M, double c, double rho, double b_k0,
                                     long k0, long k) {
  const double base = std::pow(b_k0, (r - 1.0) / (q - 1.0)) +
                      ((1.0 - r) * (c + rho - 1.0) / (q - 1.0)) *
                          std::pow(q * (1.0 - c) / M, 1.0 / (q - 1.0)) * static_cast<double>(k - k0);
  return std::pow(base, (q - 1.0) / (r - 1.0));
}

CertificateReport check_certificate(const Trajectory& trajectory, const GrowthCertificate& cert,
                                    CertificateTarget which) {
  validate(cert);
  CertificateReport report;
  const auto& recs = trajectory.records;
  const std::size_t n = recs.size();
  report.recurrence_ok.assign(n, true);
  report.envelope_ok.assign(n, true);
  if (n == 0) {
    report.passed = true;
    report.note = "empty trajectory";
    return report;
  }

  std::vector<double> observed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (which == CertificateTarget::kGap) {
      observed[i] = recs[i].best_gap;
    } else if (recs[i].subopt) {
      observed[i] = *recs[i].subopt;
    } else {
      report.note = "suboptimality not recorded";
      report.first_failing_k = recs[i].k;
      return report;
    }
  }

  std::optional<std::pair<double, double>> relaxed;  // (c, rho)
  if (const auto* bt = std::get_if<Backtracking>(&trajectory.strategy)) {
    relaxed = std::make_pair(bt->c(), bt->rho());
  } else if (std::holds_alternative<OpenLoop>(trajectory.strategy)) {
    report.note = "open-loop steps carry no certificate";
    report.first_failing_k = recs.front().k;
    return report;
  }

  std::size_t start = 0;
  if (cert.kind == GrowthKind::kLocalGrowth) {
    while (start < n && !(recs[start].wolfe_gap < *cert.epsilon)) ++start;
    if (start == n) {
      report.passed = true;
      report.start_index = static_cast<long>(n);
      report.note = "no iterate entered the locality";
      return report;
    }
  }
  report.start_index = static_cast<long>(start);

  const double q = cert.q;
  const double r = cert.r;
  const double M = cert.M;
  const double a = relaxed ? relaxed->first + relaxed->second - 1.0 : (q - 1.0) / q;
  const double t = relaxed ? q * (1.0 - relaxed->first) : 1.0;
  const bool subopt = which == CertificateTarget::kSubopt;

  const double b0 = observed[start];
  const long k_start = recs[start].k;
  const long horizon = recs.back().k - k_start;
  if (b0 > 0.0) {
    report.envelope =
        relaxed ? (subopt ? envelope_subopt(q, r, M, b0, horizon, relaxed->first, relaxed->second)
                          : envelope_theorem2(q, r, M, relaxed->first, relaxed->second, b0, horizon))
                : (subopt ? envelope_subopt(q, r, M, b0, horizon) : envelope_theorem1(q, r, M, b0, horizon));
  } else {
    report.envelope.bounds.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
    report.envelope.q = q;
    report.envelope.r = r;
    report.envelope.M = M;
  }

  auto tolerance = [](double v) { return 1e-9 * (1.0 + std::abs(v)); };
  for (std::size_t i = start; i < n; ++i) {
    const double env = report.envelope.bounds[static_cast<std::size_t>(recs[i].k - k_start)];
    report.envelope_ok[i] = observed[i] <= env + tolerance(env);
    if (i + 1 < n && recs[i + 1].k == recs[i].k + 1) {
      const double next = recurrence_map(std::max(observed[i], 0.0), a, t, q, r, M);
      report.recurrence_ok[i] = observed[i + 1] <= next + tolerance(next);
    }
    if (!report.first_failing_k && (!report.envelope_ok[i] || !report.recurrence_ok[i]))
      report.first_failing_k = report.envelope_ok[i] ? recs[i + 1].k : recs[i].k;
  }
  report.passed = !report.first_failing_k.has_value();
  return report;
}

double bly_bound(double p, double beta0, const std::vector<double>& delta, long k) {
  if (!(p > 0.0)) throw UsageError("bly_bound: p must be positive");
  if (!(beta0 >= 0.0)) throw UsageError("bly_bound: beta0 must be nonnegative");
  if (k < 0 || static_cast<std::size_t>(k) > delta.size()) throw UsageError("bly_bound: k out of range");
  if (beta0 == 0.0) return 0.0;
  double sum = 0.0;
  for (long i = 0; i < k; ++i) {
    const double d = delta[static_cast<std::size_t>(i)];
    if (!(d >= 0.0)) throw UsageError("bly_bound: delta must be nonnegative");
    sum += d;
  }
  return std::pow(std::pow(beta0, -p) + p * sum, -1.0 / p);
}

RateFit rate_fit(const std::vector<double>& series, std::size_t window) {
  std::vector<double> ks(series.size());
  for (std::size_t i = 0; i < ks.size(); ++i) ks[i] = static_cast<double>(i);
  return rate_fit(ks, series, window);
}

RateFit rate_fit(const std::vector<double>& ks, const std::vector<double>& series, std::size_t window) {
  if (window < 3) throw UsageError("rate_fit: window must be >= 3");
  if (series.size() < window) throw UsageError("rate_fit: series shorter than window");
  if (ks.size() != series.size()) throw UsageError("rate_fit: abscissae and series differ in length");
  const std::size_t first = series.size() - window;
  auto slope = [&](auto abscissa) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = first; i < series.size(); ++i) {
      const double x = abscissa(ks[i]);
      const double y = std::log(series[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double w = static_cast<double>(window);
    const double denom = w * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (w * sxy - sx * sy) / denom;
  };
  for (std::size_t i = first; i < series.size(); ++i) {
    if (!(series[i] > 0.0) || !std::isfinite(series[i]))
      throw UsageError("rate_fit: series entries must be positive and finite");
  }
  RateFit fit;
  fit.order = slope([](double k) { return std::log(k + 1.0); });
  fit.linear_factor = std::exp(slope([](double k) { return k; }));
  return fit;
}

}  // namespace condgrad
