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

#include "condgrad/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/LU>
#include <Eigen/SVD>
#include <fmt/format.h>

#include "condgrad/random.hpp"

namespace condgrad {

Reparametrization::Reparametrization(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != A_.cols()) throw UsageError("reparametrization: A must be square");
  if (A_.rows() != b_.size()) throw UsageError("reparametrization: b must match A");
  if (A_.rows() < 1) throw UsageError("reparametrization: dimension must be >= 1");
  if (!A_.allFinite() || !b_.allFinite()) throw UsageError("reparametrization: entries must be finite");
  const Eigen::JacobiSVD<Matrix> svd(A_);
  const auto& sv = svd.singularValues();
  const double smax = sv.maxCoeff();
  const double smin = sv.minCoeff();
  if (!(smin > 1e-14 * smax)) throw UsageError("reparametrization: A is singular");
  condition_ = smax / smin;
  A_inv_ = A_.partialPivLu().inverse();
  const double residual = (A_ * A_inv_ - Matrix::Identity(A_.rows(), A_.cols())).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-8 * condition_))
    throw UsageError("reparametrization: inverse is inaccurate; A is too ill-conditioned");
}

Reparametrization Reparametrization::identity(Index n) {
  return Reparametrization(Matrix::Identity(n, n), Vector::Zero(n));
}

Vector Reparametrization::forward(const Vector& x_tilde) const { return A_ * x_tilde + b_; }

Vector Reparametrization::inverse(const Vector& x) const { return A_inv_ * (x - b_); }

Vector Reparametrization::gradient_to_original(const Vector& g_tilde) const {
  return A_inv_.transpose() * g_tilde;
}

Reparametrization random_reparametrization(Index n, double condition, std::uint64_t seed) {
  if (n < 1) throw UsageError("random_reparametrization: n must be >= 1");
  if (!(condition >= 1.0) || !std::isfinite(condition))
    throw UsageError("random_reparametrization: condition must be >= 1");
  Rng rng(seed);
  const Matrix U = rng.orthogonal_matrix(n);
  const Matrix V = rng.orthogonal_matrix(n);
  Vector sigma(n);
  for (Index i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    sigma[i] = std::pow(condition, t);
  }
  const Vector b = 0.5 * rng.normal_vector(n);
  return Reparametrization(U * sigma.asDiagonal() * V.transpose(), b);
}

Problem transport_problem(const Problem& problem, const Reparametrization& rep) {
  if (problem.dimension != rep.dimension())
    throw UsageError("transport_problem: dimension of the map does not match the problem");
  Problem out;
  out.name = "transported(" + problem.name + ")";
  out.dimension = problem.dimension;

  const auto f = problem.f;
  const auto psi = problem.psi;
  out.f.value = [f, rep](const Vector& xt) { return f.value(rep.forward(xt)); };
  out.f.gradient = [f, rep](const Vector& xt) -> Vector {
    return rep.A().transpose() * f.gradient(rep.forward(xt));
  };
  out.psi.value = [psi, rep](const Vector& xt) { return psi.value(rep.forward(xt)); };
  out.psi.contains = [psi, rep](const Vector& xt) { return psi.contains(rep.forward(xt)); };
  out.psi.lmo = [psi, rep](const Vector& gt) -> Vector {
    return rep.inverse(psi.lmo(rep.gradient_to_original(gt)));
  };
  out.psi.is_indicator = psi.is_indicator;
  if (problem.line_minimizer) {
    const LineMinimizer line = problem.line_minimizer;
    out.line_minimizer = [line, rep](const Vector& xt, const Vector& dt) {
      return line(rep.forward(xt), rep.A() * dt);
    };
  }
  if (problem.optimum) out.optimum = KnownOptimum{rep.inverse(problem.optimum->x), problem.optimum->value};
  return out;
}

namespace {

// Relative size of the start perturbation used to measure a trajectory's own
// roundoff sensitivity.
constexpr double kNoiseFloorStart = 1e-15;

struct NoiseFloor {
  std::vector<double> iterate;  // running maxima, per record
  std::vector<double> gap;
  std::vector<double> best_gap;
};

// Drift between a run and the same run started a roundoff-sized step from x0
// toward s_0. No transport is involved, so a faulty transport cannot inflate
// it.
NoiseFloor noise_floor(const Problem& problem, const StepsizeStrategy& strategy, const Trajectory& reference,
                       const RunOptions& options) {
  NoiseFloor out;
  if (reference.records.empty()) return out;
  const IterateRecord& r0 = reference.records.front();
  const Vector start = (1.0 - kNoiseFloorStart) * r0.x + kNoiseFloorStart * r0.s;
  const Trajectory b = run(problem, strategy, start, options);
  double xi = 0.0, g = 0.0, bg = 0.0;
  for (std::size_t i = 0; i < std::min(reference.records.size(), b.records.size()); ++i) {
    const IterateRecord& ra = reference.records[i];
    const IterateRecord& rb = b.records[i];
    xi = std::max(xi, (ra.x - rb.x).norm() / (1.0 + ra.x.norm()));
    g = std::max(g, std::abs(ra.wolfe_gap - rb.wolfe_gap) / (1.0 + std::abs(ra.wolfe_gap)));
    bg = std::max(bg, std::abs(ra.best_gap - rb.best_gap) / (1.0 + std::abs(ra.best_gap)));
    out.iterate.push_back(xi);
    out.gap.push_back(g);
    out.best_gap.push_back(bg);
  }
  return out;
}

}  // namespace

InvarianceReport paired_run(const Problem& problem, const Reparametrization& rep,
                            const StepsizeStrategy& strategy, const Vector& x0, long iterations) {
  InvarianceReport report;
  report.condition = rep.condition();
  report.condition_limited = rep.condition() > kConditionReference;
  report.tolerance_scale = std::max(1.0, rep.condition() / kConditionReference);
  if (report.condition_limited) report.note = "condition-limited: tolerances scaled by condition/100";

  RunOptions options;
  options.max_iters = iterations;
  Trajectory original;
  Trajectory transported;
  try {
    const Problem tp = transport_problem(problem, rep);
    original = run(problem, strategy, x0, options);
    transported = run(tp, strategy, rep.inverse(x0), options);
  } catch (const Error& e) {
    report.note = std::string("run failed: ") + e.what();
    return report;
  }

  const std::size_t n = std::min(original.records.size(), transported.records.size());
  report.compared = static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IterateRecord& a = original.records[i];
    const IterateRecord& t = transported.records[i];
    report.gap_deviation.push_back(std::abs(a.wolfe_gap - t.wolfe_gap) / (1.0 + std::abs(a.wolfe_gap)));
    report.best_gap_deviation.push_back(std::abs(a.best_gap - t.best_gap) / (1.0 + std::abs(a.best_gap)));
    double dtheta = 0.0;
    if (a.theta && t.theta) dtheta = std::abs(*a.theta - *t.theta);
    report.theta_deviation.push_back(dtheta);
    const double segment = (a.s - a.x).norm();
    const double resolution = segment > 0.0 ? std::max(1.0, (1.0 + a.x.norm()) / segment) : 1.0;
    if (resolution > 1.0 && a.theta) ++report.theta_resolution_limited;
    report.theta_threshold.push_back(kInvarianceThetaTolerance * report.tolerance_scale * resolution);
    bool flat = false;
    if (a.theta && t.theta && dtheta > report.theta_threshold.back()) {
      const auto h = [&](double th) {
        const Vector y = (1.0 - th) * a.x + th * a.s;
        const ExtendedReal v = problem.psi.value(y);
        return v.is_finite() ? problem.f.value(y).value() + v.value() : std::numeric_limits<double>::infinity();
      };
      const double ha = h(*a.theta);
      const double ht = h(*t.theta);
      flat = std::abs(ha - ht) <= kInvarianceGapTolerance * report.tolerance_scale * (1.0 + std::abs(ha));
      if (flat) ++report.theta_flat_limited;
    }
    report.theta_value_equivalent.push_back(flat);
    report.iterate_deviation.push_back((a.x - rep.forward(t.x)).norm() / (1.0 + a.x.norm()));
  }
  auto max_of = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
  report.max_gap_deviation = max_of(report.gap_deviation);
  report.max_best_gap_deviation = max_of(report.best_gap_deviation);
  report.max_theta_deviation = max_of(report.theta_deviation);
  report.max_iterate_deviation = max_of(report.iterate_deviation);

  const double s = report.tolerance_scale;
  if (report.theta_resolution_limited > 0) {
    if (!report.note.empty()) report.note += "; ";
    report.note += fmt::format("theta compared at segment resolution on {} records", report.theta_resolution_limited);
  }
  if (report.theta_flat_limited > 0) {
    if (!report.note.empty()) report.note += "; ";
    report.note += fmt::format("theta values differ on a flat line objective on {} records", report.theta_flat_limited);
  }
  bool theta_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    theta_ok = theta_ok && (report.theta_deviation[i] <= report.theta_threshold[i] || report.theta_value_equivalent[i]);
  const double iterate_tol = kInvarianceIterateTolerance * rep.condition();
  const double gap_tol = kInvarianceGapTolerance * s;
  report.iterate_threshold.assign(n, iterate_tol);
  report.gap_threshold.assign(n, gap_tol);
  report.best_gap_threshold.assign(n, gap_tol);
  auto within = [n](const std::vector<double>& dev, const std::vector<double>& thr) {
    for (std::size_t i = 0; i < n; ++i)
      if (dev[i] > thr[i]) return false;
    return true;
  };
  if (!within(report.iterate_deviation, report.iterate_threshold) ||
      !within(report.gap_deviation, report.gap_threshold) ||
      !within(report.best_gap_deviation, report.best_gap_threshold)) {
    // Oracles or gradients that amplify roundoff make a run drift from itself
    // under a roundoff-sized change of start; that drift is the noise floor.
    NoiseFloor floor;
    try {
      floor = noise_floor(problem, strategy, original, options);
    } catch (const Error&) {
      floor = NoiseFloor{};
    }
    const double k = kNoiseFloorFactor * rep.condition();
    for (std::size_t i = 0; i < n && i < floor.iterate.size(); ++i) {
      report.iterate_threshold[i] = std::max(iterate_tol, k * floor.iterate[i]);
      report.gap_threshold[i] = std::max(gap_tol, k * floor.gap[i]);
      report.best_gap_threshold[i] = std::max(gap_tol, k * floor.best_gap[i]);
    }
    report.noise_floor_limited = !floor.iterate.empty() && (report.iterate_threshold.back() > iterate_tol ||
                                                            report.gap_threshold.back() > gap_tol);
    if (report.noise_floor_limited) {
      if (!report.note.empty()) report.note += "; ";
      report.note += fmt::format(
          "tolerances raised to the trajectory noise floor (iterate drift {:.3e}, gap drift {:.3e} from a {:.0e} "
          "start perturbation)",
          floor.iterate.back(), floor.gap.back(), kNoiseFloorStart);
    }
  }
  report.passed = within(report.gap_deviation, report.gap_threshold) &&
                  within(report.best_gap_deviation, report.best_gap_threshold) && theta_ok &&
                  within(report.iterate_deviation, report.iterate_threshold);
  if (original.records.size() != transported.records.size()) {
    // The shorter run stopped on a gap at the zero threshold; the surplus
    // records of the other run must be within tolerance of that zero gap.
    const Trajectory& longer = original.records.size() > n ? original : transported;
    for (std::size_t i = n; i < longer.records.size(); ++i) {
      const double wg = std::abs(longer.records[i].wolfe_gap);
      if (wg / (1.0 + wg) > std::max(gap_tol, report.gap_threshold.empty() ? 0.0 : report.gap_threshold.back()))
        report.passed = false;
    }
    if (!report.note.empty()) report.note += "; ";
    report.note += fmt::format("runs stopped at different iterations ({} vs {} records)", original.records.size(),
                               transported.records.size());
  }
  return report;
}

CurveInvarianceCheck check_curve_invariance(const Problem& problem, const Reparametrization& rep,
                                            int samples, std::uint64_t seed) {
  if (samples < 1) throw UsageError("check_curve_invariance: samples must be >= 1");
  const Problem tp = transport_problem(problem, rep);
  Rng rng(seed);
  CurveInvarianceCheck out;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    const Vector x = sample_domain_point(problem, rng);
    const double theta = rng.uniform(1e-3, 1.0);
    const Vector xt = rep.inverse(x);
    const Vector gt = tp.f.gradient(xt);
    const Vector st = tp.psi.lmo(gt);
    const Vector g = problem.f.gradient(x);
    const Vector s = problem.psi.lmo(g);
    const double D = curve_gap(problem, x, g, s, theta);
    const double Dt = curve_gap(tp, xt, gt, st, theta);
    out.max_deviation = std::max(out.max_deviation, std::abs(D - Dt) / (1.0 + std::abs(D)));
  }
  out.passed = out.max_deviation <= 1e-9 * std::max(1.0, rep.condition() / kConditionReference);
  return out;
}

}  // namespace condgrad
