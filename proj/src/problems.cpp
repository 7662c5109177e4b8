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

#include "condgrad/problems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include "condgrad/random.hpp"
#include "condgrad/solver.hpp"

namespace condgrad {
namespace {

double lp_norm(const Vector& v, double p) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  if (p == 2.0) return v.norm();
  const auto a = (v.cwiseAbs() / scale).array();
  double sum = 0.0;
  if (p == 4.0) {
    sum = a.square().square().sum();
  } else if (p == 3.0) {
    sum = (a.square() * a).sum();
  } else {
    sum = a.pow(p).sum();
  }
  return scale * std::pow(sum, 1.0 / p);
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

struct SetGeometry {
  double operator()(const SimplexSet& s) const { return static_cast<double>(s.n); }
  double operator()(const LpBallSet& b) const { return b.radius; }
};

double set_scale(const SetDescriptor& set) { return std::visit(SetGeometry{}, set); }

/// Outward unit normal (l2) of the set boundary nearest to y.
Vector outward_normal(const SetDescriptor& set, const Vector& y) {
  if (const auto* ball = std::get_if<LpBallSet>(&set)) {
    Vector n(y.size());
    const double scale = std::max(y.cwiseAbs().maxCoeff(), 1e-300);
    for (Index i = 0; i < y.size(); ++i)
      n[i] = sign(y[i]) * std::pow(std::abs(y[i]) / scale, ball->p - 1.0);
    const double norm = n.norm();
    if (norm == 0.0) return Vector::Unit(y.size(), 0);
    return n / norm;
  }
  // Leaving the affine hull is the cheapest way out of the simplex.
  return Vector::Constant(y.size(), 1.0 / std::sqrt(static_cast<double>(y.size())));
}

Vector boundary_point(const SetDescriptor& set, const Vector& direction) {
  if (const auto* ball = std::get_if<LpBallSet>(&set)) {
    const double norm = lp_norm(direction, ball->p);
    if (norm == 0.0) return -ball->radius * Vector::Unit(direction.size(), 0);
    return ball->radius * direction / norm;
  }
  Vector w = direction.cwiseAbs();
  for (Index i = 0; i < w.size(); ++i) {
    if (w[i] < 0.3 * w.maxCoeff()) w[i] = 0.0;  // land on a face
  }
  const double total = w.sum();
  if (total == 0.0) return Vector::Unit(direction.size(), 0);
  return w / total;
}

struct PairSample {
  Vector x;
  Vector y;
};

PairSample sample_pair(const SetDescriptor& set, Rng& rng, int kind) {
  const Index n = set_dimension(set);
  switch (kind) {
    case 0:
      return {boundary_point(set, rng.normal_vector(n)), boundary_point(set, rng.normal_vector(n))};
    case 1: {
      const Vector x = boundary_point(set, rng.normal_vector(n));
      const double delta = rng.log_uniform(1e-3, 1.0) * set_scale(set) / std::max(1.0, 0.0 + n);
      return {x, boundary_point(set, x + delta * rng.unit_vector(n))};
    }
    case 2: {
      // Mirror pair around a coordinate axis, where lp balls are flattest.
      const Index axis = static_cast<Index>(rng.index(static_cast<std::size_t>(n)));
      const double delta = rng.log_uniform(1e-3, 1.0);
      Vector u = delta * rng.normal_vector(n);
      u[axis] = 1.0;
      Vector v = -u;
      v[axis] = 1.0;
      if (rng.uniform() < 0.5) {
        u[axis] = -1.0;
        v[axis] = -1.0;
      }
      return {boundary_point(set, u), boundary_point(set, v)};
    }
    default: {
      const Vector x = boundary_point(set, rng.normal_vector(n)) * rng.uniform();
      const Vector y = boundary_point(set, rng.normal_vector(n)) * rng.uniform();
      if (std::holds_alternative<SimplexSet>(set)) {
        // Scaled simplex points leave the set; mix with a vertex instead.
        const Vector e = Vector::Unit(n, static_cast<Index>(rng.index(static_cast<std::size_t>(n))));
        const double t = rng.uniform();
        return {boundary_point(set, x) * t + (1.0 - t) * e, boundary_point(set, y)};
      }
      return {x, y};
    }
  }
}

double line_projection_step(const Vector& x, const Vector& center, const Vector& d) {
  const double dd = d.squaredNorm();
  if (dd == 0.0) return 0.0;
  return std::clamp(-(x - center).dot(d) / dd, 0.0, 1.0);
}

CompositePart set_indicator(const SetDescriptor& set) {
  CompositePart psi;
  psi.is_indicator = true;
  psi.value = [set](const Vector& y) -> ExtendedReal {
    return set_contains(set, y) ? ExtendedReal(0.0) : ExtendedReal::infinity();
  };
  psi.contains = [set](const Vector& y) { return set_contains(set, y); };
  psi.lmo = [set](const Vector& g) { return set_lmo(set, g); };
  return psi;
}

void add_set_diameters(const SetDescriptor& set, ProblemConstants& constants) {
  constants.diameters.push_back({set_diameter_l2(set), Norm::l2()});
  if (std::holds_alternative<SimplexSet>(set)) {
    constants.diameters.push_back({2.0, Norm::l1()});
  } else {
    const auto& ball = std::get<LpBallSet>(set);
    constants.diameters.push_back({2.0 * ball.radius, ball.p == 2.0 ? Norm::l2() : Norm::lp(ball.p)});
  }
}

/// Attaches the measured set-convexity constant when it is positive.
void attach_set_convexity(const SetDescriptor& set, CompositePart& psi) {
  const auto* ball = std::get_if<LpBallSet>(&set);
  if (ball == nullptr) return;
  const double mu = measure_set_convexity(set, ball->p, kConvexitySamples);
  if (mu > 0.0) {
    psi.convexity = ConvexityInfo{ball->p, mu, Norm::l2(),
                                  fmt::format("bisection ({} samples)", kConvexitySamples)};
  }
}

Problem half_squared_distance(const std::string& name, const SetDescriptor& set, const Vector& shift) {
  Problem problem;
  problem.name = name;
  problem.dimension = shift.size();
  problem.f.value = [shift](const Vector& x) -> ExtendedReal { return 0.5 * (x - shift).squaredNorm(); };
  problem.f.gradient = [shift](const Vector& x) -> Vector { return x - shift; };
  problem.f.smoothness = SmoothnessInfo{2.0, 1.0, Norm::l2(), "analytic"};
  problem.psi = set_indicator(set);
  problem.line_minimizer = [shift](const Vector& x, const Vector& d) {
    return line_projection_step(x, shift, d);
  };
  add_set_diameters(set, problem.constants);
  return problem;
}

std::string vector_tag(const Vector& v) {
  std::string out = "[";
  for (Index i = 0; i < std::min<Index>(v.size(), 4); ++i) {
    if (i > 0) out += ",";
    out += fmt::format("{:.6g}", v[i]);
  }
  if (v.size() > 4) out += ",...";
  return out + "]";
}

}  // namespace

std::string describe(const SetDescriptor& set) {
  if (const auto* ball = std::get_if<LpBallSet>(&set))
    return fmt::format("lp_ball(n={},p={},r={})", ball->n, ball->p, ball->radius);
  return fmt::format("simplex(n={})", std::get<SimplexSet>(set).n);
}

Index set_dimension(const SetDescriptor& set) {
  return std::visit([](const auto& s) { return s.n; }, set);
}

double set_violation(const SetDescriptor& set, const Vector& y) {
  if (y.size() != set_dimension(set)) throw UsageError("set_violation: dimension mismatch");
  if (!y.allFinite()) return std::numeric_limits<double>::infinity();
  if (const auto* ball = std::get_if<LpBallSet>(&set)) return lp_norm(y, ball->p) - ball->radius;
  return std::max(-y.minCoeff(), std::abs(y.sum() - 1.0));
}

bool set_contains(const SetDescriptor& set, const Vector& y) {
  if (y.size() != set_dimension(set)) return false;
  return set_violation(set, y) <= kMembershipSlack * (1.0 + set_scale(set));
}

Vector set_lmo(const SetDescriptor& set, const Vector& g) {
  const Index n = set_dimension(set);
  if (g.size() != n) throw UsageError("lmo: gradient has the wrong dimension");
  if (!g.allFinite()) throw OracleError("lmo: non-finite gradient");
  if (std::holds_alternative<SimplexSet>(set)) {
    Index j = 0;
    for (Index i = 1; i < n; ++i) {
      if (g[i] < g[j]) j = i;
    }
    return Vector::Unit(n, j);
  }
  const auto& ball = std::get<LpBallSet>(set);
  const double scale = g.cwiseAbs().maxCoeff();
  if (scale == 0.0) return -ball.radius * Vector::Unit(n, 0);
  Vector w(n);
  for (Index i = 0; i < n; ++i)
    w[i] = sign(g[i]) * std::pow(std::abs(g[i]) / scale, 1.0 / (ball.p - 1.0));
  return -ball.radius * w / lp_norm(w, ball.p);
}

double set_diameter_l2(const SetDescriptor& set) {
  if (const auto* ball = std::get_if<LpBallSet>(&set)) {
    const double expo = std::max(0.0, 0.5 - 1.0 / ball->p);
    return 2.0 * ball->radius * std::pow(static_cast<double>(ball->n), expo);
  }
  return std::sqrt(2.0);
}

namespace {

/// Perturbed points m + (mu / p) w z share (m, w, z) across trial values of mu.
struct ConvexityProbe {
  Vector m;
  double weight;  // theta (1 - theta) ||y - x||^p
  Vector z;
};

std::vector<ConvexityProbe> convexity_probes(const SetDescriptor& set, double p, int samples,
                                             std::uint64_t seed) {
  if (samples < 1) throw UsageError("verify_set_uniform_convexity: samples must be >= 1");
  if (!(p >= 2.0)) throw UsageError("verify_set_uniform_convexity: p must be >= 2");
  const Index n = set_dimension(set);
  Rng rng(seed);
  std::vector<ConvexityProbe> probes;
  probes.reserve(2 * static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const PairSample pair = sample_pair(set, rng, i % 4);
    const double theta = (i % 2 == 0) ? 0.5 : rng.uniform(1e-3, 1.0 - 1e-3);
    Vector m = pair.x + theta * (pair.y - pair.x);
    const double weight = theta * (1.0 - theta) * std::pow((pair.y - pair.x).norm(), p);
    Vector normal = outward_normal(set, m);
    probes.push_back({m, weight, std::move(normal)});
    probes.push_back({std::move(m), weight, rng.unit_vector(n)});
  }
  return probes;
}

UniformConvexityCheck scan_probes(const SetDescriptor& set, const std::vector<ConvexityProbe>& probes,
                                  double p, double mu, bool stop_on_failure) {
  if (!(mu >= 0.0)) throw UsageError("verify_set_uniform_convexity: mu must be >= 0");
  const double slack = kConvexitySlack * (1.0 + set_scale(set));
  UniformConvexityCheck out;
  out.samples = static_cast<int>(probes.size() / 2);
  out.max_violation = -std::numeric_limits<double>::infinity();
  Vector point;
  for (const ConvexityProbe& probe : probes) {
    point = probe.m + (mu / p) * probe.weight * probe.z;
    out.max_violation = std::max(out.max_violation, set_violation(set, point));
    if (stop_on_failure && out.max_violation > slack) break;
  }
  out.holds = out.max_violation <= slack;
  return out;
}

}  // namespace

UniformConvexityCheck verify_set_uniform_convexity(const SetDescriptor& set, double p, double mu,
                                                   int samples, std::uint64_t seed) {
  if (!(mu >= 0.0)) throw UsageError("verify_set_uniform_convexity: mu must be >= 0");
  return scan_probes(set, convexity_probes(set, p, samples, seed), p, mu, false);
}

double measure_set_convexity(const SetDescriptor& set, double p, int samples, std::uint64_t seed) {
  using Key = std::tuple<std::string, double, int, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{describe(set), p, samples, seed};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::vector<ConvexityProbe> probes = convexity_probes(set, p, samples, seed);
  auto holds = [&](double mu) { return scan_probes(set, probes, p, mu, true).holds; };
  double lo = 0.0;
  double hi = 1e-6;
  if (holds(hi)) {
    lo = hi;
    hi = 1.0;
    while (hi < 1e8 && holds(hi)) {
      lo = hi;
      hi *= 2.0;
    }
    for (int it = 0; it < 60 && hi - lo > 1e-8 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (holds(mid) ? lo : hi) = mid;
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, lo);
  return lo;
}

Vector random_shift(Index n, double norm, std::uint64_t seed) {
  Rng rng(seed);
  return norm * rng.unit_vector(n);
}

Problem quadratic_over_simplex(Index n, std::uint64_t seed) {
  if (n < 2) throw UsageError("quadratic_over_simplex: n must be >= 2");
  Rng rng(seed);
  const Matrix U = rng.orthogonal_matrix(n);
  Vector lambda(n);
  for (Index i = 0; i < n; ++i) lambda[i] = rng.uniform();
  lambda[0] = 1.0;
  const Matrix Q = U * lambda.asDiagonal() * U.transpose();
  const Vector c = 0.3 * rng.normal_vector(n);
  Problem problem = quadratic_over_simplex(0.5 * (Q + Q.transpose()), c);
  problem.name = fmt::format("quadratic_over_simplex(n={},seed={})", n, seed);
  return problem;
}

Problem quadratic_over_simplex(const Matrix& Q, const Vector& c, std::optional<KnownOptimum> optimum) {
  const Index n = c.size();
  if (n < 2) throw UsageError("quadratic_over_simplex: n must be >= 2");
  if (Q.rows() != n || Q.cols() != n) throw UsageError("quadratic_over_simplex: Q must be n x n");
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(Q, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-12)
    throw UsageError("quadratic_over_simplex: Q must be positive semidefinite");
  const double lmax = eig.eigenvalues().maxCoeff();

  const SetDescriptor set = SimplexSet{n};
  Problem problem;
  problem.name = fmt::format("quadratic_over_simplex(n={})", n);
  problem.dimension = n;
  problem.f.value = [Q, c](const Vector& x) -> ExtendedReal { return 0.5 * x.dot(Q * x) + c.dot(x); };
  problem.f.gradient = [Q, c](const Vector& x) -> Vector { return Q * x + c; };
  if (lmax > 0.0) problem.f.smoothness = SmoothnessInfo{2.0, lmax, Norm::l2(), "analytic"};
  problem.psi = set_indicator(set);
  problem.line_minimizer = [Q, c](const Vector& x, const Vector& d) {
    const double slope = (Q * x + c).dot(d);
    const double curvature = d.dot(Q * d);
    if (curvature <= 0.0) return slope < 0.0 ? 1.0 : 0.0;
    return std::clamp(-slope / curvature, 0.0, 1.0);
  };
  add_set_diameters(set, problem.constants);
  problem.optimum = std::move(optimum);
  return problem;
}

Problem quadratic_over_lp_ball(Index n, double p, double radius, const Vector& shift,
                               std::uint64_t seed) {
  if (n < 1) throw UsageError("quadratic_over_lp_ball: n must be >= 1");
  if (!(p >= 2.0) || !std::isfinite(p)) throw UsageError("quadratic_over_lp_ball: p must be >= 2");
  if (!(radius > 0.0)) throw UsageError("quadratic_over_lp_ball: radius must be positive");
  if (shift.size() != n) throw UsageError("quadratic_over_lp_ball: shift has the wrong dimension");
  if (!shift.allFinite()) throw UsageError("quadratic_over_lp_ball: shift must be finite");

  const SetDescriptor set = LpBallSet{n, p, radius};
  Problem problem = half_squared_distance(
      fmt::format("quadratic_over_lp_ball(n={},p={},r={},c={},seed={})", n, p, radius,
                  vector_tag(shift), seed),
      set, shift);
  attach_set_convexity(set, problem.psi);

  const double outside = lp_norm(shift, p) - radius;
  if (outside <= 0.0) {
    problem.optimum = KnownOptimum{shift, 0.0};
    return problem;
  }
  Index nonzero = 0;
  Index axis = 0;
  for (Index i = 0; i < n; ++i) {
    if (shift[i] != 0.0) {
      ++nonzero;
      axis = i;
    }
  }
  if (p == 2.0 || nonzero == 1) {
    // Projection is explicit: radial for p = 2, the axis point otherwise.
    const Vector xs = p == 2.0 ? Vector(radius * shift / shift.norm())
                               : Vector(sign(shift[axis]) * radius * Vector::Unit(n, axis));
    const double dist = (xs - shift).norm();
    problem.optimum = KnownOptimum{xs, 0.5 * dist * dist};
    problem.constants.gradient_lower_bound = NormedConstant{dist, Norm::l2()};
    return problem;
  }
  // ||grad f|| = ||x - c|| >= dist(c, C) = sqrt(2 f*), and f* >= primal - gap.
  const Trajectory traj = run(problem, ExactLineSearch{}, set_lmo(set, -shift), 2000, 0.0);
  const IterateRecord& last = traj.records.back();
  const double fstar_lower = last.primal - last.best_gap;
  if (fstar_lower > 0.0)
    problem.constants.gradient_lower_bound = NormedConstant{std::sqrt(2.0 * fstar_lower), Norm::l2()};
  return problem;
}

Problem smooth_plus_strongly_convex(Index n, double mu, std::uint64_t seed) {
  if (n < 1) throw UsageError("smooth_plus_strongly_convex: n must be >= 1");
  Rng rng(seed);
  Problem problem = smooth_plus_strongly_convex(rng.normal_vector(n), mu);
  problem.name = fmt::format("smooth_plus_strongly_convex(n={},mu={},seed={})", n, mu, seed);
  return problem;
}

Problem smooth_plus_strongly_convex(const Vector& shift, double mu) {
  if (shift.size() < 1) throw UsageError("smooth_plus_strongly_convex: n must be >= 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw UsageError("smooth_plus_strongly_convex: mu must be positive");
  Problem problem;
  problem.name = fmt::format("smooth_plus_strongly_convex(c={},mu={})", vector_tag(shift), mu);
  problem.dimension = shift.size();
  problem.f.value = [shift](const Vector& x) -> ExtendedReal { return 0.5 * (x - shift).squaredNorm(); };
  problem.f.gradient = [shift](const Vector& x) -> Vector { return x - shift; };
  problem.f.smoothness = SmoothnessInfo{2.0, 1.0, Norm::l2(), "analytic"};
  problem.psi.value = [mu](const Vector& y) -> ExtendedReal { return 0.5 * mu * y.squaredNorm(); };
  problem.psi.lmo = [mu](const Vector& g) -> Vector { return -g / mu; };
  problem.psi.contains = [](const Vector& y) { return y.allFinite(); };
  problem.psi.convexity = ConvexityInfo{2.0, mu, Norm::l2(), "analytic"};
  problem.line_minimizer = [shift, mu](const Vector& x, const Vector& d) {
    const double dd = d.squaredNorm();
    if (dd == 0.0) return 0.0;
    return std::clamp(-((x - shift).dot(d) + mu * x.dot(d)) / ((1.0 + mu) * dd), 0.0, 1.0);
  };
  problem.optimum = KnownOptimum{shift / (1.0 + mu), 0.5 * shift.squaredNorm() * mu / (1.0 + mu)};
  return problem;
}

Problem holder_objective_over_set(Index n, double nu, const SetDescriptor& set, const Vector& shift,
                                  std::uint64_t seed) {
  if (!(nu > 0.0 && nu <= 1.0)) throw UsageError("holder_objective_over_set: nu must lie in (0, 1]");
  if (n < 1 || set_dimension(set) != n) throw UsageError("holder_objective_over_set: set dimension must equal n");
  if (shift.size() != n) throw UsageError("holder_objective_over_set: shift has the wrong dimension");
  const double q = 1.0 + nu;

  Problem problem;
  problem.name = fmt::format("holder_objective(n={},nu={},set={},c={},seed={})", n, nu, describe(set),
                             vector_tag(shift), seed);
  problem.dimension = n;
  problem.f.value = [shift, q](const Vector& x) -> ExtendedReal {
    return std::pow((x - shift).norm(), q) / q;
  };
  problem.f.gradient = [shift, nu](const Vector& x) -> Vector {
    const Vector d = x - shift;
    const double r = d.norm();
    if (r == 0.0) return Vector::Zero(d.size());
    if (nu == 1.0) return d;
    return std::pow(r, nu - 1.0) * d;
  };
  problem.psi = set_indicator(set);
  problem.line_minimizer = [shift](const Vector& x, const Vector& d) {
    return line_projection_step(x, shift, d);
  };
  problem.constants.holder_nu = nu;
  add_set_diameters(set, problem.constants);
  attach_set_convexity(set, problem.psi);

  // ||r^{nu-1} r - s^{nu-1} s|| <= 2^{1-nu} ||r - s||^nu; confirm on samples.
  const double candidate = std::pow(2.0, 1.0 - nu);
  Rng rng(seed ^ 0x4f1bbcdcbfa53e0bULL);
  double sampled = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Vector x = sample_domain_point(problem, rng);
    const Vector y = (i % 3 == 0) ? Vector(shift + 1e-3 * rng.unit_vector(n)) : sample_domain_point(problem, rng);
    const double dist = (x - y).norm();
    if (dist < 1e-12) continue;
    sampled = std::max(sampled, (problem.f.gradient(x) - problem.f.gradient(y)).norm() / std::pow(dist, nu));
  }
  const double L = std::max(candidate, sampled);
  problem.f.smoothness = SmoothnessInfo{
      q, L, Norm::l2(), fmt::format("holder-candidate 2^(1-nu) (sampled max {:.6g})", sampled)};
  return problem;
}

Problem error_bound_instance(Index n) {
  if (n < 1) throw UsageError("error_bound_instance: n must be >= 1");
  Problem problem = error_bound_instance(Vector::Zero(n));
  problem.name = fmt::format("error_bound_instance(n={})", n);
  return problem;
}

Problem error_bound_instance(const Vector& center) {
  const Index n = center.size();
  if (n < 1) throw UsageError("error_bound_instance: n must be >= 1");
  if (!(center.norm() <= 1.0 + 1e-12)) throw UsageError("error_bound_instance: center must lie in the unit ball");
  const SetDescriptor set = LpBallSet{n, 2.0, 1.0};
  Problem problem;
  problem.name = fmt::format("error_bound_instance(center={})", vector_tag(center));
  problem.dimension = n;
  problem.f.value = [center](const Vector& x) -> ExtendedReal { return (x - center).squaredNorm(); };
  problem.f.gradient = [center](const Vector& x) -> Vector { return 2.0 * (x - center); };
  problem.f.smoothness = SmoothnessInfo{2.0, 2.0, Norm::l2(), "analytic"};
  problem.psi = set_indicator(set);
  attach_set_convexity(set, problem.psi);
  problem.line_minimizer = [center](const Vector& x, const Vector& d) {
    return line_projection_step(x, center, d);
  };
  problem.optimum = KnownOptimum{center, 0.0};
  problem.constants.error_bound = ErrorBoundInfo{0.5, 1.0, Norm::l2()};
  add_set_diameters(set, problem.constants);
  return problem;
}

Problem local_scaling_instance(Index n) {
  if (n < 2) throw UsageError("local_scaling_instance: n must be >= 2");
  const SetDescriptor set = LpBallSet{n, 2.0, 1.0};
  Problem problem = half_squared_distance(fmt::format("local_scaling_instance(n={})", n), set,
                                          2.0 * Vector::Unit(n, 0));
  attach_set_convexity(set, problem.psi);
  problem.optimum = KnownOptimum{Vector::Unit(n, 0), 0.5};
  problem.constants.local_scaling = LocalScalingInfo{0.5, 2.0, Norm::l2()};
  problem.constants.holder_nu = 1.0;
  problem.constants.gradient_lower_bound = NormedConstant{1.0, Norm::l2()};
  return problem;
}

}  // namespace condgrad
