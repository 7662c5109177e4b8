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

#include "condgrad/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "condgrad/random.hpp"

namespace condgrad {

ExtendedReal::ExtendedReal(double v) {
  if (std::isnan(v)) throw DomainError("extended real: NaN value");
  if (std::isinf(v)) {
    if (v < 0) throw DomainError("extended real: -inf is not allowed");
    infinite_ = true;
    return;
  }
  value_ = v;
}

ExtendedReal ExtendedReal::infinity() {
  ExtendedReal r;
  r.infinite_ = true;
  return r;
}

double ExtendedReal::value() const {
  if (infinite_) throw DomainError("extended real: value requested from +inf");
  return value_;
}

double ExtendedReal::to_double() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.infinite_ || b.infinite_) throw DomainError("extended real: arithmetic with +inf");
  return ExtendedReal(a.value_ + b.value_);
}

ExtendedReal operator-(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.infinite_ || b.infinite_) throw DomainError("extended real: arithmetic with +inf");
  return ExtendedReal(a.value_ - b.value_);
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

Norm Norm::lp(double p) {
  if (!(p >= 1.0)) throw UsageError("lp norm requires p >= 1");
  if (p == 1.0) return l1();
  if (p == 2.0) return l2();
  return {Kind::kLp, p};
}

double Norm::operator()(const Vector& v) const {
  switch (kind) {
    case Kind::kL1:
      return v.lpNorm<1>();
    case Kind::kL2:
      return v.norm();
    case Kind::kLInf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
    case Kind::kLp: {
      const double scale = v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
      if (scale == 0.0) return 0.0;
      double sum = 0.0;
      for (Index i = 0; i < v.size(); ++i) sum += std::pow(std::abs(v[i]) / scale, p);
      return scale * std::pow(sum, 1.0 / p);
    }
  }
  return 0.0;
}

Norm Norm::dual() const {
  switch (kind) {
    case Kind::kL1:
      return linf();
    case Kind::kL2:
      return l2();
    case Kind::kLInf:
      return l1();
    case Kind::kLp:
      return lp(p / (p - 1.0));
  }
  return l2();
}

std::string Norm::tag() const {
  switch (kind) {
    case Kind::kL1:
      return "l1";
    case Kind::kL2:
      return "l2";
    case Kind::kLInf:
      return "linf";
    case Kind::kLp: {
      std::string s = std::to_string(p);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return "l" + s;
    }
  }
  return "l2";
}

bool operator==(const Norm& a, const Norm& b) {
  if (a.kind != b.kind) return false;
  return a.kind != Norm::Kind::kLp || a.p == b.p;
}

InstanceMetadata instance_metadata(const Problem& problem) {
  InstanceMetadata meta;
  meta.smoothness = problem.f.smoothness;
  meta.convexity = problem.psi.convexity;
  meta.psi_is_indicator = problem.psi.is_indicator;
  meta.constants = problem.constants;
  return meta;
}

void check_dimension(const Problem& problem, const Vector& x, const char* what) {
  if (x.size() != problem.dimension) {
    throw UsageError(std::string(what) + ": dimension " + std::to_string(x.size()) +
                     " does not match problem dimension " + std::to_string(problem.dimension));
  }
}

bool all_finite(const Vector& v) { return v.allFinite(); }

ExtendedReal primal_value(const Problem& problem, const Vector& x) {
  check_dimension(problem, x, "primal_value");
  const ExtendedReal psi = problem.psi.value(x);
  if (!psi.is_finite()) return ExtendedReal::infinity();
  const ExtendedReal f = problem.f.value(x);
  if (!f.is_finite()) return ExtendedReal::infinity();
  return f + psi;
}

Vector sample_domain_point(const Problem& problem, Rng& rng) {
  const Index n = problem.dimension;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const std::size_t m = 1 + rng.index(3);
    const bool vertex = rng.uniform() < 0.25;
    Vector x = Vector::Zero(n);
    double total = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const Vector g = rng.normal_vector(n) * rng.log_uniform(1e-2, 1e1);
      const Vector s = problem.psi.lmo(g);
      const double w = (vertex && j > 0) ? 0.0 : rng.uniform() + 1e-3;
      x += w * s;
      total += w;
    }
    x /= total;
    if (x.allFinite() && problem.psi.contains(x)) return x;
  }
  throw OracleError("sample_domain_point: LMO outputs do not yield domain points");
}

ValidationReport validate_problem(const Problem& problem, int probes, std::uint64_t seed,
                                  const ValidationTolerances& tol) {
  if (probes < 1) throw UsageError("validate_problem: probes must be >= 1");
  const Index n = problem.dimension;
  Rng rng(seed);
  ValidationReport report;
  report.probes = probes;

  // (a) gradient vs central differences at domain points.
  std::vector<Vector> comparison;
  for (int i = 0; i < probes; ++i) {
    Vector x;
    try {
      x = sample_domain_point(problem, rng);
    } catch (const OracleError&) {
      ++report.domain_failures;
      continue;
    }
    comparison.push_back(x);
    const Vector d = rng.unit_vector(n);
    const double h = 1e-6 * (1.0 + x.norm());
    const ExtendedReal fp = problem.f.value(x + h * d);
    const ExtendedReal fm = problem.f.value(x - h * d);
    const Vector g = problem.f.gradient(x);
    if (!fp.is_finite() || !fm.is_finite() || !g.allFinite()) {
      ++report.nonfinite_values;
      continue;
    }
    const double fd = (fp.value() - fm.value()) / (2.0 * h);
    const double gd = g.dot(d);
    report.max_gradient_discrepancy =
        std::max(report.max_gradient_discrepancy, std::abs(fd - gd) / std::max(1.0, std::abs(gd)));
  }

  // (b), (c) LMO optimality against comparison points and membership.
  std::vector<Vector> gradients;
  gradients.reserve(static_cast<std::size_t>(probes));
  for (int i = 0; i < probes; ++i) {
    gradients.push_back(rng.normal_vector(n) * rng.log_uniform(1e-2, 1e2));
  }
  std::vector<Vector> outputs;
  for (const Vector& g : gradients) {
    Vector s = problem.psi.lmo(g);
    outputs.push_back(s);
    if (s.allFinite() && problem.psi.contains(s)) comparison.push_back(s);
  }
  for (std::size_t i = 0; i < gradients.size(); ++i) {
    const Vector& g = gradients[i];
    const Vector& s = outputs[i];
    if (!s.allFinite() || !problem.psi.contains(s)) {
      ++report.domain_failures;
      continue;
    }
    const ExtendedReal psi_s = problem.psi.value(s);
    if (!psi_s.is_finite()) {
      ++report.domain_failures;
      continue;
    }
    const double obj_s = g.dot(s) + psi_s.value();
    for (const Vector& y : comparison) {
      const ExtendedReal psi_y = problem.psi.value(y);
      if (!psi_y.is_finite()) continue;
      const double obj_y = g.dot(y) + psi_y.value();
      report.max_lmo_suboptimality =
          std::max(report.max_lmo_suboptimality, (obj_s - obj_y) / (1.0 + std::abs(obj_s)));
    }
  }

  report.passed = report.domain_failures == 0 && report.nonfinite_values == 0 &&
                  report.max_gradient_discrepancy <= tol.gradient_relative &&
                  report.max_lmo_suboptimality <= tol.lmo_suboptimality;
  return report;
}

}  // namespace condgrad
