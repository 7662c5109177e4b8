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

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace condgrad {

/// Seeded generator used for every random instance and probe.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// maps raw words to doubles with explicit formulas, so draws are identical
/// across standard library implementations.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// exp(uniform(log lo, log hi)).
  double log_uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  Eigen::VectorXd normal_vector(Eigen::Index n);
  /// Uniform on the Euclidean unit sphere.
  Eigen::VectorXd unit_vector(Eigen::Index n);
  Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols);
  /// Haar-distributed orthogonal matrix.
  Eigen::MatrixXd orthogonal_matrix(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace condgrad
