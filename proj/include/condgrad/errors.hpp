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

#include <stdexcept>
#include <string>

namespace condgrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad dimension, parameter out
/// of range, missing metadata).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the effective domain of a function where a finite
/// value is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The oracles of a problem contradict each other, e.g. an LMO output with a
/// strongly negative Wolfe gap.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// The Armijo test fell below the roundoff resolution of the curve function
/// before accepting a step: the gap is numerically zero for this rule.
class StepResolutionError : public OracleError {
 public:
  using OracleError::OracleError;
};

/// Every sample handed to an estimator was unusable.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or trajectory files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace condgrad
