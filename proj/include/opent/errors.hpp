// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPENT_ERRORS_HPP
#define OPENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar or spectral value fell outside the domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments violating its stated preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Matrix or field dimensions do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Off-diagonal Frobenius norm left when iteration stopped.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Random instance generation could not satisfy a theorem's hypotheses.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed exchange file (JSON instance, field, map, matrix).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace opent

#endif  // OPENT_ERRORS_HPP
