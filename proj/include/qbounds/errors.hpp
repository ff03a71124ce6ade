// Copyright 2026 The qbounds developers
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

namespace qbounds {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Structural precondition failure: wrong shape, broken symmetry,
/// broken normalization, parameter out of range.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A nominally positive-semidefinite operator carries a negative
/// eigenvalue beyond the accepted rounding budget.
class NegativityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// The displaced and undisplaced states are numerically orthogonal
/// everywhere, or a bound denominator vanished: the test point carries
/// no information.
class DegenerateTestPointError : public Error {
  public:
    using Error::Error;
};

/// The right-hand side of the Lyapunov-type equation has weight on the
/// kernel-kernel block of rho, so no exact solution exists.  Carries the
/// residual of the best solvable-component solution.
class UnsolvableComponentError : public Error {
  public:
    UnsolvableComponentError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_ = 0.0;
};

/// The information matrix G (or G - Delta) is singular or indefinite.
class SingularAssemblyError : public Error {
  public:
    using Error::Error;
};

/// A (model, method) combination that the library deliberately does not
/// support, e.g. the exact MMSE for multi-probe bosonic models.
class CapabilityError : public Error {
  public:
    using Error::Error;
};

/// A root bracket without a sign change.
class BracketError : public Error {
  public:
    using Error::Error;
};

/// The objective was non-finite over the whole scan domain.
class EmptyScanError : public Error {
  public:
    using Error::Error;
};

/// File or configuration trouble in the front end.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace qbounds
