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

/*
 * Dense complex Hermitian / positive-semidefinite operator algebra:
 * eigendecomposition, fractional powers restricted to the support,
 * support projectors and generalized inverses, Jordan products, traces.
 *
 * Everything here is a pure function of immutable inputs and safe for
 * concurrent invocation.
 */

#include <complex>

#include <Eigen/Dense>

#include "qbounds/errors.hpp"

namespace qbounds {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix with no symmetry guarantee (houses non-Hermitian
/// score operators and state-power ratios).
using GeneralOperator = ComplexMatrix;

/// Per-entry absolute tolerance for the Hermiticity check.
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues below this fraction of the largest one count as kernel.
inline constexpr double kSupportTol = 1e-10;
/// Eigenvalues above -kNegativityTol * lambda_max are clamped to zero;
/// anything lower is rejected.
inline constexpr double kNegativityTol = 1e-8;

/// Dense complex square matrix with Hermiticity enforced at construction.
class HermitianOperator {
  public:
    /// Validates squareness and entrywise Hermiticity within `tol`,
    /// then stores the exactly symmetrized matrix.
    explicit HermitianOperator(ComplexMatrix entries, double tol = kHermitianTol);

    static HermitianOperator zero(Eigen::Index dim);
    static HermitianOperator identity(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }
    double trace() const { return mat_.trace().real(); }

  private:
    ComplexMatrix mat_;
};

/// Checks that `op` is a valid state: eigenvalues >= -1e-10 and trace
/// within 1e-10 of `declared_trace`.  Throws otherwise.
void require_state(const HermitianOperator& op, double declared_trace = 1.0,
                   double tol = kHermitianTol);

struct EigDecomposition {
    RealVector eigenvalues;       // ascending
    ComplexMatrix eigenvectors;   // unitary, columns
};

EigDecomposition eig_hermitian(const HermitianOperator& A);

/// rho^s taken only on the support: sum over lambda > support_tol * lambda_max
/// of lambda^s |a><a|.  s = 0 yields the support projector, negative s the
/// generalized inverse powers.  Small negative eigenvalues (rounding debris
/// from quadrature-averaged states) are clamped to zero; anything below
/// -kNegativityTol * lambda_max raises NegativityError.
HermitianOperator frac_power_on_support(const HermitianOperator& rho, double s,
                                        double support_tol = kSupportTol);

/// (AB + BA) / 2
GeneralOperator jordan_product(const GeneralOperator& A, const GeneralOperator& B);

/// Re tr(A^dagger B rho)
double real_trace_form(const GeneralOperator& A, const GeneralOperator& B,
                       const HermitianOperator& rho);

}  // namespace qbounds
