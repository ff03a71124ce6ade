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

#include "qbounds/linalg.hpp"

#include <cmath>
#include <string>

namespace qbounds {

HermitianOperator::HermitianOperator(ComplexMatrix entries, double tol) {
    if (entries.rows() == 0 || entries.rows() != entries.cols()) {
        throw ValidationError("HermitianOperator: matrix must be square and non-empty, got " +
                              std::to_string(entries.rows()) + "x" +
                              std::to_string(entries.cols()));
    }
    const double asym = (entries - entries.adjoint().eval()).cwiseAbs().maxCoeff();
    if (!(asym <= 2.0 * tol)) {  // entrywise |a_ij - conj(a_ji)| <= tol twice over
        throw ValidationError("HermitianOperator: matrix is not Hermitian, max |A - A^dagger| = " +
                              std::to_string(asym));
    }
    mat_ = 0.5 * (entries + entries.adjoint().eval());
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
    return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
    return HermitianOperator(ComplexMatrix::Identity(dim, dim));
}

void require_state(const HermitianOperator& op, double declared_trace, double tol) {
    if (std::abs(op.trace() - declared_trace) > tol) {
        throw ValidationError("state trace " + std::to_string(op.trace()) +
                              " differs from declared " + std::to_string(declared_trace));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol) {
        throw NegativityError("state has eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
    }
}

EigDecomposition eig_hermitian(const HermitianOperator& A) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(A.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error("eig_hermitian: eigensolver failed to converge");
    }
    return EigDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

HermitianOperator frac_power_on_support(const HermitianOperator& rho, double s,
                                        double support_tol) {
    EigDecomposition eig = eig_hermitian(rho);
    const Eigen::Index d = rho.dim();
    const double lambda_max = eig.eigenvalues.maxCoeff();
    if (lambda_max <= 0.0) {
        // Zero (or numerically zero) operator: every power on the support is zero.
        return HermitianOperator::zero(d);
    }
    const double lambda_min = eig.eigenvalues.minCoeff();
    if (lambda_min < -kNegativityTol * lambda_max) {
        throw NegativityError("frac_power_on_support: eigenvalue " + std::to_string(lambda_min) +
                              " below -" + std::to_string(kNegativityTol) + " * lambda_max");
    }
    const double cutoff = support_tol * lambda_max;
    RealVector powered = RealVector::Zero(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const double lambda = eig.eigenvalues(i);
        if (lambda > cutoff) {
            powered(i) = std::pow(lambda, s);
        }
    }
    ComplexMatrix out = eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
    return HermitianOperator(std::move(out));
}

GeneralOperator jordan_product(const GeneralOperator& A, const GeneralOperator& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols()) {
        throw ValidationError("jordan_product: dimension mismatch");
    }
    return 0.5 * (A * B + B * A);
}

double real_trace_form(const GeneralOperator& A, const GeneralOperator& B,
                       const HermitianOperator& rho) {
    if (A.rows() != B.rows() || A.rows() != rho.dim() || A.cols() != A.rows() ||
        B.cols() != B.rows()) {
        throw ValidationError("real_trace_form: dimension mismatch");
    }
    return (A.adjoint() * B * rho.matrix()).trace().real();
}

}  // namespace qbounds
