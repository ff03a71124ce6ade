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
 * Generic Weiss-Weinstein machinery on discretized hybrid models.
 *
 * For each test point (h, s) a displaced-overlap operator family
 *     V(x) = N rho(x)^s o rho(x - h)^(1-s)
 * is built on the grid, differenced into D(x) = [V(x+h) - V(x)] / |h|, and
 * the Hermitian score L(x) solving (L rho + rho L)/2 = D is obtained in
 * rho(x)'s eigenbasis.  The information matrix G, the displacement matrix C
 * and the anti-Hermitian correction Delta then give the covariance bound
 * C (G - Delta)^-1 C^T.
 *
 * Displacements are snapped to the nearest grid multiple (recorded) so the
 * change of variables behind C stays exact on the grid.
 */

#include <vector>

#include "qbounds/grid_model.hpp"
#include "qbounds/linalg.hpp"
#include "qbounds/povm.hpp"

namespace qbounds {

/// One Weiss-Weinstein test point: finite displacement h (parameter units)
/// and interpolation exponent s in (0, 1).
struct TestPoint {
    Eigen::VectorXd h;
    double s = 0.5;

    TestPoint(Eigen::VectorXd h_, double s_);
    static TestPoint single(double h, double s = 0.5);
    double norm() const { return h.norm(); }
};

/// Displacement snapped to the grid lattice.
struct GridShift {
    int steps = 0;          // signed number of grid steps
    double snapped_h = 0.0; // steps * dx
    double snap_error = 0.0;
};

GridShift snap_to_grid(const GridHybridModel& model, double h);

struct VBuild {
    std::vector<ComplexMatrix> V;
    double normalization = 0.0;  // N with sum_i tr V_i = 1
    GridShift shift;
};

/// V_k(x_i) = N rho(x_i)^s o rho(x_i - h)^(1-s); off-grid shifts contribute
/// zero (the prior vanishes at the window boundary).
VBuild build_V(const GridHybridModel& model, const TestPoint& tp);

/// D_k(x_i) = [V_k(x_i + h) - V_k(x_i)] / |h|; the traces telescope to zero.
std::vector<ComplexMatrix> build_D(const GridHybridModel& model, const TestPoint& tp);

struct HermitianSolve {
    ComplexMatrix L;      // Hermitian
    double residual = 0.0;  // max-norm of (L rho + rho L)/2 - D
};

/// Solves (L rho + rho L)/2 = D for Hermitian L on rho's solvable subspace:
/// L = sum over lambda_a + lambda_b > cutoff of 2 <a|D|b> / (lambda_a +
/// lambda_b) |a><b|.  Pairs inside the kernel are dropped and the residual
/// reported; a residual above rel_residual_tol * ||D||_max means D had
/// genuine kernel-kernel weight and an UnsolvableComponentError is thrown.
HermitianSolve solve_L_hermitian(const HermitianOperator& rho, const HermitianOperator& D,
                                 double pair_cutoff = 1e-12, double rel_residual_tol = 1e-8);

struct WwAssembly {
    Eigen::MatrixXd G;      // K x K, symmetric, strictly positive definite
    Eigen::MatrixXd C;      // J x K with C_jk = h_kj / |h_k|
    Eigen::MatrixXd Delta;  // Im<L_k> Im<L_k'>; zero for Hermitian scores
    std::vector<std::vector<ComplexMatrix>> L_ops;  // [test point][grid point]
    std::vector<GridShift> shifts;
};

/// Validates symmetry and strict positivity of G; throws
/// SingularAssemblyError naming the offending test points otherwise.
void validate_assembly(const WwAssembly& assembly);

WwAssembly assemble(const GridHybridModel& model, const std::vector<TestPoint>& testpoints);

struct BoundMatrix {
    Eigen::MatrixXd value;  // J x J, symmetric positive semidefinite
};

/// C (G - Delta)^-1 C^T.
BoundMatrix covariance_bound(const WwAssembly& assembly);

/// Convenience: single-test-point scalar bound on a single-parameter model.
double ww_bound_scalar(const GridHybridModel& model, const TestPoint& tp);

/// Classical Weiss-Weinstein bound 1/E[L^2] on a joint probability table,
/// with L(x,y) built from likelihood ratios of the displaced table.
double classical_ww(const JointTable& joint, const TestPoint& tp);

/// Grid-path overlap sums; oracles for the analytic phase path.
/// grid_overlap_g(s, h)      = sum_i tr[rho(x_i + h)^s rho(x_i)^(1-s)]
/// grid_overlap_g_tilde(s,h) = sum_i Re tr[rho(x_i+h)^s rho(x_i-h)^(1-s) rho(x_i)^0]
double grid_overlap_g(const GridHybridModel& model, double s, double h);
double grid_overlap_g_tilde(const GridHybridModel& model, double s, double h);

}  // namespace qbounds
