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

#include "qbounds/ww_core.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qbounds {

namespace {

constexpr double kDegenerateNorm = 1e-14;

// Fractional powers of every grid state at a fixed exponent.
std::vector<ComplexMatrix> grid_powers(const GridHybridModel& model, double exponent) {
    std::vector<ComplexMatrix> out;
    out.reserve(model.states().size());
    for (const auto& rho : model.states()) {
        out.push_back(frac_power_on_support(HermitianOperator(rho), exponent).matrix());
    }
    return out;
}

bool index_ok(Eigen::Index i, Eigen::Index n) { return i >= 0 && i < n; }

}  // namespace

TestPoint::TestPoint(Eigen::VectorXd h_, double s_) : h(std::move(h_)), s(s_) {
    if (h.size() == 0 || h.norm() <= 0.0) {
        throw ValidationError("TestPoint: displacement must be nonzero");
    }
    if (!(s > 0.0 && s < 1.0)) {
        throw ValidationError("TestPoint: s must lie in (0, 1), got " + std::to_string(s));
    }
}

TestPoint TestPoint::single(double h, double s) {
    Eigen::VectorXd v(1);
    v << h;
    return TestPoint(std::move(v), s);
}

GridShift snap_to_grid(const GridHybridModel& model, double h) {
    const int steps = static_cast<int>(std::llround(h / model.dx()));
    if (steps == 0) {
        throw DegenerateTestPointError("test-point displacement " + std::to_string(h) +
                                       " is below the grid resolution " +
                                       std::to_string(model.dx()));
    }
    const double snapped = steps * model.dx();
    return GridShift{steps, snapped, snapped - h};
}

VBuild build_V(const GridHybridModel& model, const TestPoint& tp) {
    if (tp.h.size() != model.param_dim()) {
        throw ValidationError("build_V: test-point dimension does not match the model");
    }
    const GridShift shift = snap_to_grid(model, tp.h(0));
    const Eigen::Index n = model.points();
    const Eigen::Index d = model.dim();

    const std::vector<ComplexMatrix> pow_s = grid_powers(model, tp.s);
    const std::vector<ComplexMatrix> pow_1ms = grid_powers(model, 1.0 - tp.s);

    VBuild out;
    out.shift = shift;
    out.V.assign(static_cast<std::size_t>(n), ComplexMatrix::Zero(d, d));
    double trace_sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = i - shift.steps;  // x_i - h
        if (!index_ok(j, n)) continue;           // prior vanishes off the window
        ComplexMatrix v = jordan_product(pow_s[static_cast<std::size_t>(i)],
                                         pow_1ms[static_cast<std::size_t>(j)]);
        trace_sum += v.trace().real();
        out.V[static_cast<std::size_t>(i)] = std::move(v);
    }
    if (trace_sum < kDegenerateNorm) {
        throw DegenerateTestPointError(
            "build_V: displaced and undisplaced states are orthogonal everywhere (norm " +
            std::to_string(trace_sum) + ")");
    }
    out.normalization = 1.0 / trace_sum;
    for (auto& v : out.V) v *= out.normalization;
    return out;
}

std::vector<ComplexMatrix> build_D(const GridHybridModel& model, const TestPoint& tp) {
    const VBuild vb = build_V(model, tp);
    const Eigen::Index n = model.points();
    const double inv_h = 1.0 / std::abs(vb.shift.snapped_h);
    std::vector<ComplexMatrix> D(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = i + vb.shift.steps;  // x_i + h
        if (index_ok(j, n)) {
            D[static_cast<std::size_t>(i)] =
                (vb.V[static_cast<std::size_t>(j)] - vb.V[static_cast<std::size_t>(i)]) * inv_h;
        } else {
            D[static_cast<std::size_t>(i)] = -vb.V[static_cast<std::size_t>(i)] * inv_h;
        }
    }
    return D;
}

HermitianSolve solve_L_hermitian(const HermitianOperator& rho, const HermitianOperator& D,
                                 double pair_cutoff, double rel_residual_tol) {
    if (rho.dim() != D.dim()) throw ValidationError("solve_L_hermitian: dimension mismatch");
    const Eigen::Index d = rho.dim();
    const double d_norm = D.matrix().cwiseAbs().maxCoeff();

    const EigDecomposition eig = eig_hermitian(rho);
    const double lambda_max = eig.eigenvalues.maxCoeff();

    HermitianSolve out{ComplexMatrix::Zero(d, d), d_norm};
    if (lambda_max > 0.0) {
        if (eig.eigenvalues.minCoeff() < -kNegativityTol * lambda_max) {
            throw NegativityError("solve_L_hermitian: rho is not positive semidefinite");
        }
        const double cutoff = pair_cutoff * lambda_max;
        const ComplexMatrix d_eig = eig.eigenvectors.adjoint() * D.matrix() * eig.eigenvectors;
        ComplexMatrix l_eig = ComplexMatrix::Zero(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index b = 0; b < d; ++b) {
                const double denom = eig.eigenvalues(a) + eig.eigenvalues(b);
                if (denom > cutoff) l_eig(a, b) = 2.0 * d_eig(a, b) / denom;
            }
        }
        ComplexMatrix L = eig.eigenvectors * l_eig * eig.eigenvectors.adjoint();
        L = 0.5 * (L + L.adjoint().eval());
        out.L = std::move(L);
        out.residual = (0.5 * (out.L * rho.matrix() + rho.matrix() * out.L) - D.matrix())
                           .cwiseAbs()
                           .maxCoeff();
    }
    if (out.residual > rel_residual_tol * d_norm) {
        throw UnsolvableComponentError(
            "solve_L_hermitian: D has weight on the kernel-kernel block of rho, residual " +
                std::to_string(out.residual),
            out.residual);
    }
    return out;
}

void validate_assembly(const WwAssembly& assembly) {
    const Eigen::Index k = assembly.G.rows();
    if (assembly.G.cols() != k || k == 0) {
        throw SingularAssemblyError("assembly: G must be square and nonempty");
    }
    if ((assembly.G - assembly.G.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw SingularAssemblyError("assembly: G is not symmetric as computed");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(assembly.G);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (!(lo > 1e-12 * hi) || !(hi > 0.0)) {
        // Name the test points dominating the near-null direction.
        Eigen::Index null_index = 0;
        solver.eigenvalues().minCoeff(&null_index);
        const Eigen::VectorXd v = solver.eigenvectors().col(null_index).cwiseAbs();
        std::string offenders;
        for (Eigen::Index i = 0; i < k; ++i) {
            if (v(i) > 0.5 / std::sqrt(static_cast<double>(k))) {
                offenders += (offenders.empty() ? "" : ", ") + std::to_string(i);
            }
        }
        throw SingularAssemblyError("assembly: G is singular; offending test points: " +
                                    offenders);
    }
}

WwAssembly assemble(const GridHybridModel& model, const std::vector<TestPoint>& testpoints) {
    if (testpoints.empty()) throw ValidationError("assemble: need at least one test point");
    const Eigen::Index n = model.points();
    const int K = static_cast<int>(testpoints.size());
    const int J = model.param_dim();

    WwAssembly assembly;
    assembly.G = Eigen::MatrixXd::Zero(K, K);
    assembly.C = Eigen::MatrixXd::Zero(J, K);
    assembly.Delta = Eigen::MatrixXd::Zero(K, K);
    assembly.L_ops.resize(static_cast<std::size_t>(K));
    assembly.shifts.resize(static_cast<std::size_t>(K));

    Eigen::VectorXd im_mean(K);
    for (int k = 0; k < K; ++k) {
        const std::vector<ComplexMatrix> D = build_D(model, testpoints[static_cast<std::size_t>(k)]);
        assembly.shifts[static_cast<std::size_t>(k)] =
            snap_to_grid(model, testpoints[static_cast<std::size_t>(k)].h(0));
        auto& l_ops = assembly.L_ops[static_cast<std::size_t>(k)];
        l_ops.reserve(static_cast<std::size_t>(n));
        Complex mean(0.0, 0.0);
        for (Eigen::Index i = 0; i < n; ++i) {
            const HermitianOperator rho(model.state(i));
            const HermitianOperator d_op(D[static_cast<std::size_t>(i)]);
            HermitianSolve solve = solve_L_hermitian(rho, d_op);
            mean += (solve.L * model.state(i)).trace();
            l_ops.push_back(std::move(solve.L));
        }
        im_mean(k) = mean.imag();
        assembly.C(0, k) = assembly.shifts[static_cast<std::size_t>(k)].snapped_h >= 0.0 ? 1.0 : -1.0;
    }
    assembly.Delta = im_mean * im_mean.transpose();

    for (int k = 0; k < K; ++k) {
        for (int kp = k; kp < K; ++kp) {
            double g = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                g += (assembly.L_ops[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]
                          .adjoint() *
                      assembly.L_ops[static_cast<std::size_t>(kp)][static_cast<std::size_t>(i)] *
                      model.state(i))
                         .trace()
                         .real();
            }
            assembly.G(k, kp) = g;
            assembly.G(kp, k) = g;
        }
    }
    validate_assembly(assembly);
    return assembly;
}

BoundMatrix covariance_bound(const WwAssembly& assembly) {
    const Eigen::MatrixXd m = assembly.G - assembly.Delta;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (!(lo > 1e-12 * hi) || !(hi > 0.0)) {
        throw SingularAssemblyError("covariance_bound: G - Delta is singular");
    }
    Eigen::MatrixXd bound = assembly.C * m.ldlt().solve(assembly.C.transpose());
    bound = 0.5 * (bound + bound.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bound_eig(bound, Eigen::EigenvaluesOnly);
    if (bound_eig.eigenvalues().minCoeff() < -1e-10) {
        throw SingularAssemblyError("covariance_bound: bound matrix is not positive semidefinite");
    }
    return BoundMatrix{std::move(bound)};
}

double ww_bound_scalar(const GridHybridModel& model, const TestPoint& tp) {
    return covariance_bound(assemble(model, {tp})).value(0, 0);
}

double classical_ww(const JointTable& joint, const TestPoint& tp) {
    if (tp.h.size() != 1) throw ValidationError("classical_ww: single-parameter tables only");
    const Eigen::Index n = joint.p.rows();
    const Eigen::Index ny = joint.p.cols();
    const int steps = static_cast<int>(std::llround(tp.h(0) / joint.dx));
    if (steps == 0) {
        throw DegenerateTestPointError("classical_ww: displacement below the grid resolution");
    }
    const double habs = std::abs(steps * joint.dx);

    double norm_inv = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index ip = i + steps;
        if (!index_ok(ip, n)) continue;
        for (Eigen::Index y = 0; y < ny; ++y) {
            if (joint.p(i, y) <= 0.0) continue;
            norm_inv += std::pow(joint.p(ip, y), tp.s) * std::pow(joint.p(i, y), 1.0 - tp.s);
        }
    }
    if (norm_inv < kDegenerateNorm) {
        throw DegenerateTestPointError("classical_ww: displaced table overlap vanishes");
    }
    const double norm = 1.0 / norm_inv;

    double g = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index y = 0; y < ny; ++y) {
            const double p = joint.p(i, y);
            if (p <= 0.0) continue;
            const Eigen::Index ip = i + steps;
            const Eigen::Index im = i - steps;
            const double fwd = index_ok(ip, n) ? std::pow(joint.p(ip, y) / p, tp.s) : 0.0;
            const double bwd = index_ok(im, n) ? std::pow(joint.p(im, y) / p, 1.0 - tp.s) : 0.0;
            const double ell = norm / habs * (fwd - bwd);
            g += p * ell * ell;
        }
    }
    return 1.0 / g;
}

double grid_overlap_g(const GridHybridModel& model, double s, double h) {
    const GridShift shift = snap_to_grid(model, h);
    const Eigen::Index n = model.points();
    const std::vector<ComplexMatrix> pow_s = grid_powers(model, s);
    const std::vector<ComplexMatrix> pow_1ms = grid_powers(model, 1.0 - s);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = i + shift.steps;
        if (!index_ok(j, n)) continue;
        acc += (pow_s[static_cast<std::size_t>(j)] * pow_1ms[static_cast<std::size_t>(i)])
                   .trace()
                   .real();
    }
    return acc;
}

double grid_overlap_g_tilde(const GridHybridModel& model, double s, double h) {
    const GridShift shift = snap_to_grid(model, h);
    const Eigen::Index n = model.points();
    const std::vector<ComplexMatrix> pow_s = grid_powers(model, s);
    const std::vector<ComplexMatrix> pow_1ms = grid_powers(model, 1.0 - s);
    const std::vector<ComplexMatrix> support = grid_powers(model, 0.0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index ip = i + shift.steps;
        const Eigen::Index im = i - shift.steps;
        if (!index_ok(ip, n) || !index_ok(im, n)) continue;
        acc += (pow_s[static_cast<std::size_t>(ip)] * pow_1ms[static_cast<std::size_t>(im)] *
                support[static_cast<std::size_t>(i)])
                   .trace()
                   .real();
    }
    return acc;
}

}  // namespace qbounds
