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

#include "qbounds/validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qbounds/grid_model.hpp"
#include "qbounds/phase_bounds.hpp"
#include "qbounds/priors.hpp"
#include "qbounds/ww_core.hpp"

namespace qbounds {

namespace {

ComplexMatrix random_complex_matrix(Eigen::Index d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

// Random density matrix; every third draw is made rank deficient.
HermitianOperator random_state(Eigen::Index d, int variant, std::mt19937_64& rng) {
    const ComplexMatrix a = random_complex_matrix(d, rng);
    ComplexMatrix rho = a * a.adjoint();
    if (variant % 3 != 0 && d > 1) {
        const EigDecomposition eig = eig_hermitian(HermitianOperator(rho));
        const Eigen::Index drop = 1 + variant % (d - 1);
        RealVector values = eig.eigenvalues;
        for (Eigen::Index i = 0; i < drop; ++i) values(i) = 0.0;
        rho = eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
    }
    rho /= rho.trace().real();
    return HermitianOperator(std::move(rho));
}

SuiteResult hermitian_minimality_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eedbeefULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst_margin = 1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index d = 2 + trial % 5;
        const HermitianOperator rho = random_state(d, trial, rng);
        // D built from a random solution so it is solvable by construction.
        const ComplexMatrix l0 = random_complex_matrix(d, rng);
        const ComplexMatrix d_mat =
            0.5 * (l0 * rho.matrix() + rho.matrix() * l0.adjoint());
        const HermitianOperator d_op(d_mat);
        const HermitianSolve solve = solve_L_hermitian(rho, d_op);

        // Any Hermitian N commuting with rho keeps L + iN a solution.
        const EigDecomposition eig = eig_hermitian(rho);
        RealVector diag(d);
        for (Eigen::Index i = 0; i < d; ++i) diag(i) = gauss(rng);
        const ComplexMatrix n_mat =
            eig.eigenvectors * diag.asDiagonal() * eig.eigenvectors.adjoint();
        const ComplexMatrix alt = solve.L + Complex(0.0, 1.0) * n_mat;

        const double base = (solve.L.adjoint() * solve.L * rho.matrix()).trace().real();
        const double perturbed = (alt.adjoint() * alt * rho.matrix()).trace().real();
        worst_margin = std::min(worst_margin, perturbed - base);
    }
    SuiteResult result{"hermitian_minimality", worst_margin >= -1e-10, ""};
    std::ostringstream detail;
    detail << "worst tr(L'^dag L' rho) - tr(L~^dag L~ rho) = " << worst_margin;
    result.detail = detail.str();
    return result;
}

SuiteResult qcrb_limit_suite() {
    const GaussianPrior qubit_prior(0.0, 0.1);
    const PhaseModel qubit = PhaseModel::qubit(10.0);
    const double q_ratio = qwwb_phase(qubit, Prior(qubit_prior), 0.5, 1e-4 * qubit_prior.sigma) /
                           qcrb_bayes(qubit, qubit_prior);

    const GaussianPrior bosonic_prior(0.0, 0.5);
    const PhaseModel bosonic = PhaseModel::bosonic(0.1, 10);
    const double b_ratio =
        qwwb_phase(bosonic, Prior(bosonic_prior), 0.5, 1e-4 * bosonic_prior.sigma) /
        qcrb_bayes(bosonic, bosonic_prior);

    const double worst = std::max(std::abs(q_ratio - 1.0), std::abs(b_ratio - 1.0));
    SuiteResult result{"qcrb_limit", worst <= 1e-3, ""};
    std::ostringstream detail;
    detail << "qubit ratio " << q_ratio << ", bosonic ratio " << b_ratio;
    result.detail = detail.str();
    return result;
}

SuiteResult mc_covariance_validity_suite(std::uint64_t seed, int trials) {
    const GaussianPrior prior(0.0, 0.1);
    const PhaseModel model = PhaseModel::qubit(10.0);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior);
    const GridHybridModel grid = GridHybridModel::from_phase_model(model, tab);

    const double qwwb = qwwb_phase_optimized(model, Prior(prior)).value;
    const double qzzb = qzzb_gaussian(model, prior);
    const double qcrb = qcrb_bayes(model, prior);

    bool ok = true;
    std::ostringstream detail;
    detail << "qwwb " << qwwb << ", qzzb " << qzzb << ", qcrb " << qcrb << ";";
    int index = 0;
    for (const Povm& povm : reference_qubit_povms()) {
        const JointTable joint = joint_distribution(grid, povm);
        const Eigen::VectorXd estimator = conditional_mean_estimator(joint);
        const auto samples = simulate_measurement(grid, povm, trials, seed + index);
        const MonteCarloMse mc = empirical_mse(samples, estimator);
        const double floor = mc.mse + 3.0 * mc.standard_error;
        ok = ok && floor >= qwwb && floor >= qzzb && floor >= qcrb;
        detail << " povm" << index << " mse " << mc.mse << " (se " << mc.standard_error << ")";
        ++index;
    }
    return SuiteResult{"mc_covariance_validity", ok, detail.str()};
}

SuiteResult classical_degeneration_suite() {
    // Commuting family: every conditional state diagonal in a fixed basis.
    const GaussianPrior prior(0.0, 0.3);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 8.0, 801);
    std::vector<ComplexMatrix> conditionals;
    conditionals.reserve(static_cast<std::size_t>(tab.size()));
    for (Eigen::Index i = 0; i < tab.size(); ++i) {
        const double x = tab.grid()(i);
        Eigen::Vector3d q(1.0 + 0.8 * std::sin(x), 1.0 + 0.8 * std::cos(2.0 * x),
                          1.0 + 0.4 * std::sin(3.0 * x + 1.0));
        q /= q.sum();
        ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
        for (int y = 0; y < 3; ++y) rho(y, y) = q(y);
        conditionals.push_back(std::move(rho));
    }
    const GridHybridModel grid =
        GridHybridModel::from_conditionals(tab.grid(), conditionals, tab.weights());

    JointTable joint;
    joint.grid = tab.grid();
    joint.dx = tab.dx();
    joint.p = Eigen::MatrixXd(tab.size(), 3);
    for (Eigen::Index i = 0; i < tab.size(); ++i) {
        for (int y = 0; y < 3; ++y) {
            joint.p(i, y) = conditionals[static_cast<std::size_t>(i)](y, y).real() *
                            tab.weights()(i);
        }
    }

    const TestPoint tp = TestPoint::single(2.0 * prior.sigma, 0.5);
    const double quantum = ww_bound_scalar(grid, tp);
    const double classical = classical_ww(joint, tp);
    const double rel = std::abs(quantum - classical) / classical;
    SuiteResult result{"classical_degeneration", rel <= 1e-8, ""};
    std::ostringstream detail;
    detail << "quantum " << quantum << ", classical " << classical << ", rel diff " << rel;
    result.detail = detail.str();
    return result;
}

SuiteResult negative_control_suite() {
    const GaussianPrior prior(0.0, 0.1);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 8.0, 201);
    const GridHybridModel grid =
        GridHybridModel::from_phase_model(PhaseModel::qubit(10.0), tab);
    WwAssembly assembly =
        assemble(grid, {TestPoint::single(0.2, 0.5), TestPoint::single(0.1, 0.5)});

    bool intact_ok = true;
    try {
        validate_assembly(assembly);
    } catch (const Error&) {
        intact_ok = false;
    }

    assembly.G(0, 1) += 0.1 * assembly.G(0, 0);  // break the symmetry on purpose
    bool broken_caught = false;
    try {
        validate_assembly(assembly);
    } catch (const SingularAssemblyError&) {
        broken_caught = true;
    }
    return SuiteResult{"negative_control", intact_ok && broken_caught,
                       intact_ok ? (broken_caught ? "broken fixture correctly rejected"
                                                  : "broken fixture was accepted")
                                 : "intact fixture rejected"};
}

}  // namespace

std::vector<Povm> reference_qubit_povms() {
    const Complex i(0.0, 1.0);
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    ComplexMatrix plus_i(2, 2), minus_i(2, 2);
    plus_i << 0.5, -0.5 * i, 0.5 * i, 0.5;
    minus_i << 0.5, 0.5 * i, -0.5 * i, 0.5;

    std::vector<ComplexMatrix> trine;
    for (int k = 0; k < 3; ++k) {
        const double theta = 2.0 * M_PI * k / 3.0;
        ComplexMatrix e(2, 2);
        e << 1.0 / 3.0, (std::cos(theta) - i * std::sin(theta)) / 3.0,
            (std::cos(theta) + i * std::sin(theta)) / 3.0, 1.0 / 3.0;
        trine.push_back(std::move(e));
    }
    return {Povm({plus, minus}), Povm({plus_i, minus_i}), Povm(std::move(trine))};
}

std::vector<SuiteResult> run_validation_suites(std::uint64_t seed, int mc_trials) {
    std::vector<SuiteResult> results;
    results.push_back(hermitian_minimality_suite(seed));
    results.push_back(qcrb_limit_suite());
    results.push_back(mc_covariance_validity_suite(seed, mc_trials));
    results.push_back(classical_degeneration_suite());
    results.push_back(negative_control_suite());
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        if (!r.passed) return false;
    }
    return true;
}

}  // namespace qbounds
