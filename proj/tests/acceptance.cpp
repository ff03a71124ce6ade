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

// End-to-end acceptance suite for the qbounds library.  Each criterion
// prints one PASS/FAIL line; the process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qbounds/grid_model.hpp"
#include "qbounds/phase_bounds.hpp"
#include "qbounds/priors.hpp"
#include "qbounds/sweeps.hpp"
#include "qbounds/validate.hpp"
#include "qbounds/ww_core.hpp"

using namespace qbounds;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Check {
    bool ok = true;
    std::ostringstream info;
    std::ostringstream failures;

    void require(bool condition, const std::string& label) {
        ok = ok && condition;
        if (!condition) failures << " [FAILED: " << label << "]";
    }
    std::string detail() const { return info.str() + failures.str(); }
};

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// ---------------------------------------------------------------------------
// 1. Closed-form qubit benchmark: MMSE and QCRB against their closed forms.
Outcome closed_form_benchmark() {
    Check check;
    const double sigma = 0.1;
    const GaussianPrior prior(0.0, sigma);
    const double s2 = sigma * sigma;
    double worst_mmse = 0.0, worst_qcrb = 0.0;
    for (double energy : {1.0, 5.0, 10.0, 20.0, 50.0}) {
        const PhaseModel model = PhaseModel::qubit(energy);
        const double mmse_closed =
            s2 - s2 * s2 * energy * energy * std::exp(-energy * energy * s2);
        const double qcrb_closed = 1.0 / (1.0 / s2 + energy * energy);
        worst_mmse = std::max(worst_mmse, relative_gap(mmse_gaussian(model, prior), mmse_closed));
        worst_qcrb = std::max(worst_qcrb, relative_gap(qcrb_bayes(model, prior), qcrb_closed));
    }
    check.require(worst_mmse <= 1e-10, "MMSE within 1e-10 relative of the closed form");
    check.require(worst_qcrb <= 1e-10, "QCRB within 1e-10 relative of the closed form");
    check.info << "worst relative gap: mmse " << worst_mmse << ", qcrb " << worst_qcrb
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 2. QWWB formula reproduction at s = 1/2 on random (h, E) pairs.
Outcome qwwb_formula_reproduction() {
    Check check;
    const double sigma = 0.1;
    const GaussianPrior prior(0.0, sigma);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> h_draw(0.05 * sigma, 10.0 * sigma);
    std::uniform_real_distribution<double> e_draw(0.5, 500.0);
    double worst_abs = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double h = h_draw(rng);
        const double energy = e_draw(rng);
        const double engine = qwwb_phase(PhaseModel::qubit(energy), Prior(prior), 0.5, h);
        const double num = h * h * std::exp(-h * h / (4.0 * sigma * sigma)) *
                           std::pow(std::cos(h * energy / 2.0), 2);
        const double den =
            2.0 - 2.0 * std::exp(-h * h / (2.0 * sigma * sigma)) * std::cos(h * energy);
        worst_abs = std::max(worst_abs, std::abs(engine - num / den));
    }
    check.require(worst_abs <= 1e-12, "objective equals the closed form within 1e-12");
    check.info << "100 pairs, worst |engine - formula| = " << worst_abs;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 3. Figure-1 ordering properties over the default E grid.
Outcome figure1_properties() {
    Check check;
    const double sigma = 0.1;
    const double s2 = sigma * sigma;
    Figure1Config config;
    config.sigma = sigma;
    const BoundReport report = figure1_sweep(config);

    bool ordering = true, qwwb_vs_qcrb = true;
    for (const BoundRow& row : report.rows) {
        const double mmse = *row.mmse;
        ordering = ordering && (mmse >= row.qwwb - 1e-9) && (mmse >= row.qzzb - 1e-9) &&
                   (mmse >= row.qcrb - 1e-9);
        qwwb_vs_qcrb = qwwb_vs_qcrb && (row.qwwb >= row.qcrb - 1e-6);
    }
    const BoundRow& top = report.rows.back();
    check.require(ordering, "MMSE >= QWWB, QZZB, QCRB within 1e-9 at every grid point");
    check.require(qwwb_vs_qcrb, "QWWB >= QCRB - 1e-6 at every grid point");
    check.require(std::abs(*top.mmse / s2 - 1.0) <= 1e-6, "normalized MMSE -> 1 at the top");
    check.require(top.qcrb / s2 < 0.05, "normalized QCRB < 0.05 at the top");
    check.info << "E grid of " << report.rows.size() << " points; top E = " << top.sweep_value
                 << ", mmse/s^2 = " << *top.mmse / s2 << ", qcrb/s^2 = " << top.qcrb / s2
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 4. Figure-2 threshold behavior over the probe count.
Outcome figure2_properties() {
    Check check;
    Figure2Config config;
    const BoundReport report = figure2_sweep(config);

    bool monotone = true;
    bool dominates = true;
    double crossover = -1.0;
    const BoundRow* prev = nullptr;
    for (const BoundRow& row : report.rows) {
        if (prev) {
            monotone = monotone && row.qwwb <= prev->qwwb * (1.0 + 1e-9) &&
                       row.qzzb <= prev->qzzb * (1.0 + 1e-9) &&
                       row.qcrb <= prev->qcrb * (1.0 + 1e-9);
        }
        dominates = dominates && row.qwwb >= row.qcrb * (1.0 - 1e-12);
        if (crossover < 0.0 && row.qwwb / row.qcrb < 1.2) crossover = row.sweep_value;
        prev = &row;
    }
    const double ratio_first = report.rows.front().qwwb / report.rows.front().qcrb;
    const double ratio_last = report.rows.back().qwwb / report.rows.back().qcrb;
    check.require(monotone, "all bounds non-increasing in nu");
    check.require(dominates, "QWWB >= QCRB at every nu");
    check.require(ratio_first > 2.0, "QWWB/QCRB > 2 at nu = 1");
    check.require(ratio_last < 1.2, "QWWB/QCRB < 1.2 at nu = 100");
    check.info << "ratio " << ratio_first << " at nu=1, " << ratio_last
                 << " at nu=100; ratio first dips below 1.2 at nu = " << crossover
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 5. Cross-path oracle: generic grid bound against the analytic phase path.
Outcome cross_path_oracle() {
    Check check;
    const double sigma = 0.1;
    const double energy = 10.0;
    const GaussianPrior prior(0.0, sigma);
    const PhaseModel model = PhaseModel::qubit(energy);

    const auto worst_error = [&](int points) {
        // Window widened past the largest displacement (5 sigma) so the
        // shifted overlaps keep their full Gaussian mass.
        const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 13.0, points);
        const GridHybridModel grid = GridHybridModel::from_phase_model(model, tab);
        double worst = 0.0;
        for (double h : {sigma, 2.0 * sigma, 5.0 * sigma}) {
            const TestPoint tp = TestPoint::single(h, 0.5);
            const double grid_bound = ww_bound_scalar(grid, tp);
            const double snapped = snap_to_grid(grid, h).snapped_h;
            const double analytic = qwwb_phase(model, Prior(prior), 0.5, snapped);
            worst = std::max(worst, relative_gap(grid_bound, analytic));
        }
        return worst;
    };

    const double coarse = worst_error(2001);
    const double fine = worst_error(4001);
    check.require(coarse <= 1e-4, "grid path within 1e-4 relative of the analytic path");
    // Both grids resolve the Gaussian overlaps to near machine precision, so
    // refinement is checked as non-degradation above the rounding floor.
    check.require(fine <= std::max(coarse, 5e-10), "refinement does not degrade the agreement");
    check.info << "worst relative gap: " << coarse << " at 2001 points, " << fine
                 << " at 4001 points";
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 6. Heisenberg-limit constants.
Outcome heisenberg_constants() {
    Check check;
    const SineConstant& sc = sine_constant();
    check.require(std::abs(sc.lambda - 0.7246) < 5e-5, "lambda = 0.7246 to four decimals");

    // large H_plus puts g_c(1/2, h*) ~ 1
    const GaussianPrior prior(0.0, 0.5);
    const HeisenbergLimit limit = heisenberg_limit(PhaseModel::qubit(2000.0), prior);
    const double hp2 = limit.H_plus * limit.H_plus;
    const double sixty_four = limit.bound * 64.0 * sc.lambda * sc.lambda * hp2;
    check.require(std::abs(sixty_four - 1.0) <= 1e-6, "bound = 1/(64 lambda^2 H+^2) within 1e-6");
    check.require(limit.bound > 1.0 / (80.0 * sc.lambda * sc.lambda * hp2),
                  "bound strictly above 1/(80 lambda^2 H+^2)");
    check.info << "lambda = " << sc.lambda << ", bound * 64 lambda^2 H+^2 = " << sixty_four
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 7. Hermitian minimality over random solvable triples.
Outcome hermitian_minimality() {
    Check check;
    std::mt19937_64 rng(777);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index d = 2 + trial % 5;
        ComplexMatrix a(d, d), l0(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) {
                a(i, j) = Complex(gauss(rng), gauss(rng));
                l0(i, j) = Complex(gauss(rng), gauss(rng));
            }
        }
        ComplexMatrix rho_mat = a * a.adjoint();
        if (trial % 3 == 1) {
            const EigDecomposition eig = eig_hermitian(HermitianOperator(rho_mat));
            RealVector vals = eig.eigenvalues;
            vals(0) = 0.0;  // rank-deficient variant
            rho_mat = eig.eigenvectors * vals.asDiagonal() * eig.eigenvectors.adjoint();
        }
        rho_mat /= rho_mat.trace().real();
        const HermitianOperator rho(rho_mat);
        const HermitianOperator d_op(0.5 * (l0 * rho_mat + rho_mat * l0.adjoint()));
        const HermitianSolve solve = solve_L_hermitian(rho, d_op);

        const EigDecomposition eig = eig_hermitian(rho);
        RealVector diag(d);
        for (Eigen::Index i = 0; i < d; ++i) diag(i) = gauss(rng);
        const ComplexMatrix n_mat =
            eig.eigenvectors * diag.asDiagonal() * eig.eigenvectors.adjoint();
        const ComplexMatrix alt = solve.L + Complex(0.0, 1.0) * n_mat;
        const double tight = (solve.L.adjoint() * solve.L * rho_mat).trace().real();
        const double loose = (alt.adjoint() * alt * rho_mat).trace().real();
        worst = std::min(worst, loose - tight);
    }
    check.require(worst >= -1e-10, "tr(L'+ L' rho) >= tr(L~+ L~ rho) - 1e-10 on 200 triples");
    check.info << "200 triples in dims 2-6, worst margin " << worst;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 8. The small-h limit recovers the Bayesian QCRB.
Outcome qcrb_limit() {
    Check check;
    const GaussianPrior qubit_prior(0.0, 0.1);
    const PhaseModel qubit = PhaseModel::qubit(10.0);
    const double qubit_ratio =
        qwwb_phase(qubit, Prior(qubit_prior), 0.5, 1e-4 * qubit_prior.sigma) /
        qcrb_bayes(qubit, qubit_prior);

    const GaussianPrior bos_prior(0.0, 0.5);
    const PhaseModel bos = PhaseModel::bosonic(0.1, 10);
    const double bos_ratio = qwwb_phase(bos, Prior(bos_prior), 0.5, 1e-4 * bos_prior.sigma) /
                             qcrb_bayes(bos, bos_prior);

    check.require(std::abs(qubit_ratio - 1.0) <= 1e-3, "qubit within 0.1%");
    check.require(std::abs(bos_ratio - 1.0) <= 1e-3, "bosonic within 0.1%");
    check.info << "qwwb(h=1e-4 sigma)/qcrb: qubit " << qubit_ratio << ", bosonic " << bos_ratio
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 9. Covariance-inequality validity under Monte Carlo measurement.
Outcome covariance_validity() {
    Check check;
    const GaussianPrior prior(0.0, 0.1);
    const PhaseModel model = PhaseModel::qubit(10.0);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior);
    const GridHybridModel grid = GridHybridModel::from_phase_model(model, tab);

    const double qwwb = qwwb_phase_optimized(model, Prior(prior)).value;
    const double qzzb = qzzb_gaussian(model, prior);
    const double qcrb = qcrb_bayes(model, prior);

    int index = 0;
    for (const Povm& povm : reference_qubit_povms()) {
        const JointTable joint = joint_distribution(grid, povm);
        const Eigen::VectorXd estimator = conditional_mean_estimator(joint);
        const auto samples = simulate_measurement(grid, povm, 100000, 42 + index);
        const MonteCarloMse mc = empirical_mse(samples, estimator);
        const double floor = mc.mse + 3.0 * mc.standard_error;
        check.require(floor >= qwwb, "MSE >= QWWB - 3 SE (povm " + std::to_string(index) + ")");
        check.require(floor >= qzzb, "MSE >= QZZB - 3 SE (povm " + std::to_string(index) + ")");
        check.require(floor >= qcrb, "MSE >= QCRB - 3 SE (povm " + std::to_string(index) + ")");
        check.info << " povm" << index << " mse " << mc.mse << " se " << mc.standard_error
                     << ";";
        ++index;
    }
    std::ostringstream prefix;
    prefix << "qwwb " << qwwb << ", qzzb " << qzzb << ", qcrb " << qcrb << ";";
    return Outcome{check.ok, prefix.str() + check.detail()};
}

// ---------------------------------------------------------------------------
// 10. Classical degeneration on a commuting family.
Outcome classical_degeneration() {
    Check check;
    const GaussianPrior prior(0.0, 0.3);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 8.0, 801);
    std::vector<ComplexMatrix> conditionals;
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
    JointTable joint{tab.grid(), tab.dx(), Eigen::MatrixXd(tab.size(), 3)};
    for (Eigen::Index i = 0; i < tab.size(); ++i) {
        for (int y = 0; y < 3; ++y) {
            joint.p(i, y) =
                conditionals[static_cast<std::size_t>(i)](y, y).real() * tab.weights()(i);
        }
    }
    double worst = 0.0;
    for (double h : {0.3, 0.6, -0.45}) {
        for (double s : {0.3, 0.5, 0.7}) {
            const TestPoint tp = TestPoint::single(h, s);
            worst = std::max(worst,
                             relative_gap(ww_bound_scalar(grid, tp), classical_ww(joint, tp)));
        }
    }
    check.require(worst <= 1e-8, "quantum grid path equals classical_ww within 1e-8");
    check.info << "worst relative gap " << worst << " over 9 test points"
                ;
    return Outcome{check.ok, check.detail()};
}

// ---------------------------------------------------------------------------
// 11. Two-test-point tightening plus the trivial-fidelity QZZB integral.
Outcome two_test_point_tightening() {
    Check check;
    const GaussianPrior prior(0.0, 0.1);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 13.0, 801);
    const GridHybridModel grid =
        GridHybridModel::from_phase_model(PhaseModel::qubit(10.0), tab);

    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> h_draw(0.02, 1.0);
    std::uniform_real_distribution<double> s_draw(0.15, 0.85);
    std::uniform_int_distribution<int> sign_draw(0, 1);
    int accepted = 0;
    double worst_margin = 1e300;
    while (accepted < 50) {
        const double h1 = (sign_draw(rng) ? 1.0 : -1.0) * h_draw(rng);
        const double h2 = (sign_draw(rng) ? 1.0 : -1.0) * h_draw(rng);
        const TestPoint tp1 = TestPoint::single(h1, s_draw(rng));
        const TestPoint tp2 = TestPoint::single(h2, s_draw(rng));
        if (snap_to_grid(grid, h1).steps == snap_to_grid(grid, h2).steps &&
            std::abs(tp1.s - tp2.s) < 1e-3) {
            continue;  // effectively duplicated test points
        }
        try {
            const double combined = covariance_bound(assemble(grid, {tp1, tp2})).value(0, 0);
            const double best_single =
                std::max(ww_bound_scalar(grid, tp1), ww_bound_scalar(grid, tp2));
            worst_margin = std::min(worst_margin, combined - best_single);
            ++accepted;
        } catch (const SingularAssemblyError&) {
            continue;  // not a valid pair; redraw
        }
    }
    check.require(worst_margin >= -1e-12, "combined bound >= max single bound on 50 pairs");

    RealVector e(1);
    e << 0.0;
    ComplexVector c(1);
    c << 1.0;
    const double trivial = qzzb_gaussian(PhaseModel(e, c), prior);
    check.require(relative_gap(trivial, 0.01) <= 1e-6, "QZZB with F = 1 equals sigma^2");
    check.info << "worst combined-minus-single margin " << worst_margin
                 << "; trivial-fidelity QZZB " << trivial;
    return Outcome{check.ok, check.detail()};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "closed-form qubit benchmark", closed_form_benchmark, 1.0},
        {2, "QWWB formula reproduction", qwwb_formula_reproduction, 1.0},
        {3, "figure-1 ordering properties", figure1_properties, 30.0},
        {4, "figure-2 threshold properties", figure2_properties, 300.0},
        {5, "cross-path oracle", cross_path_oracle, 60.0},
        {6, "Heisenberg-limit constants", heisenberg_constants, 1.0},
        {7, "Hermitian minimality", hermitian_minimality, 10.0},
        {8, "small-h QCRB limit", qcrb_limit, 1.0},
        {9, "Monte Carlo covariance validity", covariance_validity, 120.0},
        {10, "classical degeneration", classical_degeneration, 10.0},
        {11, "two-test-point tightening", two_test_point_tightening, 600.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = Outcome{false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds < criterion.budget_seconds;
        const bool passed = outcome.passed && in_budget;
        if (!passed) ++failures;
        std::printf("[%s] criterion %02d: %s (%.2f s, budget %.0f s) -- %s%s\n",
                    passed ? "PASS" : "FAIL", criterion.id, criterion.name, seconds,
                    criterion.budget_seconds, outcome.detail.c_str(),
                    in_budget ? "" : " [FAILED: runtime budget exceeded]");
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
