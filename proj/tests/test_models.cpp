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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qbounds/grid_model.hpp"
#include "qbounds/numerics.hpp"
#include "qbounds/phase_bounds.hpp"
#include "qbounds/phase_model.hpp"
#include "qbounds/povm.hpp"
#include "qbounds/priors.hpp"

using namespace qbounds;

namespace {

TabulatedPrior triangle_prior(double half_width, int points) {
    Eigen::VectorXd grid(points);
    Eigen::VectorXd w(points);
    for (int i = 0; i < points; ++i) {
        grid(i) = -half_width + 2.0 * half_width * i / (points - 1);
        w(i) = std::max(0.0, 1.0 - std::abs(grid(i)) / half_width);
    }
    w /= w.sum();
    return TabulatedPrior(std::move(grid), std::move(w));
}

}  // namespace

TEST_CASE("GaussianPrior") {
    CHECK_THROWS_AS(GaussianPrior(0.0, 0.0), ValidationError);
    const GaussianPrior prior(0.2, 0.1);
    const double mass =
        integrate([&](double x) { return prior.pdf(x); }, prior.mean - 10.0 * prior.sigma,
                  prior.mean + 10.0 * prior.sigma, 1e-10)
            .value;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("TabulatedPrior validation") {
    const GaussianPrior prior(0.0, 0.1);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior);
    CHECK(tab.size() == 2001);
    CHECK(tab.weights().sum() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tab.weights()(0) < 1e-12);
    CHECK(tab.weights()(tab.size() - 1) < 1e-12);
    CHECK(tab.stddev() == doctest::Approx(0.1).epsilon(1e-6));

    // non-uniform grid rejected
    Eigen::VectorXd grid(3), w(3);
    grid << 0.0, 1.0, 2.5;
    w << 0.0, 1.0, 0.0;
    CHECK_THROWS_AS(TabulatedPrior(grid, w), ValidationError);

    // boundary weight must vanish
    Eigen::VectorXd grid2(5), w2(5);
    grid2 << 0, 1, 2, 3, 4;
    w2 << 0.25, 0.25, 0.25, 0.25, 0.0;
    CHECK_THROWS_AS(TabulatedPrior(grid2, w2), ValidationError);
}

TEST_CASE("prior_overlap_gc") {
    const GaussianPrior gauss(0.0, 0.1);
    const Prior prior(gauss);
    CHECK(prior_overlap_gc(prior, 0.37, 0.0) == doctest::Approx(1.0));
    // frozen closed-form value exp(-0.5)
    CHECK(prior_overlap_gc(prior, 0.5, 0.2) ==
          doctest::Approx(0.60653065971263342).epsilon(1e-12));
    CHECK(prior_overlap_gc(prior, 1e-9, 0.2) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(prior_overlap_gc(prior, 1.0 - 1e-9, 0.2) == doctest::Approx(1.0).epsilon(1e-6));

    // quadrature on a tabulated copy agrees with the closed form
    const Prior tab(TabulatedPrior::from_gaussian(gauss, 10.0, 4001));
    CHECK(prior_overlap_gc(tab, 0.5, 0.2) ==
          doctest::Approx(0.60653065971263342).epsilon(1e-7));

    // change-of-variables symmetry g_c(s, h) = g_c(1-s, -h)
    for (double s : {0.2, 0.5, 0.8}) {
        for (double h : {0.05, 0.13}) {
            CHECK(prior_overlap_gc(prior, s, h) ==
                  doctest::Approx(prior_overlap_gc(prior, 1.0 - s, -h)).epsilon(1e-12));
            CHECK(prior_overlap_gc(tab, s, h) ==
                  doctest::Approx(prior_overlap_gc(tab, 1.0 - s, -h)).epsilon(1e-9));
        }
    }
}

TEST_CASE("PhaseModel validation and factories") {
    CHECK_THROWS_AS(PhaseModel::bosonic(1.5, 10), ValidationError);
    RealVector e(2);
    e << 0.0, 1.0;
    ComplexVector c(2);
    c << 1.0, 1.0;  // not normalized
    CHECK_THROWS_AS(PhaseModel(e, c), ValidationError);

    const PhaseModel bos = PhaseModel::bosonic(0.1, 10);
    CHECK(bos.dim() == 11);
    CHECK(bos.mean_energy() == doctest::Approx(0.55).epsilon(1e-14));
}

TEST_CASE("evolve") {
    const PhaseModel qubit = PhaseModel::qubit(4.0);
    const ComplexVector unchanged = evolve(qubit, 0.0);
    CHECK(std::abs(unchanged(0) - qubit.amplitudes()(0)) <= 1e-15);
    CHECK(std::abs(unchanged(1) - qubit.amplitudes()(1)) <= 1e-15);

    // half period flips the relative sign
    const ComplexVector flipped = evolve(qubit, M_PI / 4.0);
    CHECK(std::abs(flipped(0) - 1.0 / std::sqrt(2.0)) <= 1e-14);
    CHECK(std::abs(flipped(1) + 1.0 / std::sqrt(2.0)) <= 1e-14);

    // shifting every level changes the output only by a global phase
    RealVector shifted_e = qubit.energies().array() + 2.7;
    const PhaseModel shifted(shifted_e, qubit.amplitudes());
    const ComplexVector a = evolve(qubit, 0.9);
    const ComplexVector b = evolve(shifted, 0.9);
    const Complex phase = b(0) / a(0);
    CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-12);
    CHECK(std::abs(b(1) - phase * a(1)) <= 1e-12);
}

TEST_CASE("z_overlap") {
    const PhaseModel qubit = PhaseModel::qubit(5.0);
    CHECK(std::abs(z_overlap(qubit, 0.0) - 1.0) <= 1e-15);
    CHECK(std::abs(z_overlap(qubit, M_PI / 5.0)) <= 1e-14);  // (1 + e^{-i pi})/2 = 0

    const PhaseModel bos = PhaseModel::bosonic(0.1, 10);
    CHECK(std::abs(z_overlap(bos, 2.0 * M_PI) - 1.0) <= 1e-12);
    // z(h) = 0.9 + 0.01 sum_j e^{-ijh}
    const double h = 0.7;
    Complex expected(0.9, 0.0);
    for (int j = 1; j <= 10; ++j) expected += 0.01 * std::exp(Complex(0.0, -j * h));
    CHECK(std::abs(z_overlap(bos, h) - expected) <= 1e-14);

    for (double hh : {0.1, 0.5, 1.7, 4.0, 13.0}) {
        CHECK(std::abs(z_overlap(bos, hh)) <= 1.0 + 1e-12);
        CHECK(std::abs(z_overlap(qubit, hh)) <= 1.0 + 1e-12);
    }
}

TEST_CASE("average_state") {
    // delta-prior limit: rho_bar -> U_mu rho U_mu^dagger
    const PhaseModel qubit = PhaseModel::qubit(10.0);
    const double mu = 0.3;
    const HermitianOperator near_delta =
        average_state(qubit, Prior(GaussianPrior(mu, 1e-9)));
    const ComplexVector psi_mu = evolve(qubit, mu);
    const ComplexMatrix direct = psi_mu * psi_mu.adjoint();
    CHECK((near_delta.matrix() - direct).cwiseAbs().maxCoeff() <= 1e-10);

    // qubit off-diagonal magnitude gamma/2 = e^{-0.5}/2, against quadrature
    const GaussianPrior prior(0.0, 0.1);
    const HermitianOperator closed = average_state(qubit, Prior(prior));
    CHECK(std::abs(closed.matrix()(0, 1)) ==
          doctest::Approx(0.30326532985631671).epsilon(1e-12));
    const HermitianOperator quad =
        average_state(qubit, Prior(TabulatedPrior::from_gaussian(prior, 10.0, 4001)));
    CHECK((closed.matrix() - quad.matrix()).cwiseAbs().maxCoeff() <= 1e-8);

    // populations in the H eigenbasis are x-invariant
    CHECK(closed.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(closed.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    require_state(closed);
}

TEST_CASE("GridHybridModel") {
    const GaussianPrior prior(0.0, 0.1);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 8.0, 401);
    const GridHybridModel grid =
        GridHybridModel::from_phase_model(PhaseModel::qubit(10.0), tab);
    CHECK(grid.total_trace() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(grid.dim() == 2);
    CHECK(grid.generator().has_value());

    CHECK_THROWS_AS(
        GridHybridModel::from_phase_model(PhaseModel::qubit(10.0, 2), tab), CapabilityError);
}

TEST_CASE("Povm validation") {
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    CHECK_NOTHROW(Povm({plus, minus}));
    CHECK_THROWS_AS(Povm({plus, plus}), ValidationError);  // does not sum to identity
    ComplexMatrix negative(2, 2);
    negative << 1.5, 0, 0, 1.0;
    ComplexMatrix complement = ComplexMatrix::Identity(2, 2) - negative;
    CHECK_THROWS_AS(Povm({negative, complement}), NegativityError);
}

TEST_CASE("simulate_measurement determinism and trivial POVM") {
    const TabulatedPrior tab = triangle_prior(1.0, 41);
    const GridHybridModel grid =
        GridHybridModel::from_phase_model(PhaseModel::qubit(3.0), tab);
    const Povm trivial({ComplexMatrix::Identity(2, 2)});

    const auto a = simulate_measurement(grid, trivial, 5000, 99);
    const auto b = simulate_measurement(grid, trivial, 5000, 99);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == 0);
    }

    // x follows the prior marginal
    double mean = 0.0;
    for (const auto& s : a) mean += s.x;
    mean /= static_cast<double>(a.size());
    const double se = tab.stddev() / std::sqrt(static_cast<double>(a.size()));
    CHECK(std::abs(mean - tab.mean()) <= 4.0 * se);
}

TEST_CASE("simulate_measurement chi-squared against the exact joint") {
    const TabulatedPrior tab = triangle_prior(1.0, 17);
    const GridHybridModel grid =
        GridHybridModel::from_phase_model(PhaseModel::qubit(3.0), tab);
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    const Povm povm({plus, minus});
    const JointTable joint = joint_distribution(grid, povm);

    const int trials = 10000;
    const auto samples = simulate_measurement(grid, povm, trials, 4242);
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(joint.p.rows(), joint.p.cols());
    for (const auto& s : samples) {
        // grid positions are exact copies of grid values
        Eigen::Index idx = 0;
        (joint.grid.array() - s.x).abs().minCoeff(&idx);
        counts(idx, s.y) += 1.0;
    }

    // lump cells with small expectation into one bin
    double stat = 0.0;
    double lump_expected = 0.0, lump_observed = 0.0;
    int cells = 0;
    for (Eigen::Index i = 0; i < joint.p.rows(); ++i) {
        for (Eigen::Index y = 0; y < joint.p.cols(); ++y) {
            const double expected = joint.p(i, y) * trials;
            if (expected < 5.0) {
                lump_expected += expected;
                lump_observed += counts(i, y);
                continue;
            }
            stat += (counts(i, y) - expected) * (counts(i, y) - expected) / expected;
            ++cells;
        }
    }
    if (lump_expected > 0.0) {
        stat += (lump_observed - lump_expected) * (lump_observed - lump_expected) / lump_expected;
        ++cells;
    }
    const int dof = cells - 1;
    // Wilson-Hilferty 99.9% quantile
    const double z = 3.0902;
    const double q = dof * std::pow(1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof)), 3);
    CHECK(stat < q);
}

TEST_CASE("conditional-mean MSE respects the computed bound") {
    const GaussianPrior prior(0.0, 0.1);
    const PhaseModel model = PhaseModel::qubit(10.0);
    const TabulatedPrior tab = TabulatedPrior::from_gaussian(prior, 8.0, 801);
    const GridHybridModel grid = GridHybridModel::from_phase_model(model, tab);
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    const Povm povm({plus, minus});

    const JointTable joint = joint_distribution(grid, povm);
    const Eigen::VectorXd estimator = conditional_mean_estimator(joint);
    const auto samples = simulate_measurement(grid, povm, 20000, 7);
    const MonteCarloMse mc = empirical_mse(samples, estimator);
    const double qwwb = qwwb_phase_optimized(model, Prior(prior)).value;
    CHECK(mc.mse + 3.0 * mc.standard_error >= qwwb);
    // and the Monte Carlo run brackets the exact MSE of this estimator
    CHECK(std::abs(mc.mse - exact_mse(joint, estimator)) <= 4.0 * mc.standard_error);
}
