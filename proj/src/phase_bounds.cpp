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

#include "qbounds/phase_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qbounds/numerics.hpp"

namespace qbounds {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kDegenerateDenominator = 1e-14;

Complex ipow(Complex base, int exponent) {
    Complex acc(1.0, 0.0);
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

double real_ipow(double base, int exponent) {
    double acc = 1.0;
    while (exponent > 0) {
        if (exponent & 1) acc *= base;
        base *= base;
        exponent >>= 1;
    }
    return acc;
}

/// h values where the phase factors of every generator gap realign, i.e.
/// the ripple maxima of cos-type factors in the bound objective.
std::vector<double> ripple_seeds(const PhaseModel& model, double lo, double hi) {
    std::set<double> gaps;
    for (Eigen::Index j = 0; j < model.dim(); ++j) {
        for (Eigen::Index k = j + 1; k < model.dim(); ++k) {
            const double gap = std::abs(model.energies()(j) - model.energies()(k));
            if (gap > 0.0) gaps.insert(gap);
        }
    }
    std::vector<double> seeds;
    constexpr std::size_t kMaxSeeds = 20000;
    for (double gap : gaps) {
        const double period = kTwoPi / gap;
        for (double h = period; h <= hi && seeds.size() < kMaxSeeds; h += period) {
            if (h >= lo) seeds.push_back(h);
        }
        if (seeds.size() >= kMaxSeeds) break;
    }
    return seeds;
}

}  // namespace

GFunctions::GFunctions(PhaseModel model, Prior prior)
    : model_(std::move(model)), prior_(std::move(prior)) {}

double GFunctions::g_q(double h) const {
    return real_ipow(std::norm(z_overlap(model_, h)), model_.copies());
}

double GFunctions::g_tilde_q(double h) const {
    const Complex zh = z_overlap(model_, h);
    const Complex z2h = z_overlap(model_, 2.0 * h);
    return ipow(zh * zh * std::conj(z2h), model_.copies()).real();
}

double qwwb_phase(const PhaseModel& model, const Prior& prior, double s, double h) {
    return qwwb_phase(GFunctions(model, prior), s, h);
}

double qwwb_phase(const GFunctions& gf, double s, double h) {
    if (!(s > 0.0 && s < 1.0)) throw ValidationError("qwwb_phase: s must lie in (0, 1)");
    if (h == 0.0) throw ValidationError("qwwb_phase: h must be nonzero");
    const double gq = gf.g_q(h);  // |z(-h)| = |z(h)|
    const double numerator = h * h * gf.g(s, h) * gf.g(s, h);
    const double denominator =
        (gf.g_c(2.0 * s, h) + gf.g_c(2.0 - 2.0 * s, -h)) * gq - 2.0 * gf.g_tilde(s, h);
    if (denominator <= kDegenerateDenominator) {
        throw DegenerateTestPointError("qwwb_phase: bound denominator " +
                                       std::to_string(denominator) +
                                       " vanished; the test point is uninformative");
    }
    return numerator / denominator;
}

QwwbOptimum qwwb_phase_optimized(const PhaseModel& model, const Prior& prior, double h_max,
                                 bool optimize_s) {
    const double sigma = prior_sigma(prior);
    const double upper = h_max > 0.0 ? h_max : 10.0 * sigma;
    const double lower = std::min(1e-4 * sigma, 0.5 * upper);

    // Sample at least eight points per period of the fastest phase factor,
    // z(2h) under nu-fold composition.
    const double spread = model.max_energy() - model.min_energy();
    const double freq = 2.0 * spread * model.copies();
    const int dense = static_cast<int>(
        std::clamp((upper - lower) * freq * 8.0 / kTwoPi, 2000.0, 100000.0));

    ScanSpec spec;
    spec.lower = lower;
    spec.upper = upper;
    spec.coarse_points = dense;
    spec.seeds = ripple_seeds(model, lower, upper);

    const GFunctions gf(model, prior);
    const auto objective_for = [&gf](double s) {
        return [&gf, s](double h) -> double {
            try {
                return qwwb_phase(gf, s, h);
            } catch (const DegenerateTestPointError&) {
                return -std::numeric_limits<double>::infinity();
            }
        };
    };

    QwwbOptimum best;
    std::vector<double> s_values{0.5};
    if (optimize_s) {
        for (int i = 0; i < 21; ++i) s_values.push_back(0.05 + 0.9 * i / 20.0);
    }
    for (double s : s_values) {
        const MaximizeResult res = maximize_1d(objective_for(s), spec);
        if (res.max > best.value) best = QwwbOptimum{res.max, res.argmax, s};
    }
    return best;
}

double qcrb_bayes(const PhaseModel& model, const GaussianPrior& prior) {
    const double fisher_prior = 1.0 / (prior.sigma * prior.sigma);
    const double fisher_quantum = 4.0 * model.energy_variance() * model.copies();
    return 1.0 / (fisher_prior + fisher_quantum);
}

double qzzb_gaussian(const PhaseModel& model, const GaussianPrior& prior) {
    const double sigma = prior.sigma;
    const double h_max = 12.0 * std::sqrt(2.0) * sigma;  // erfc argument 6, < 2e-16
    const int copies = model.copies();
    const auto integrand = [&](double h) -> double {
        const double fidelity = real_ipow(std::norm(z_overlap(model, h)), copies);
        const double tail = 1.0 - std::sqrt(std::max(0.0, 1.0 - fidelity));
        return 0.5 * h * std::erfc(h / (2.0 * std::sqrt(2.0) * sigma)) * tail;
    };
    return integrate(integrand, 0.0, h_max, 1e-8).value;
}

double qfi(const HermitianOperator& rho, const HermitianOperator& generator) {
    if (rho.dim() != generator.dim()) throw ValidationError("qfi: dimension mismatch");
    const EigDecomposition eig = eig_hermitian(rho);
    const double lambda_max = eig.eigenvalues.maxCoeff();
    if (lambda_max <= 0.0) return 0.0;
    const double cutoff = kSupportTol * lambda_max;
    const ComplexMatrix h_eig = eig.eigenvectors.adjoint() * generator.matrix() * eig.eigenvectors;
    double acc = 0.0;
    for (Eigen::Index j = 0; j < rho.dim(); ++j) {
        for (Eigen::Index k = 0; k < rho.dim(); ++k) {
            if (j == k) continue;
            const double denom = eig.eigenvalues(j) + eig.eigenvalues(k);
            if (denom <= cutoff) continue;
            const double diff = eig.eigenvalues(j) - eig.eigenvalues(k);
            acc += 2.0 * diff * diff * std::norm(h_eig(j, k)) / denom;
        }
    }
    return acc;
}

double mmse_gaussian(const PhaseModel& model, const GaussianPrior& prior) {
    if (model.copies() != 1) {
        throw CapabilityError("mmse_gaussian: the exact MMSE is only available for a single probe");
    }
    const HermitianOperator rho_bar = average_state(model, Prior(prior));
    const double fisher = qfi(rho_bar, model.generator());
    const double sigma2 = prior.sigma * prior.sigma;
    return sigma2 - sigma2 * sigma2 * fisher;
}

const SineConstant& sine_constant() {
    static const SineConstant cached = [] {
        const auto f = [](double phi) { return std::sin(phi) - (1.0 - std::cos(phi)) / phi; };
        const double phi = solve_root(f, 2.0, 3.0, 1e-14);
        return SineConstant{std::sin(phi), phi};
    }();
    return cached;
}

HeisenbergLimit heisenberg_limit(const PhaseModel& model, const GaussianPrior& prior) {
    const double h_plus = model.copies() * (model.mean_energy() - model.min_energy());
    if (!(h_plus > 0.0)) {
        throw ValidationError("heisenberg_limit: the generator has no dynamics (H_+ = 0)");
    }
    const double lambda = sine_constant().lambda;
    const double h_star = 1.0 / (4.0 * lambda * h_plus);

    const Prior p(prior);
    const auto kappa_objective = [&](double s) -> double {
        const double num = prior_overlap_gc(p, s, h_star);
        const double den =
            prior_overlap_gc(p, 2.0 * s, h_star) + prior_overlap_gc(p, 2.0 - 2.0 * s, -h_star);
        return num * num / den;
    };
    ScanSpec spec;
    spec.lower = 0.01;
    spec.upper = 0.99;
    spec.coarse_points = 99;
    spec.refine_tol = 1e-12;
    const double kappa = maximize_1d(kappa_objective, spec).max;

    const double fidelity =
        real_ipow(std::norm(z_overlap(model, h_star)), model.copies());
    HeisenbergLimit out;
    out.H_plus = h_plus;
    out.h_star = h_star;
    out.kappa = kappa;
    out.bound_prime = kappa * h_star * h_star * fidelity;
    out.bound = kappa / (32.0 * lambda * lambda * h_plus * h_plus);
    if (out.bound_prime < out.bound * (1.0 - 1e-12)) {
        throw Error("heisenberg_limit: fidelity bound violated, bound' < bound");
    }
    return out;
}

}  // namespace qbounds
