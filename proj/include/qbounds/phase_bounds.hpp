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
 * Analytic fast path for single-parameter phase estimation with pure probe
 * states: the Weiss-Weinstein bound through the factorized overlap
 * functions g = g_c g_q, the Bayesian Cramer-Rao bound, the Ziv-Zakai
 * bound, the exact minimum mean-square error where known, and the
 * Heisenberg limit.
 */

#include "qbounds/linalg.hpp"
#include "qbounds/phase_model.hpp"
#include "qbounds/priors.hpp"

namespace qbounds {

/// Factorized overlap functions of a (model, prior) pair.  For a unitary
/// family g(s,h) = g_c(s,h) g_q(h) with the classical part depending only
/// on the prior and the quantum part only on the probe fidelity.
class GFunctions {
  public:
    GFunctions(PhaseModel model, Prior prior);

    double g_c(double s, double h) const { return prior_overlap_gc(prior_, s, h); }
    /// |z(h)|^(2 nu)
    double g_q(double h) const;
    /// Re[(z(h)^2 z(2h)*)^nu]
    double g_tilde_q(double h) const;
    /// g(s, h) = g_c(s, h) g_q(h); lies in [0, 1] for s in (0, 1).
    double g(double s, double h) const { return g_c(s, h) * g_q(h); }
    /// g~(s, 2h) = g_c(s, 2h) g~_q(2h).
    double g_tilde(double s, double h) const { return g_c(s, 2.0 * h) * g_tilde_q(h); }

    const PhaseModel& model() const { return model_; }
    const Prior& prior() const { return prior_; }

  private:
    PhaseModel model_;
    Prior prior_;
};

/// Quantum Weiss-Weinstein bound at one test point:
/// h^2 g(s,h)^2 / [g(2s,h) + g(2-2s,-h) - 2 g~(s,2h)].
double qwwb_phase(const PhaseModel& model, const Prior& prior, double s, double h);
/// Same bound evaluated through an already-built GFunctions pair; the form
/// to use when scanning many (s, h) points.
double qwwb_phase(const GFunctions& gf, double s, double h);

struct QwwbOptimum {
    double value = 0.0;
    double h = 0.0;
    double s = 0.5;
};

/// sup over h in (0, h_max] of the QWWB, by dense scan (seeded with the
/// phase-alignment ripple maxima of the generator spectrum) plus
/// golden-section refinement.  With optimize_s the scan repeats over a
/// 21-point s grid in [0.05, 0.95].
QwwbOptimum qwwb_phase_optimized(const PhaseModel& model, const Prior& prior,
                                 double h_max = -1.0, bool optimize_s = false);

/// Bayesian quantum Cramer-Rao bound 1 / (1/sigma^2 + nu 4 Var_psi(H)).
double qcrb_bayes(const PhaseModel& model, const GaussianPrior& prior);

/// Quantum Ziv-Zakai bound
/// 1/2 integral_0^inf dh h erfc(h / (2 sqrt(2) sigma)) [1 - sqrt(1 - F(h))]
/// with fidelity F(h) = |z(h)|^(2 nu).
double qzzb_gaussian(const PhaseModel& model, const GaussianPrior& prior);

/// Quantum Fisher information sum_{j,k} 2 (l_j - l_k)^2 |H_jk|^2 / (l_j + l_k)
/// over eigenpairs of rho with l_j + l_k above the support cutoff.
double qfi(const HermitianOperator& rho, const HermitianOperator& generator);

/// Exact MMSE sigma^2 - sigma^4 F(rho_bar, H) for a single unitary probe
/// under a Gaussian prior.  Throws CapabilityError for multi-probe models,
/// where the MMSE is not known in closed form.
double mmse_gaussian(const PhaseModel& model, const GaussianPrior& prior);

/// lambda = sin(phi) = (1 - cos(phi)) / phi, the constant of the linear
/// lower bound cos(theta) >= 1 - lambda |theta|.
struct SineConstant {
    double lambda = 0.0;
    double phi = 0.0;
};

const SineConstant& sine_constant();

struct HeisenbergLimit {
    double H_plus = 0.0;       // nu (tr(H rho) - E_0)
    double h_star = 0.0;       // 1 / (4 lambda H_plus)
    double kappa = 0.0;        // sup_s g_c(s,h*)^2 / [g_c(2s,h*) + g_c(2-2s,-h*)]
    double bound_prime = 0.0;  // kappa h*^2 |z(h*)|^(2 nu)
    double bound = 0.0;        // kappa / (32 lambda^2 H_plus^2)
};

HeisenbergLimit heisenberg_limit(const PhaseModel& model, const GaussianPrior& prior);

}  // namespace qbounds
