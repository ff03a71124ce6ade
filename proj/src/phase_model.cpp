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

#include "qbounds/phase_model.hpp"

#include <cmath>
#include <string>

namespace qbounds {

PhaseModel::PhaseModel(RealVector energies, ComplexVector amplitudes, int copies)
    : energies_(std::move(energies)), amplitudes_(std::move(amplitudes)), copies_(copies) {
    if (energies_.size() == 0 || energies_.size() != amplitudes_.size()) {
        throw ValidationError("PhaseModel: energies and amplitudes must have equal nonzero size");
    }
    if (copies_ < 1) throw ValidationError("PhaseModel: copies must be >= 1");
    if (!energies_.allFinite()) throw ValidationError("PhaseModel: energies must be finite");
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-10) {
        throw ValidationError("PhaseModel: amplitude norm^2 = " + std::to_string(norm2));
    }
}

PhaseModel PhaseModel::qubit(double energy, int copies) {
    RealVector e(2);
    e << 0.0, energy;
    ComplexVector c(2);
    const double r = 1.0 / std::sqrt(2.0);
    c << Complex(r, 0.0), Complex(r, 0.0);
    return PhaseModel(std::move(e), std::move(c), copies);
}

PhaseModel PhaseModel::bosonic(double epsilon, int levels, int copies) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ValidationError("PhaseModel::bosonic: epsilon must be in (0, 1)");
    }
    if (levels < 1) throw ValidationError("PhaseModel::bosonic: M must be >= 1");
    RealVector e(levels + 1);
    ComplexVector c(levels + 1);
    c(0) = Complex(std::sqrt(1.0 - epsilon), 0.0);
    e(0) = 0.0;
    const double amp = std::sqrt(epsilon / levels);
    for (int j = 1; j <= levels; ++j) {
        e(j) = static_cast<double>(j);
        c(j) = Complex(amp, 0.0);
    }
    return PhaseModel(std::move(e), std::move(c), copies);
}

double PhaseModel::mean_energy() const {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < dim(); ++j) acc += std::norm(amplitudes_(j)) * energies_(j);
    return acc;
}

double PhaseModel::energy_variance() const {
    const double mean = mean_energy();
    double acc = 0.0;
    for (Eigen::Index j = 0; j < dim(); ++j) {
        acc += std::norm(amplitudes_(j)) * (energies_(j) - mean) * (energies_(j) - mean);
    }
    return acc;
}

HermitianOperator PhaseModel::initial_state() const {
    ComplexMatrix rho = amplitudes_ * amplitudes_.adjoint();
    return HermitianOperator(std::move(rho));
}

HermitianOperator PhaseModel::generator() const {
    ComplexMatrix h = energies_.cast<Complex>().asDiagonal();
    return HermitianOperator(std::move(h));
}

ComplexVector evolve(const PhaseModel& model, double x) {
    ComplexVector out(model.dim());
    for (Eigen::Index j = 0; j < model.dim(); ++j) {
        out(j) = model.amplitudes()(j) * std::exp(Complex(0.0, -x * model.energies()(j)));
    }
    return out;
}

Complex z_overlap(const PhaseModel& model, double h) {
    Complex acc(0.0, 0.0);
    for (Eigen::Index j = 0; j < model.dim(); ++j) {
        acc += std::norm(model.amplitudes()(j)) * std::exp(Complex(0.0, -h * model.energies()(j)));
    }
    return acc;
}

HermitianOperator average_state(const PhaseModel& model, const Prior& prior) {
    const Eigen::Index d = model.dim();
    ComplexMatrix rho = model.initial_state().matrix();
    ComplexMatrix out(d, d);
    if (const auto* g = std::get_if<GaussianPrior>(&prior)) {
        // Dephasing by the prior characteristic function:
        // rho_jk -> rho_jk E[exp(-ix(E_j - E_k))].
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                const double w = model.energies()(j) - model.energies()(k);
                const Complex phase = std::exp(Complex(0.0, -g->mean * w));
                out(j, k) = rho(j, k) * phase * std::exp(-0.5 * g->sigma * g->sigma * w * w);
            }
        }
    } else {
        const auto& tab = std::get<TabulatedPrior>(prior);
        for (Eigen::Index j = 0; j < d; ++j) {
            for (Eigen::Index k = 0; k < d; ++k) {
                const double w = model.energies()(j) - model.energies()(k);
                Complex chi(0.0, 0.0);
                for (Eigen::Index i = 0; i < tab.size(); ++i) {
                    chi += tab.weights()(i) * std::exp(Complex(0.0, -tab.grid()(i) * w));
                }
                out(j, k) = rho(j, k) * chi;
            }
        }
    }
    return HermitianOperator(std::move(out));
}

}  // namespace qbounds
