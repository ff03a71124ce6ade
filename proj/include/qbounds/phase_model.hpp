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
 * Pure-state phase-estimation model: the parameter x enters through
 * exp(-ixH) applied to |psi>, with H diagonal in the computational basis.
 * nu independent probes are never materialized as tensor products; all nu
 * dependence enters analytically through powers of the single-copy overlap
 * z(h) = <psi| exp(-ihH) |psi>.
 */

#include <Eigen/Dense>

#include "qbounds/linalg.hpp"
#include "qbounds/priors.hpp"

namespace qbounds {

class PhaseModel {
  public:
    /// Generator eigenvalues E_j and state amplitudes c_j (unit norm within
    /// 1e-10), nu >= 1 identical probes.
    PhaseModel(RealVector energies, ComplexVector amplitudes, int copies = 1);

    /// Equatorial qubit (|0> + |1>)/sqrt(2) with generator E |1><1|.
    static PhaseModel qubit(double energy, int copies = 1);
    /// Bosonic probe sqrt(1-eps)|0> + sqrt(eps/M) sum_{j=1..M} |j>, generator
    /// the number operator truncated at level M (the truncation is lossless).
    static PhaseModel bosonic(double epsilon, int levels, int copies = 1);

    Eigen::Index dim() const { return energies_.size(); }
    int copies() const { return copies_; }
    const RealVector& energies() const { return energies_; }
    const ComplexVector& amplitudes() const { return amplitudes_; }

    double min_energy() const { return energies_.minCoeff(); }
    double max_energy() const { return energies_.maxCoeff(); }
    /// <H> in the probe state (single copy).
    double mean_energy() const;
    /// Var(H) in the probe state (single copy).
    double energy_variance() const;

    /// |psi><psi| in the H eigenbasis (single copy).
    HermitianOperator initial_state() const;
    /// H as a diagonal matrix in its eigenbasis (single copy).
    HermitianOperator generator() const;

    PhaseModel with_copies(int copies) const { return PhaseModel(energies_, amplitudes_, copies); }

  private:
    RealVector energies_;
    ComplexVector amplitudes_;
    int copies_ = 1;
};

/// Amplitudes of exp(-ixH)|psi> for a single copy.
ComplexVector evolve(const PhaseModel& model, double x);

/// Single-copy overlap z(h) = sum_j |c_j|^2 exp(-i h E_j); |z| <= 1.
/// The nu-probe fidelity is |z(h)|^(2 nu).
Complex z_overlap(const PhaseModel& model, double h);

/// Prior-averaged single-copy state.  Gaussian priors use the
/// characteristic-function closed form; tabulated priors sum the grid.
HermitianOperator average_state(const PhaseModel& model, const Prior& prior);

}  // namespace qbounds
