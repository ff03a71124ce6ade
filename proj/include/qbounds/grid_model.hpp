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

#include <optional>
#include <vector>

#include "qbounds/linalg.hpp"
#include "qbounds/phase_model.hpp"
#include "qbounds/priors.hpp"

namespace qbounds {

/// Discretized hybrid state: rho(x_i) = rho_{x_i} p(x_i) dx over a finite
/// uniform x grid.  Each stored matrix carries its prior probability, so
/// the traces sum to one.
class GridHybridModel {
  public:
    GridHybridModel(Eigen::VectorXd grid, std::vector<ComplexMatrix> states,
                    std::optional<ComplexMatrix> generator = std::nullopt);

    /// Discretizes exp(-ixH)|psi><psi|exp(ixH) against a tabulated prior.
    /// Only single-probe models are supported; multi-probe hybrid states
    /// would need the tensor-product Hilbert space.
    static GridHybridModel from_phase_model(const PhaseModel& model, const TabulatedPrior& prior);

    /// Builds the hybrid state from caller-supplied conditional states
    /// rho_x (unit trace each) and prior weights.
    static GridHybridModel from_conditionals(const Eigen::VectorXd& grid,
                                             const std::vector<ComplexMatrix>& conditionals,
                                             const Eigen::VectorXd& weights);

    Eigen::Index points() const { return grid_.size(); }
    Eigen::Index dim() const { return states_.empty() ? 0 : states_[0].rows(); }
    int param_dim() const { return 1; }
    double dx() const { return dx_; }
    const Eigen::VectorXd& grid() const { return grid_; }
    const std::vector<ComplexMatrix>& states() const { return states_; }
    const ComplexMatrix& state(Eigen::Index i) const { return states_[static_cast<std::size_t>(i)]; }
    const std::optional<ComplexMatrix>& generator() const { return generator_; }

    double total_trace() const;
    /// Prior marginal probability of grid point i (trace of rho(x_i)).
    double prior_weight(Eigen::Index i) const;
    /// Sum of the hybrid states = prior-averaged state.
    HermitianOperator average_state() const;

  private:
    Eigen::VectorXd grid_;
    double dx_ = 0.0;
    std::vector<ComplexMatrix> states_;
    std::optional<ComplexMatrix> generator_;
};

}  // namespace qbounds
