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

#include "qbounds/grid_model.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qbounds {

GridHybridModel::GridHybridModel(Eigen::VectorXd grid, std::vector<ComplexMatrix> states,
                                 std::optional<ComplexMatrix> generator)
    : grid_(std::move(grid)), states_(std::move(states)), generator_(std::move(generator)) {
    const Eigen::Index n = grid_.size();
    if (n < 3 || states_.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("GridHybridModel: need >= 3 grid points with one state each");
    }
    dx_ = grid_(1) - grid_(0);
    if (!(dx_ > 0.0)) throw ValidationError("GridHybridModel: grid must be ascending");
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs((grid_(i) - grid_(i - 1)) - dx_) > 1e-9 * dx_) {
            throw ValidationError("GridHybridModel: grid spacing must be uniform");
        }
    }
    const Eigen::Index d = states_[0].rows();
    for (const auto& s : states_) {
        if (s.rows() != d || s.cols() != d) {
            throw ValidationError("GridHybridModel: states must share one square dimension");
        }
    }
    const double total = total_trace();
    if (std::abs(total - 1.0) > 1e-8) {
        throw ValidationError("GridHybridModel: hybrid traces sum to " + std::to_string(total));
    }
}

GridHybridModel GridHybridModel::from_phase_model(const PhaseModel& model,
                                                  const TabulatedPrior& prior) {
    if (model.copies() != 1) {
        throw CapabilityError(
            "GridHybridModel: multi-probe models are handled analytically, not on the grid");
    }
    std::vector<ComplexMatrix> states;
    states.reserve(static_cast<std::size_t>(prior.size()));
    for (Eigen::Index i = 0; i < prior.size(); ++i) {
        const ComplexVector psi = evolve(model, prior.grid()(i));
        states.push_back(prior.weights()(i) * (psi * psi.adjoint()));
    }
    return GridHybridModel(prior.grid(), std::move(states), model.generator().matrix());
}

GridHybridModel GridHybridModel::from_conditionals(const Eigen::VectorXd& grid,
                                                   const std::vector<ComplexMatrix>& conditionals,
                                                   const Eigen::VectorXd& weights) {
    if (conditionals.size() != static_cast<std::size_t>(grid.size()) ||
        weights.size() != grid.size()) {
        throw ValidationError("GridHybridModel: grid/conditionals/weights size mismatch");
    }
    std::vector<ComplexMatrix> states;
    states.reserve(conditionals.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        states.push_back(weights(i) * conditionals[static_cast<std::size_t>(i)]);
    }
    return GridHybridModel(grid, std::move(states));
}

double GridHybridModel::total_trace() const {
    double acc = 0.0;
    for (const auto& s : states_) acc += s.trace().real();
    return acc;
}

double GridHybridModel::prior_weight(Eigen::Index i) const {
    return states_[static_cast<std::size_t>(i)].trace().real();
}

HermitianOperator GridHybridModel::average_state() const {
    ComplexMatrix acc = ComplexMatrix::Zero(dim(), dim());
    for (const auto& s : states_) acc += s;
    return HermitianOperator(std::move(acc));
}

}  // namespace qbounds
