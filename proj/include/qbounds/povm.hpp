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

#include <cstdint>
#include <vector>

#include "qbounds/grid_model.hpp"
#include "qbounds/linalg.hpp"

namespace qbounds {

/// Positive operator-valued measure: elements positive semidefinite and
/// summing to the identity within 1e-9.
class Povm {
  public:
    explicit Povm(std::vector<ComplexMatrix> elements);

    std::size_t outcomes() const { return elements_.size(); }
    Eigen::Index dim() const { return elements_[0].rows(); }
    const ComplexMatrix& element(std::size_t y) const { return elements_[y]; }

  private:
    std::vector<ComplexMatrix> elements_;
};

/// Discrete joint distribution p(x_i, y) = tr[E_y rho(x_i)] together with
/// the parameter grid it lives on.
struct JointTable {
    Eigen::VectorXd grid;
    double dx = 0.0;
    /// points x outcomes, entries sum to one.
    Eigen::MatrixXd p;
};

JointTable joint_distribution(const GridHybridModel& model, const Povm& povm);

struct Sample {
    double x = 0.0;
    int y = 0;
};

/// i.i.d. draws from p(x_i, y); deterministic for a given seed.
std::vector<Sample> simulate_measurement(const GridHybridModel& model, const Povm& povm,
                                         int trials, std::uint64_t seed);

/// Conditional-mean estimator x~(y) = E[x | y] from the exact joint table;
/// the Bayes-optimal estimator for squared error.  Outcomes of probability
/// zero fall back to the prior mean.
Eigen::VectorXd conditional_mean_estimator(const JointTable& joint);

/// Exact mean-square error of an estimator table under the joint.
double exact_mse(const JointTable& joint, const Eigen::VectorXd& estimator);

struct MonteCarloMse {
    double mse = 0.0;
    /// Standard error of the mean of the squared errors.
    double standard_error = 0.0;
};

MonteCarloMse empirical_mse(const std::vector<Sample>& samples, const Eigen::VectorXd& estimator);

}  // namespace qbounds
