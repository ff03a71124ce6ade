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

#include "qbounds/povm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qbounds {

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw ValidationError("Povm: need at least one element");
    const Eigen::Index d = elements_[0].rows();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& e : elements_) {
        if (e.rows() != d || e.cols() != d) throw ValidationError("Povm: dimension mismatch");
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(e, Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -1e-10) {
            throw NegativityError("Povm: element has eigenvalue " +
                                  std::to_string(solver.eigenvalues().minCoeff()));
        }
        sum += e;
    }
    const double defect = (sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 1e-9) {
        throw ValidationError("Povm: elements sum to identity only within " +
                              std::to_string(defect));
    }
}

JointTable joint_distribution(const GridHybridModel& model, const Povm& povm) {
    if (povm.dim() != model.dim()) throw ValidationError("joint_distribution: dimension mismatch");
    const Eigen::Index n = model.points();
    const Eigen::Index ny = static_cast<Eigen::Index>(povm.outcomes());
    Eigen::MatrixXd p(n, ny);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index y = 0; y < ny; ++y) {
            const double v =
                (povm.element(static_cast<std::size_t>(y)) * model.state(i)).trace().real();
            if (v < -1e-10) {
                throw ValidationError("joint_distribution: p(x, y) = " + std::to_string(v) +
                                      " < 0; model and POVM are inconsistent");
            }
            p(i, y) = v < 0.0 ? 0.0 : v;
        }
    }
    return JointTable{model.grid(), model.dx(), std::move(p)};
}

std::vector<Sample> simulate_measurement(const GridHybridModel& model, const Povm& povm,
                                         int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("simulate_measurement: trials must be >= 1");
    const JointTable joint = joint_distribution(model, povm);
    const Eigen::Index n = joint.p.rows();
    const Eigen::Index ny = joint.p.cols();

    // Flattened inverse-CDF sampling; uniforms built from the raw generator
    // words so draws depend only on the seed.
    std::vector<double> cdf(static_cast<std::size_t>(n * ny));
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index y = 0; y < ny; ++y) {
            acc += joint.p(i, y);
            cdf[static_cast<std::size_t>(i * ny + y)] = acc;
        }
    }
    const double total = acc;

    std::mt19937_64 rng(seed);
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        std::size_t flat = static_cast<std::size_t>(it - cdf.begin());
        if (flat >= cdf.size()) flat = cdf.size() - 1;
        const Eigen::Index i = static_cast<Eigen::Index>(flat) / ny;
        const int y = static_cast<int>(static_cast<Eigen::Index>(flat) % ny);
        samples.push_back(Sample{joint.grid(i), y});
    }
    return samples;
}

Eigen::VectorXd conditional_mean_estimator(const JointTable& joint) {
    const Eigen::Index ny = joint.p.cols();
    Eigen::VectorXd estimator(ny);
    const double prior_mean = joint.grid.dot(joint.p.rowwise().sum());
    for (Eigen::Index y = 0; y < ny; ++y) {
        const double py = joint.p.col(y).sum();
        estimator(y) = py > 0.0 ? joint.grid.dot(joint.p.col(y)) / py : prior_mean;
    }
    return estimator;
}

double exact_mse(const JointTable& joint, const Eigen::VectorXd& estimator) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < joint.p.rows(); ++i) {
        for (Eigen::Index y = 0; y < joint.p.cols(); ++y) {
            const double err = estimator(y) - joint.grid(i);
            acc += err * err * joint.p(i, y);
        }
    }
    return acc;
}

MonteCarloMse empirical_mse(const std::vector<Sample>& samples, const Eigen::VectorXd& estimator) {
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for (const Sample& s : samples) {
        const double err = estimator(s.y) - s.x;
        const double sq = err * err;
        ++count;
        const double delta = sq - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (sq - mean);
    }
    const double variance = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    return MonteCarloMse{mean, std::sqrt(variance / static_cast<double>(count))};
}

}  // namespace qbounds
