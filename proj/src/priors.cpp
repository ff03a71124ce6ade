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

#include "qbounds/priors.hpp"

#include <cmath>
#include <string>

namespace qbounds {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
constexpr double kBoundaryWeightTol = 1e-12;
}  // namespace

double GaussianPrior::pdf(double x) const {
    const double u = (x - mean) / sigma;
    return std::exp(-0.5 * u * u) / (sigma * std::sqrt(kTwoPi));
}

TabulatedPrior::TabulatedPrior(Eigen::VectorXd grid, Eigen::VectorXd weights)
    : grid_(std::move(grid)), weights_(std::move(weights)) {
    const Eigen::Index n = grid_.size();
    if (n < 3 || weights_.size() != n) {
        throw ValidationError("TabulatedPrior: need >= 3 grid points and matching weights");
    }
    dx_ = grid_(1) - grid_(0);
    if (!(dx_ > 0.0)) throw ValidationError("TabulatedPrior: grid must be ascending");
    for (Eigen::Index i = 1; i < n; ++i) {
        if (std::abs((grid_(i) - grid_(i - 1)) - dx_) > 1e-9 * dx_) {
            throw ValidationError("TabulatedPrior: grid spacing must be uniform");
        }
    }
    if (weights_.minCoeff() < 0.0) {
        throw ValidationError("TabulatedPrior: weights must be nonnegative");
    }
    const double total = weights_.sum();
    if (std::abs(total - 1.0) > 1e-10) {
        throw ValidationError("TabulatedPrior: weights sum to " + std::to_string(total));
    }
    weights_ /= total;
    if (weights_(0) >= kBoundaryWeightTol || weights_(n - 1) >= kBoundaryWeightTol) {
        throw ValidationError("TabulatedPrior: density must vanish at the grid boundary");
    }
}

TabulatedPrior TabulatedPrior::from_gaussian(const GaussianPrior& prior,
                                             double half_width_sigmas, int points) {
    if (points < 3) throw ValidationError("TabulatedPrior::from_gaussian: points < 3");
    if (!(half_width_sigmas >= 8.0)) {
        throw ValidationError("TabulatedPrior::from_gaussian: window narrower than 8 sigma");
    }
    const double half = half_width_sigmas * prior.sigma;
    Eigen::VectorXd grid(points);
    Eigen::VectorXd w(points);
    for (int i = 0; i < points; ++i) {
        grid(i) = prior.mean - half + 2.0 * half * static_cast<double>(i) / (points - 1);
        w(i) = prior.pdf(grid(i));
    }
    w /= w.sum();
    return TabulatedPrior(std::move(grid), std::move(w));
}

double TabulatedPrior::density_at(double x) const {
    if (x < grid_(0) || x > grid_(grid_.size() - 1)) return 0.0;
    const double t = (x - grid_(0)) / dx_;
    const Eigen::Index i = std::min<Eigen::Index>(static_cast<Eigen::Index>(t), grid_.size() - 2);
    const double frac = t - static_cast<double>(i);
    return (1.0 - frac) * density(i) + frac * density(i + 1);
}

double TabulatedPrior::mean() const { return grid_.dot(weights_); }

double TabulatedPrior::stddev() const {
    const double m = mean();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < grid_.size(); ++i) {
        acc += weights_(i) * (grid_(i) - m) * (grid_(i) - m);
    }
    return std::sqrt(acc);
}

double prior_overlap_gc(const GaussianPrior& prior, double s, double h) {
    const double sigma2 = prior.sigma * prior.sigma;
    return std::exp(-h * h * s * (1.0 - s) / (2.0 * sigma2));
}

double prior_overlap_gc(const TabulatedPrior& prior, double s, double h) {
    if (!(s > 0.0 && s < 2.0)) {
        throw ValidationError("prior_overlap_gc: tabulated priors need exponents in (0, 2)");
    }
    double acc = 0.0;
    for (Eigen::Index i = 0; i < prior.size(); ++i) {
        const double p = prior.density(i);
        if (p <= 0.0) continue;
        const double q = prior.density_at(prior.grid()(i) + h);
        if (q <= 0.0) continue;
        acc += std::pow(q, s) * std::pow(p, 1.0 - s) * prior.dx();
    }
    return acc;
}

double prior_overlap_gc(const Prior& prior, double s, double h) {
    return std::visit([&](const auto& p) { return prior_overlap_gc(p, s, h); }, prior);
}

double prior_sigma(const Prior& prior) {
    if (const auto* g = std::get_if<GaussianPrior>(&prior)) return g->sigma;
    return std::get<TabulatedPrior>(prior).stddev();
}

double prior_mean(const Prior& prior) {
    if (const auto* g = std::get_if<GaussianPrior>(&prior)) return g->mean;
    return std::get<TabulatedPrior>(prior).mean();
}

}  // namespace qbounds
