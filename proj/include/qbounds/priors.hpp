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

#include <variant>

#include <Eigen/Dense>

#include "qbounds/errors.hpp"

namespace qbounds {

/// Gaussian prior density, mean and standard deviation in radians.
struct GaussianPrior {
    GaussianPrior(double mean_, double sigma_) : mean(mean_), sigma(sigma_) {
        if (!(sigma > 0.0)) throw ValidationError("GaussianPrior: sigma must be > 0");
    }
    double mean = 0.0;
    double sigma = 1.0;

    double pdf(double x) const;
};

/// Prior density tabulated on a uniform ascending grid.  Weights are
/// probabilities (density times grid step) summing to one; they must vanish
/// at the grid edges so that displaced copies of the density stay inside
/// the window.
class TabulatedPrior {
  public:
    TabulatedPrior(Eigen::VectorXd grid, Eigen::VectorXd weights);

    /// Samples a Gaussian on [mean - half_width_sigmas * sigma,
    /// mean + half_width_sigmas * sigma].  The default window keeps the
    /// out-of-window mass below 1.3e-15.
    static TabulatedPrior from_gaussian(const GaussianPrior& prior,
                                        double half_width_sigmas = 8.0, int points = 2001);

    Eigen::Index size() const { return grid_.size(); }
    double dx() const { return dx_; }
    const Eigen::VectorXd& grid() const { return grid_; }
    const Eigen::VectorXd& weights() const { return weights_; }
    double density(Eigen::Index i) const { return weights_(i) / dx_; }
    /// Linearly interpolated density, zero outside the grid.
    double density_at(double x) const;

    double mean() const;
    double stddev() const;

  private:
    Eigen::VectorXd grid_;
    Eigen::VectorXd weights_;
    double dx_ = 0.0;
};

using Prior = std::variant<GaussianPrior, TabulatedPrior>;

/// Prior overlap g_c(s, h) = integral of p(x+h)^s p(x)^(1-s) dx over the
/// support of p.  Gaussian priors use the closed form
/// exp[-h^2 s(1-s) / (2 sigma^2)], valid for every real s; tabulated priors
/// use grid quadrature and accept exponents in (0, 2).
double prior_overlap_gc(const Prior& prior, double s, double h);
double prior_overlap_gc(const GaussianPrior& prior, double s, double h);
double prior_overlap_gc(const TabulatedPrior& prior, double s, double h);

double prior_sigma(const Prior& prior);
double prior_mean(const Prior& prior);

}  // namespace qbounds
