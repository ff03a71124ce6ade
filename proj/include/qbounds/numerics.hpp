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

#include <functional>
#include <vector>

#include "qbounds/errors.hpp"

namespace qbounds {

/// 1-D scan-and-refine maximization domain.
struct ScanSpec {
    ScanSpec() = default;
    ScanSpec(double lower_, double upper_, int coarse_points_ = 400, double refine_tol_ = -1.0)
        : lower(lower_), upper(upper_), coarse_points(coarse_points_), refine_tol(refine_tol_) {}

    double lower = 0.0;
    double upper = 1.0;
    /// Number of coarse grid points (clamped below at 16).
    int coarse_points = 400;
    /// Width at which golden-section refinement stops; <= 0 selects
    /// 1e-10 * (upper - lower).
    double refine_tol = -1.0;
    /// Extra candidate abscissae scanned alongside the uniform grid,
    /// e.g. known ripple maxima of an oscillatory objective.  Values
    /// outside [lower, upper] are ignored.
    std::vector<double> seeds;
};

struct MaximizeResult {
    double argmax = 0.0;
    double max = 0.0;
};

/// Coarse grid scan followed by golden-section refinement around the best
/// point.  Non-finite objective values are treated as -inf; if the whole
/// scan is non-finite an EmptyScanError is thrown.  Deterministic.
MaximizeResult maximize_1d(const std::function<double(double)>& f, const ScanSpec& spec);

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    /// False when the subdivision budget ran out before the tolerance was
    /// met; `value` then carries the best available estimate.
    bool converged = true;
};

/// Adaptive Simpson quadrature of f over [a, b] to relative tolerance
/// rel_tol with an absolute floor of 1e-15.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            double rel_tol = 1e-8);

/// Bisection root of f on [lo, hi] to `abs_tol`.  Throws BracketError when
/// f(lo) and f(hi) do not straddle zero.
double solve_root(const std::function<double(double)>& f, double lo, double hi,
                  double abs_tol = 1e-13);

}  // namespace qbounds
