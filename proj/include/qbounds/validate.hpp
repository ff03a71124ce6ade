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
#include <string>
#include <vector>

#include "qbounds/povm.hpp"

namespace qbounds {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Property suites behind `qbounds validate`:
///  - hermitian_minimality: Hermitian scores minimize tr(L^dag L rho) over
///    the solution family L + iN with [N, rho] = 0.
///  - qcrb_limit: the small-h Weiss-Weinstein bound reproduces the Bayesian
///    Cramer-Rao bound.
///  - mc_covariance_validity: Monte Carlo MSE of the conditional-mean
///    estimator under fixed POVMs respects every computed bound.
///  - classical_degeneration: a commuting family reproduces the classical
///    Weiss-Weinstein bound.
///  - negative_control: a deliberately broken information matrix is caught
///    by the assembly checks.
std::vector<SuiteResult> run_validation_suites(std::uint64_t seed, int mc_trials = 100000);

bool all_passed(const std::vector<SuiteResult>& results);

/// Fixed 2-outcome and 3-outcome qubit measurements used by the Monte
/// Carlo validity suite (equatorial bases and a trine).
std::vector<Povm> reference_qubit_povms();

}  // namespace qbounds
