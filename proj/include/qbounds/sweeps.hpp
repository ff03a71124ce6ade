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
 * Benchmark sweeps behind the CLI figure commands.  Sweep points are
 * independent and dispatched to a worker pool; rows are assembled in sweep
 * order so the output is deterministic.
 */

#include <vector>

#include "qbounds/csv.hpp"
#include "qbounds/report.hpp"

namespace qbounds {

/// Qubit benchmark: MMSE, QWWB, QZZB and QCRB versus the generator gap E
/// under a Gaussian prior.
struct Figure1Config {
    double sigma = 0.1;
    /// Empty selects the default grid: 60 log-spaced points on
    /// [0.1/sigma, 100/sigma] (reconstructed axis; the published plot does
    /// not state it numerically).
    std::vector<double> energy_grid;
    bool optimize_s = false;
};

std::vector<double> default_figure1_grid(double sigma);
BoundReport figure1_sweep(const Figure1Config& config);
CsvDocument figure1_csv(const BoundReport& report, double sigma, bool normalized,
                        bool optimize_s = false);

/// Bosonic benchmark: QWWB, QZZB and QCRB versus the probe count nu.
struct Figure2Config {
    double sigma = 0.5;
    double epsilon = 0.1;
    int levels = 10;
    /// Empty selects {1..10, 12, 15, 20, 30, 50, 70, 100}.
    std::vector<int> nu_grid;
    bool optimize_s = false;
};

std::vector<int> default_figure2_grid();
BoundReport figure2_sweep(const Figure2Config& config);
CsvDocument figure2_csv(const BoundReport& report, const Figure2Config& config);

/// Fidelity curves |z(h)|^(2 nu) over h in [0, 10 sigma] for the inset.
CsvDocument fidelity_inset_csv(double sigma, double epsilon, int levels,
                               const std::vector<int>& nus = {1, 2, 5, 10, 100},
                               int points = 401);

}  // namespace qbounds
