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

#include "qbounds/sweeps.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "qbounds/phase_bounds.hpp"
#include "qbounds/phase_model.hpp"

namespace qbounds {

namespace {

/// Evaluates fn(i) for i in [0, count) on a small worker pool and returns
/// the results in index order.
template <typename T, typename Fn>
std::vector<T> ordered_parallel_map(int count, Fn fn) {
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::atomic<int> next{0};
    std::vector<T> results(static_cast<std::size_t>(count));
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    results[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace

std::vector<double> default_figure1_grid(double sigma) {
    constexpr int kPoints = 60;
    const double lo = std::log10(0.1 / sigma);
    const double hi = std::log10(100.0 / sigma);
    std::vector<double> grid(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        grid[static_cast<std::size_t>(i)] =
            std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / (kPoints - 1));
    }
    return grid;
}

BoundReport figure1_sweep(const Figure1Config& config) {
    const GaussianPrior prior(0.0, config.sigma);
    const std::vector<double> grid =
        config.energy_grid.empty() ? default_figure1_grid(config.sigma) : config.energy_grid;

    const auto row_for = [&](int i) -> BoundRow {
        const double energy = grid[static_cast<std::size_t>(i)];
        const PhaseModel model = PhaseModel::qubit(energy);
        BoundRow row;
        row.sweep_value = energy;
        const QwwbOptimum opt =
            qwwb_phase_optimized(model, Prior(prior), -1.0, config.optimize_s);
        row.qwwb = opt.value;
        row.qwwb_h = opt.h;
        row.qwwb_s = opt.s;
        row.qzzb = qzzb_gaussian(model, prior);
        row.qcrb = qcrb_bayes(model, prior);
        row.mmse = mmse_gaussian(model, prior);
        return row;
    };

    BoundReport report;
    report.model_id = "qubit";
    report.sweep_name = "E";
    std::vector<BoundRow> rows =
        ordered_parallel_map<BoundRow>(static_cast<int>(grid.size()), row_for);
    report.rows = std::move(rows);
    validate_report(report);
    return report;
}

CsvDocument figure1_csv(const BoundReport& report, double sigma, bool normalized,
                        bool optimize_s) {
    CsvDocument doc;
    doc.header = {{"command", "figure1"},
                  {"model", report.model_id},
                  {"sigma", format_double(sigma)},
                  {"normalized", normalized ? "1" : "0"},
                  {"s", optimize_s ? "optimized[0.05,0.95]" : "0.5"},
                  {"h_scan", "(0," + format_double(10.0 * sigma) + "]"}};
    doc.columns = {"E", "mmse", "qwwb", "qzzb", "qcrb"};
    const double scale = normalized ? 1.0 / (sigma * sigma) : 1.0;
    for (const BoundRow& row : report.rows) {
        doc.rows.push_back({row.sweep_value, row.mmse.value_or(0.0) * scale, row.qwwb * scale,
                            row.qzzb * scale, row.qcrb * scale});
    }
    return doc;
}

std::vector<int> default_figure2_grid() {
    return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 20, 30, 50, 70, 100};
}

BoundReport figure2_sweep(const Figure2Config& config) {
    const GaussianPrior prior(0.0, config.sigma);
    const std::vector<int> grid =
        config.nu_grid.empty() ? default_figure2_grid() : config.nu_grid;

    const auto row_for = [&](int i) -> BoundRow {
        const int nu = grid[static_cast<std::size_t>(i)];
        const PhaseModel model = PhaseModel::bosonic(config.epsilon, config.levels, nu);
        BoundRow row;
        row.sweep_value = static_cast<double>(nu);
        const QwwbOptimum opt = qwwb_phase_optimized(model, Prior(prior), -1.0, config.optimize_s);
        row.qwwb = opt.value;
        row.qwwb_h = opt.h;
        row.qwwb_s = opt.s;
        row.qzzb = qzzb_gaussian(model, prior);
        row.qcrb = qcrb_bayes(model, prior);
        return row;
    };

    BoundReport report;
    report.model_id = "bosonic";
    report.sweep_name = "nu";
    report.rows = ordered_parallel_map<BoundRow>(static_cast<int>(grid.size()), row_for);
    return report;
}

CsvDocument figure2_csv(const BoundReport& report, const Figure2Config& config) {
    CsvDocument doc;
    doc.header = {{"command", "figure2"},
                  {"model", report.model_id},
                  {"sigma", format_double(config.sigma)},
                  {"epsilon", format_double(config.epsilon)},
                  {"M", std::to_string(config.levels)},
                  {"s", config.optimize_s ? "optimized[0.05,0.95]" : "0.5"},
                  {"h_scan", "(0," + format_double(10.0 * config.sigma) + "]"}};
    doc.columns = {"nu", "qwwb", "qzzb", "qcrb"};
    for (const BoundRow& row : report.rows) {
        doc.rows.push_back({row.sweep_value, row.qwwb, row.qzzb, row.qcrb});
    }
    return doc;
}

CsvDocument fidelity_inset_csv(double sigma, double epsilon, int levels,
                               const std::vector<int>& nus, int points) {
    const PhaseModel model = PhaseModel::bosonic(epsilon, levels);
    CsvDocument doc;
    doc.header = {{"command", "figure2-fidelity"},
                  {"sigma", format_double(sigma)},
                  {"epsilon", format_double(epsilon)},
                  {"M", std::to_string(levels)}};
    doc.columns = {"h"};
    for (int nu : nus) doc.columns.push_back("nu" + std::to_string(nu));
    for (int i = 0; i < points; ++i) {
        const double h = 10.0 * sigma * static_cast<double>(i) / (points - 1);
        std::vector<double> row{h};
        const double f1 = std::norm(z_overlap(model, h));
        for (int nu : nus) row.push_back(std::pow(f1, nu));
        doc.rows.push_back(std::move(row));
    }
    return doc;
}

}  // namespace qbounds
