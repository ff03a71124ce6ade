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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbounds/csv.hpp"
#include "qbounds/grid_model.hpp"
#include "qbounds/model_io.hpp"
#include "qbounds/phase_bounds.hpp"
#include "qbounds/sweeps.hpp"
#include "qbounds/validate.hpp"
#include "qbounds/ww_core.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 2;
constexpr int kExitCapability = 3;
constexpr int kExitIoConfig = 4;

struct SweepSpec {
    std::string variable;  // "E" or "nu"
    double lo = 0.0;
    double hi = 0.0;
    int points = 0;
    bool log_spaced = false;
};

SweepSpec parse_sweep(const std::string& text) {
    SweepSpec spec;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
        throw qbounds::IoError("--sweep expects VAR=lo:hi:n[:log], got \"" + text + "\"");
    }
    spec.variable = text.substr(0, eq);
    std::string rest = text.substr(eq + 1);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto colon = rest.find(':', pos);
        parts.push_back(rest.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() < 3 || parts.size() > 4) {
        throw qbounds::IoError("--sweep expects VAR=lo:hi:n[:log]");
    }
    try {
        spec.lo = std::stod(parts[0]);
        spec.hi = std::stod(parts[1]);
        spec.points = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw qbounds::IoError("--sweep: could not parse numbers in \"" + text + "\"");
    }
    if (parts.size() == 4) {
        if (parts[3] != "log") throw qbounds::IoError("--sweep: unknown modifier " + parts[3]);
        spec.log_spaced = true;
    }
    if (spec.points < 1 || !(spec.lo <= spec.hi)) {
        throw qbounds::IoError("--sweep: need lo <= hi and n >= 1");
    }
    return spec;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(spec.points));
    if (spec.points == 1) {
        values.push_back(spec.lo);
        return values;
    }
    for (int i = 0; i < spec.points; ++i) {
        const double t = static_cast<double>(i) / (spec.points - 1);
        values.push_back(spec.log_spaced
                             ? std::pow(10.0, std::log10(spec.lo) +
                                                  t * (std::log10(spec.hi) - std::log10(spec.lo)))
                             : spec.lo + t * (spec.hi - spec.lo));
    }
    return values;
}

const qbounds::GaussianPrior& require_gaussian(const qbounds::Prior& prior,
                                               const std::string& method) {
    const auto* g = std::get_if<qbounds::GaussianPrior>(&prior);
    if (!g) {
        throw qbounds::CapabilityError(method + " requires a Gaussian prior");
    }
    return *g;
}

double evaluate_method(const std::string& method, const qbounds::ModelSpec& spec,
                       std::optional<double> h, double s, int grid_points,
                       std::string& extra_out) {
    using namespace qbounds;
    if (method == "qwwb") {
        if (h) {
            extra_out = "h=" + format_double(*h) + "\ns=" + format_double(s) + "\n";
            return qwwb_phase(spec.model, spec.prior, s, *h);
        }
        const QwwbOptimum opt = qwwb_phase_optimized(spec.model, spec.prior);
        extra_out = "h=" + format_double(opt.h) + "\ns=" + format_double(opt.s) + "\n";
        return opt.value;
    }
    if (method == "qzzb") return qzzb_gaussian(spec.model, require_gaussian(spec.prior, method));
    if (method == "qcrb") return qcrb_bayes(spec.model, require_gaussian(spec.prior, method));
    if (method == "mmse") return mmse_gaussian(spec.model, require_gaussian(spec.prior, method));
    if (method == "generic-ww") {
        if (!h) throw IoError("generic-ww needs --h");
        TabulatedPrior tab = [&] {
            if (const auto* g = std::get_if<GaussianPrior>(&spec.prior)) {
                // Widen the window past the displacement so shifted overlaps
                // are not clipped at the tabulation boundary.
                const double half_width = 8.0 + std::abs(*h) / g->sigma;
                return TabulatedPrior::from_gaussian(*g, half_width, grid_points);
            }
            return std::get<TabulatedPrior>(spec.prior);
        }();
        const GridHybridModel grid = GridHybridModel::from_phase_model(spec.model, tab);
        const TestPoint tp = TestPoint::single(*h, s);
        extra_out = "h_snapped=" + format_double(snap_to_grid(grid, *h).snapped_h) +
                    "\ns=" + format_double(s) + "\n";
        return ww_bound_scalar(grid, tp);
    }
    throw IoError("unknown method \"" + method + "\"");
}

int run_bound(const std::string& model_path, const std::string& method,
              std::optional<double> h, double s, const std::string& sweep,
              const std::string& out_path, int grid_points) {
    using namespace qbounds;
    const ModelSpec base = load_model_file(model_path);

    if (sweep.empty()) {
        std::string extra;
        const double value = evaluate_method(method, base, h, s, grid_points, extra);
        std::cout << "method=" << method << "\n" << extra << "value=" << format_double(value)
                  << "\n";
        return kExitOk;
    }

    const SweepSpec spec = parse_sweep(sweep);
    CsvDocument doc;
    doc.header = {{"command", "bound"},
                  {"model", base.id},
                  {"method", method},
                  {"sweep", sweep}};
    doc.columns = {spec.variable, method};
    if (spec.variable == "E") {
        if (base.id != "qubit") {
            throw CapabilityError("--sweep E=... is only defined for qubit models");
        }
        for (double e : sweep_values(spec)) {
            ModelSpec point{PhaseModel::qubit(e, base.model.copies()), base.prior, base.id};
            std::string extra;
            doc.rows.push_back({e, evaluate_method(method, point, h, s, grid_points, extra)});
        }
    } else if (spec.variable == "nu") {
        for (double nu : sweep_values(spec)) {
            ModelSpec point{base.model.with_copies(static_cast<int>(nu)), base.prior, base.id};
            std::string extra;
            doc.rows.push_back({nu, evaluate_method(method, point, h, s, grid_points, extra)});
        }
    } else {
        throw IoError("--sweep variable must be E or nu");
    }
    const std::string text = to_csv(doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bayesian quantum estimation error bounds for phase estimation"};
    app.require_subcommand(1);

    // figure1
    auto* fig1 = app.add_subcommand("figure1", "Qubit benchmark: bounds and MMSE versus E");
    double f1_sigma = 0.1;
    bool f1_normalized = false;
    bool f1_s_opt = false;
    std::string f1_out = "figure1.csv";
    fig1->add_option("--sigma", f1_sigma, "Prior standard deviation");
    fig1->add_flag("--normalized", f1_normalized, "Divide every column by sigma^2");
    fig1->add_flag("--s-optimize", f1_s_opt, "Optimize s over a 21-point grid");
    fig1->add_option("--out", f1_out, "Output CSV path");

    // figure2
    auto* fig2 = app.add_subcommand("figure2", "Bosonic benchmark: bounds versus probe count");
    double f2_sigma = 0.5;
    double f2_epsilon = 0.1;
    int f2_levels = 10;
    bool f2_s_opt = false;
    std::string f2_out = "figure2.csv";
    std::string f2_fid_out = "figure2_fidelity.csv";
    std::vector<int> f2_nu_grid;
    fig2->add_option("--sigma", f2_sigma, "Prior standard deviation");
    fig2->add_option("--epsilon", f2_epsilon, "Excited-state weight");
    fig2->add_option("--M", f2_levels, "Highest occupied level");
    fig2->add_option("--nu-grid", f2_nu_grid, "Probe counts to sweep");
    fig2->add_flag("--s-optimize", f2_s_opt, "Optimize s over a 21-point grid");
    fig2->add_option("--out", f2_out, "Output CSV path");
    fig2->add_option("--fidelity-out", f2_fid_out, "Fidelity-inset CSV path");

    // bound
    auto* bound = app.add_subcommand("bound", "Evaluate one bound on a model file");
    bound->set_help_flag("--help", "Print this help message and exit");  // frees --h
    std::string b_model;
    std::string b_method;
    std::string b_sweep;
    std::string b_out;
    double b_s = 0.5;
    int b_grid_points = 2001;
    std::optional<double> b_h;
    double b_h_raw = 0.0;
    bound->add_option("--model", b_model, "Model JSON file")->required();
    bound->add_option("--method", b_method, "qwwb | qzzb | qcrb | mmse | generic-ww")->required();
    auto* h_opt = bound->add_option("--h", b_h_raw, "Test-point displacement");
    bound->add_option("--s", b_s, "Test-point exponent in (0, 1)");
    bound->add_option("--sweep", b_sweep, "VAR=lo:hi:n[:log] with VAR in {E, nu}");
    bound->add_option("--out", b_out, "Output CSV path (sweeps)");
    bound->add_option("--grid-points", b_grid_points, "Grid size for generic-ww");

    // heisenberg
    auto* heis = app.add_subcommand("heisenberg", "Heisenberg limit of a model file");
    std::string h_model;
    heis->add_option("--model", h_model, "Model JSON file")->required();

    // validate
    auto* val = app.add_subcommand("validate", "Run the property suites");
    std::uint64_t v_seed = 42;
    val->add_option("--seed", v_seed, "Monte Carlo seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIoConfig;
    }

    try {
        if (fig1->parsed()) {
            qbounds::Figure1Config config;
            config.sigma = f1_sigma;
            config.optimize_s = f1_s_opt;
            const qbounds::BoundReport report = qbounds::figure1_sweep(config);
            qbounds::write_text_file(
                f1_out, to_csv(qbounds::figure1_csv(report, f1_sigma, f1_normalized, f1_s_opt)));
            std::cout << "wrote " << f1_out << "\n";
            return kExitOk;
        }
        if (fig2->parsed()) {
            qbounds::Figure2Config config;
            config.sigma = f2_sigma;
            config.epsilon = f2_epsilon;
            config.levels = f2_levels;
            config.nu_grid = f2_nu_grid;
            config.optimize_s = f2_s_opt;
            const qbounds::BoundReport report = qbounds::figure2_sweep(config);
            qbounds::write_text_file(f2_out, to_csv(qbounds::figure2_csv(report, config)));
            qbounds::write_text_file(
                f2_fid_out,
                to_csv(qbounds::fidelity_inset_csv(f2_sigma, f2_epsilon, f2_levels)));
            std::cout << "wrote " << f2_out << " and " << f2_fid_out << "\n";
            return kExitOk;
        }
        if (bound->parsed()) {
            if (h_opt->count() > 0) b_h = b_h_raw;
            return run_bound(b_model, b_method, b_h, b_s, b_sweep, b_out, b_grid_points);
        }
        if (heis->parsed()) {
            const qbounds::ModelSpec spec = qbounds::load_model_file(h_model);
            const auto& prior = require_gaussian(spec.prior, "heisenberg");
            const qbounds::HeisenbergLimit limit = qbounds::heisenberg_limit(spec.model, prior);
            std::cout << "H_plus=" << qbounds::format_double(limit.H_plus) << "\n"
                      << "h_star=" << qbounds::format_double(limit.h_star) << "\n"
                      << "kappa=" << qbounds::format_double(limit.kappa) << "\n"
                      << "bound_prime=" << qbounds::format_double(limit.bound_prime) << "\n"
                      << "bound=" << qbounds::format_double(limit.bound) << "\n";
            return kExitOk;
        }
        if (val->parsed()) {
            const auto results = qbounds::run_validation_suites(v_seed);
            for (const auto& r : results) {
                std::cout << "suite=" << r.name << " status=" << (r.passed ? "PASS" : "FAIL")
                          << " detail=" << r.detail << "\n";
            }
            return qbounds::all_passed(results) ? kExitOk : kExitValidationFailure;
        }
    } catch (const qbounds::CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const qbounds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoConfig;
    }
    return kExitIoConfig;
}
