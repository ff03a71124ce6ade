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

#include "qbounds/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qbounds {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw IoError("model file: unknown key \"" + key + "\" in " + where);
        }
    }
}

Prior parse_prior(const json& obj) {
    if (!obj.is_object()) throw IoError("model file: \"prior\" must be an object");
    if (obj.contains("grid") || obj.contains("weights")) {
        reject_unknown_keys(obj, {"grid", "weights"}, "prior");
        if (!obj.contains("grid") || !obj.contains("weights")) {
            throw IoError("model file: tabulated prior needs both \"grid\" and \"weights\"");
        }
        const auto grid_list = obj.at("grid").get<std::vector<double>>();
        const auto weight_list = obj.at("weights").get<std::vector<double>>();
        Eigen::VectorXd grid = Eigen::Map<const Eigen::VectorXd>(
            grid_list.data(), static_cast<Eigen::Index>(grid_list.size()));
        Eigen::VectorXd weights = Eigen::Map<const Eigen::VectorXd>(
            weight_list.data(), static_cast<Eigen::Index>(weight_list.size()));
        return TabulatedPrior(std::move(grid), std::move(weights));
    }
    reject_unknown_keys(obj, {"mean", "sigma"}, "prior");
    if (!obj.contains("sigma")) throw IoError("model file: Gaussian prior needs \"sigma\"");
    const double mean = obj.value("mean", 0.0);
    return GaussianPrior(mean, obj.at("sigma").get<double>());
}

PhaseModel parse_model(const json& root, int copies) {
    const std::string type = root.at("type").get<std::string>();
    if (type == "qubit") {
        if (!root.at("E").is_number()) {
            throw IoError("model file: qubit \"E\" must be a number");
        }
        return PhaseModel::qubit(root.at("E").get<double>(), copies);
    }
    if (type == "bosonic") {
        const json& e = root.at("E");
        if (!e.is_object()) {
            throw IoError("model file: bosonic \"E\" must be {\"epsilon\": ..., \"M\": ...}");
        }
        reject_unknown_keys(e, {"epsilon", "M"}, "E");
        return PhaseModel::bosonic(e.at("epsilon").get<double>(), e.at("M").get<int>(), copies);
    }
    if (type == "generic") {
        if (!root.at("E").is_array() || !root.contains("amplitudes")) {
            throw IoError(
                "model file: generic models need \"E\" as an array and \"amplitudes\" as "
                "[[re, im], ...]");
        }
        const auto energy_list = root.at("E").get<std::vector<double>>();
        const auto amp_list = root.at("amplitudes").get<std::vector<std::vector<double>>>();
        if (amp_list.size() != energy_list.size()) {
            throw IoError("model file: \"amplitudes\" length must match \"E\"");
        }
        RealVector energies = Eigen::Map<const RealVector>(
            energy_list.data(), static_cast<Eigen::Index>(energy_list.size()));
        ComplexVector amplitudes(static_cast<Eigen::Index>(amp_list.size()));
        for (std::size_t j = 0; j < amp_list.size(); ++j) {
            if (amp_list[j].size() != 2) {
                throw IoError("model file: each amplitude must be a [re, im] pair");
            }
            amplitudes(static_cast<Eigen::Index>(j)) = Complex(amp_list[j][0], amp_list[j][1]);
        }
        return PhaseModel(std::move(energies), std::move(amplitudes), copies);
    }
    throw IoError("model file: unknown model type \"" + type + "\"");
}

}  // namespace

ModelSpec parse_model_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("model file: JSON parse error: ") + e.what());
    }
    try {
        if (!root.is_object()) throw IoError("model file: top level must be an object");
        std::set<std::string> allowed{"type", "E", "nu", "prior"};
        if (root.value("type", "") == "generic") allowed.insert("amplitudes");
        reject_unknown_keys(root, allowed, "top level");
        if (!root.contains("type")) throw IoError("model file: missing \"type\"");
        if (!root.contains("E")) throw IoError("model file: missing \"E\"");
        if (!root.contains("prior")) throw IoError("model file: missing \"prior\"");
        const int copies = root.value("nu", 1);
        ModelSpec spec{parse_model(root, copies), parse_prior(root.at("prior")),
                       root.at("type").get<std::string>()};
        return spec;
    } catch (const json::exception& e) {
        throw IoError(std::string("model file: ") + e.what());
    }
}

ModelSpec load_model_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw IoError("cannot open model file " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_model_json(buffer.str());
}

}  // namespace qbounds
