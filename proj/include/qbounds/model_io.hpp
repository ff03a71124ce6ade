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
 * Model definition files (JSON):
 *
 *   {"type": "qubit",   "E": 10.0,                       "nu": 1, "prior": ...}
 *   {"type": "bosonic", "E": {"epsilon": 0.1, "M": 10},  "nu": 1, "prior": ...}
 *   {"type": "generic", "E": [0.0, 1.5, 4.0],
 *    "amplitudes": [[re, im], ...],                      "nu": 1, "prior": ...}
 *
 * with "prior" either {"mean": m, "sigma": s} or
 * {"grid": [...], "weights": [...]}.  Unknown keys are rejected.
 */

#include <string>

#include "qbounds/phase_model.hpp"
#include "qbounds/priors.hpp"

namespace qbounds {

struct ModelSpec {
    PhaseModel model;
    Prior prior;
    std::string id;
};

ModelSpec parse_model_json(const std::string& text);
ModelSpec load_model_file(const std::string& path);

}  // namespace qbounds
