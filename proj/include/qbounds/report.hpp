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

#include <optional>
#include <string>
#include <vector>

#include "qbounds/errors.hpp"

namespace qbounds {

/// One sweep point: the error bounds (squared radians) with the optimizing
/// Weiss-Weinstein test point, plus the exact MMSE and Heisenberg limit
/// where available.
struct BoundRow {
    double sweep_value = 0.0;
    double qwwb = 0.0;
    double qwwb_h = 0.0;
    double qwwb_s = 0.5;
    double qzzb = 0.0;
    double qcrb = 0.0;
    std::optional<double> mmse;
    std::optional<double> heisenberg;
};

struct BoundReport {
    std::string model_id;
    std::string sweep_name;
    std::vector<BoundRow> rows;
};

/// Every recorded lower bound must stay below the recorded MMSE (within
/// 1e-9 relative) wherever the MMSE is present.  Throws on violation.
inline void validate_report(const BoundReport& report) {
    for (const BoundRow& row : report.rows) {
        if (!row.mmse) continue;
        const double cap = *row.mmse * (1.0 + 1e-9) + 1e-300;
        for (double bound : {row.qwwb, row.qzzb, row.qcrb}) {
            if (bound > cap) {
                throw Error("BoundReport: bound " + std::to_string(bound) +
                            " exceeds the MMSE " + std::to_string(*row.mmse) +
                            " at sweep value " + std::to_string(row.sweep_value));
            }
        }
    }
}

}  // namespace qbounds
