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

#include <string>
#include <utility>
#include <vector>

#include "qbounds/errors.hpp"

namespace qbounds {

/// CSV with a `# key=value` provenance block, one header row of column
/// names, `\n` line endings, and numeric fields at 17 significant digits.
/// Serialization is deterministic: equal documents yield equal bytes.
struct CsvDocument {
    std::vector<std::pair<std::string, std::string>> header;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_double(double value);
std::string to_csv(const CsvDocument& doc);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qbounds
