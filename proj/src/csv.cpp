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

#include "qbounds/csv.hpp"

#include <cstdio>
#include <fstream>

namespace qbounds {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return std::string(buf);
}

std::string to_csv(const CsvDocument& doc) {
    std::string out;
    for (const auto& [key, value] : doc.header) {
        out += "# " + key + "=" + value + "\n";
    }
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        if (c > 0) out += ",";
        out += doc.columns[c];
    }
    out += "\n";
    for (const auto& row : doc.rows) {
        if (row.size() != doc.columns.size()) {
            throw ValidationError("to_csv: row width does not match the column count");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ",";
            out += format_double(row[c]);
        }
        out += "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) throw IoError("cannot open " + path + " for writing");
    stream << content;
    if (!stream) throw IoError("write to " + path + " failed");
}

}  // namespace qbounds
