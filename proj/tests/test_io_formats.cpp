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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbounds/csv.hpp"
#include "qbounds/model_io.hpp"
#include "qbounds/report.hpp"
#include "qbounds/sweeps.hpp"

using namespace qbounds;

TEST_CASE("model JSON parsing") {
    const ModelSpec qubit = parse_model_json(
        R"({"type": "qubit", "E": 10.0, "nu": 2, "prior": {"mean": 0.0, "sigma": 0.1}})");
    CHECK(qubit.model.dim() == 2);
    CHECK(qubit.model.copies() == 2);
    CHECK(qubit.model.energies()(1) == doctest::Approx(10.0));
    CHECK(std::get<GaussianPrior>(qubit.prior).sigma == doctest::Approx(0.1));

    const ModelSpec bosonic = parse_model_json(
        R"({"type": "bosonic", "E": {"epsilon": 0.1, "M": 10}, "prior": {"sigma": 0.5}})");
    CHECK(bosonic.model.dim() == 11);
    CHECK(bosonic.model.copies() == 1);

    const ModelSpec generic = parse_model_json(
        R"({"type": "generic", "E": [0.0, 1.0, 3.0],
            "amplitudes": [[0.6, 0.0], [0.0, 0.6], [0.52915026221291817, 0.0]],
            "prior": {"sigma": 0.2}})");
    CHECK(generic.model.dim() == 3);

    const ModelSpec tabulated = parse_model_json(
        R"({"type": "qubit", "E": 1.0,
            "prior": {"grid": [-2.0, -1.0, 0.0, 1.0, 2.0],
                      "weights": [0.0, 0.25, 0.5, 0.25, 0.0]}})");
    CHECK(std::get<TabulatedPrior>(tabulated.prior).size() == 5);
}

TEST_CASE("model JSON rejects malformed input") {
    CHECK_THROWS_AS(parse_model_json("not json"), IoError);
    CHECK_THROWS_AS(parse_model_json(R"({"type": "qubit", "E": 1.0})"), IoError);  // no prior
    CHECK_THROWS_AS(
        parse_model_json(
            R"({"type": "qubit", "E": 1.0, "prior": {"sigma": 0.1}, "unknown": 1})"),
        IoError);
    CHECK_THROWS_AS(
        parse_model_json(R"({"type": "qubit", "E": 1.0, "prior": {"sigma": 0.1, "x": 2}})"),
        IoError);
    CHECK_THROWS_AS(
        parse_model_json(R"({"type": "squbit", "E": 1.0, "prior": {"sigma": 0.1}})"), IoError);
    CHECK_THROWS_AS(
        parse_model_json(R"({"type": "bosonic", "E": 3.0, "prior": {"sigma": 0.1}})"), IoError);
}

TEST_CASE("CSV serialization carries 17 significant digits and is deterministic") {
    CsvDocument doc;
    doc.header = {{"command", "test"}, {"sigma", "0.1"}};
    doc.columns = {"a", "b"};
    doc.rows = {{0.1, 2.0}, {1.0 / 3.0, 1e-300}};
    const std::string text = to_csv(doc);
    CHECK(text == "# command=test\n# sigma=0.1\na,b\n"
                  "0.10000000000000001,2\n"
                  "0.33333333333333331,1e-300\n");
    CHECK(to_csv(doc) == text);  // byte-identical on repetition

    CsvDocument ragged = doc;
    ragged.rows.push_back({1.0});
    CHECK_THROWS_AS(to_csv(ragged), ValidationError);
}

TEST_CASE("fidelity inset starts at unit fidelity") {
    const CsvDocument doc = fidelity_inset_csv(0.5, 0.1, 10);
    CHECK(doc.columns.size() == 6);
    for (std::size_t c = 1; c < doc.rows[0].size(); ++c) {
        CHECK(doc.rows[0][c] == doctest::Approx(1.0).epsilon(1e-14));
    }
    // last column is the fastest-decaying power
    CHECK(doc.rows[5][5] <= doc.rows[5][1]);
}

TEST_CASE("report validation flags a bound above the MMSE") {
    BoundReport report;
    report.rows.push_back(BoundRow{1.0, 0.5, 0.1, 0.5, 0.4, 0.3, 0.6, std::nullopt});
    CHECK_NOTHROW(validate_report(report));
    report.rows[0].qwwb = 0.7;  // above mmse = 0.6
    CHECK_THROWS_AS(validate_report(report), Error);
}

TEST_CASE("figure1 sweep on a tiny grid keeps the bound ordering") {
    Figure1Config config;
    config.sigma = 0.1;
    config.energy_grid = {0.0, 1.0, 10.0};
    const BoundReport report = figure1_sweep(config);
    REQUIRE(report.rows.size() == 3);

    // with no dynamics every quantity is the prior variance
    const BoundRow& first = report.rows[0];
    const double s2 = 0.01;
    CHECK(first.qwwb == doctest::Approx(s2).epsilon(1e-4));
    CHECK(first.qzzb == doctest::Approx(s2).epsilon(1e-4));
    CHECK(first.qcrb == doctest::Approx(s2).epsilon(1e-4));
    CHECK(*first.mmse == doctest::Approx(s2).epsilon(1e-4));

    for (const BoundRow& row : report.rows) {
        CHECK(row.qwwb <= *row.mmse * (1.0 + 1e-9));
        CHECK(row.qzzb <= *row.mmse * (1.0 + 1e-9));
        CHECK(row.qcrb <= *row.mmse * (1.0 + 1e-9));
    }

    const CsvDocument doc = figure1_csv(report, config.sigma, true);
    CHECK(doc.columns == std::vector<std::string>{"E", "mmse", "qwwb", "qzzb", "qcrb"});
    CHECK(doc.rows[0][1] == doctest::Approx(1.0).epsilon(1e-4));  // normalized MMSE
    CHECK(to_csv(doc) == to_csv(figure1_csv(figure1_sweep(config), config.sigma, true)));
}
