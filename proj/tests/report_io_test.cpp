// Copyright 2026 The qtel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtel/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

using namespace qtel;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

}  // namespace

TEST(format_double, round_trips) {
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.normal() * std::pow(10.0, rng.normal() * 5);
        ASSERT_EQ(std::stod(format_double(x)), x);
    }
    ASSERT_EQ(format_double(0.5), "0.5");
    ASSERT_EQ(format_double(1.0), "1");
}

TEST(table, rejects_wrong_width) {
    Table t{{"x", "y"}, {}};
    ASSERT_THROW(t.add_row({std::int64_t{1}}), std::logic_error);
}

TEST(table, csv_and_json_carry_same_values) {
    const FidelityReport r = mean_squared_fidelity(Spectrum::from_doubled(1), Spectrum::from_doubled(3));
    const Table t = fidelity_table({r});
    std::ostringstream csv;
    t.write_csv(csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::string row;
    std::getline(lines, header);
    std::getline(lines, row);
    const auto names = split(header, ',');
    const auto cells = split(row, ',');
    ASSERT_EQ(names, t.columns);
    const auto json = t.to_json();
    ASSERT_EQ(json.size(), 1u);
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& v = json[0][names[i]];
        if (v.is_number_float()) {
            ASSERT_EQ(std::stod(cells[i]), v.get<double>()) << names[i];
        } else {
            ASSERT_EQ(cells[i], v.dump()) << names[i];
        }
    }
    ASSERT_EQ(json[0]["F_mean"].get<double>(), r.mean_F);
}

TEST(table, missing_cells) {
    const Table t = resource_table_report(resource_table(0, 1));
    const auto json = t.to_json();
    ASSERT_TRUE(json[0]["N_linear"].is_null());
    ASSERT_TRUE(json[0]["P_success"].is_null());
    ASSERT_EQ(json[1]["N_linear"].get<std::int64_t>(), 9);
    ASSERT_EQ(json[1]["N_KLM"].get<std::string>(), "6");
    std::ostringstream csv;
    t.write_csv(csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    ASSERT_EQ(line, "0,1,2,2,,");
}

TEST(table, pretty_has_every_column) {
    const Table t = limit_table(continuous_limit_sweep(1.0, 2.0, std::vector<double>{1.0, 0.5}));
    std::ostringstream out;
    t.write(out, OutputFormat::kPretty);
    for (const auto& c : t.columns) {
        ASSERT_NE(out.str().find(c), std::string::npos) << c;
    }
}

TEST(record, json_and_row_agree) {
    const Spectrum half = Spectrum::from_doubled(1);
    const ProtocolConfig cfg(half, half, flat_state(half));
    const ProtocolRecord rec = run_protocol(cfg, 7);
    const auto j = record_to_json(3, rec);
    const auto row = record_row(3, rec);
    const Table header = record_table_header();
    ASSERT_EQ(row.size(), header.columns.size());
    ASSERT_EQ(j["trial"].get<std::int64_t>(), 3);
    ASSERT_EQ(j["Q2x"].get<std::int64_t>(), rec.outcome.Q.doubled());
    ASSERT_EQ(j["P2x"].get<std::int64_t>(), rec.outcome.P.doubled());
    ASSERT_EQ(j["success"].get<bool>(), rec.success);
    ASSERT_EQ(j["fidelity_sq"].get<double>(), rec.fidelity_sq);
}
