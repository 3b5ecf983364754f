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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <variant>
#include <vector>

#include "qtel/analysis.hpp"
#include "qtel/teleport.hpp"

namespace qtel {

enum class OutputFormat { kJson, kCsv, kPretty };

/// One table cell. Half-integers never appear here as floats; they are
/// stored as their doubled integer under a "...2x" column.
/// std::monostate is a missing value: null in JSON, empty in CSV.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

/// A flat report. JSON, CSV and pretty output are all rendered from the same
/// cells, so every format carries identical values.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);

    /// Array of row objects keyed by column name.
    nlohmann::ordered_json to_json() const;
    /// Comma separated, header row first, '.' decimal point.
    void write_csv(std::ostream& out) const;
    void write_pretty(std::ostream& out) const;
    void write(std::ostream& out, OutputFormat format) const;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double x);

Table success_table(const SuccessReport& report, double P_engine);
Table fidelity_table(const std::vector<FidelityReport>& reports);
Table failure_table(const FidelityReport& report);
Table limit_table(const std::vector<LimitPoint>& points);
Table resource_table_report(const std::vector<ResourceRow>& rows);

/// Columns of the protocol trace.
Table record_table_header();
std::vector<Cell> record_row(std::uint64_t trial, const ProtocolRecord& record);

/// One JSON-lines trace entry: trial, Q2x, P2x, probability, success, fidelity_sq.
nlohmann::ordered_json record_to_json(std::uint64_t trial, const ProtocolRecord& record);

}  // namespace qtel
