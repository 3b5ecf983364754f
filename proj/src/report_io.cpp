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

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <stdexcept>

namespace qtel {
namespace {

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return v;
            }
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

nlohmann::ordered_json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>) {
                return nlohmann::ordered_json(nullptr);
            } else {
                return nlohmann::ordered_json(v);
            }
        },
        c);
}

std::int64_t x2(HalfInt h) { return h.doubled(); }

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    if (res.ec != std::errc()) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row has the wrong number of cells");
    }
    rows.push_back(std::move(row));
}

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
            obj[columns[i]] = cell_json(row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr;
}

void Table::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << csv_escape(columns[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        }
        out << '\n';
    }
}

void Table::write_pretty(std::ostream& out) const {
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        width[i] = columns[i].size();
        for (const auto& row : rows) {
            width[i] = std::max(width[i], cell_text(row[i]).size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
        }
        out << '\n';
    };
    line(columns);
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) {
            cells.push_back(cell_text(c));
        }
        line(cells);
    }
}

void Table::write(std::ostream& out, OutputFormat format) const {
    switch (format) {
        case OutputFormat::kJson: out << to_json().dump() << '\n'; break;
        case OutputFormat::kCsv: write_csv(out); break;
        case OutputFormat::kPretty: write_pretty(out); break;
    }
}

Table success_table(const SuccessReport& report, double P_engine) {
    Table t{{"a2x", "b2x", "Q2x", "p_of_Q", "P_exact", "P_formula", "P_engine"}, {}};
    for (const auto& [Q, p] : report.p_of_Q) {
        t.add_row({x2(report.a), x2(report.b), x2(Q), p, report.P_success, report.P_formula, P_engine});
    }
    return t;
}

Table fidelity_table(const std::vector<FidelityReport>& reports) {
    Table t{{"a2x", "b2x", "P_exact", "P_formula", "F_mean", "exact_success_part", "failure_overlap_part",
             "F_mean_normalized"},
            {}};
    for (const auto& r : reports) {
        const double formula = success_probability_formula(Spectrum(r.a), Spectrum(r.b));
        t.add_row({x2(r.a), x2(r.b), r.P_success, formula, r.mean_F, r.exact_success_part, r.failure_overlap_part,
                   r.mean_F_normalized});
    }
    return t;
}

Table failure_table(const FidelityReport& report) {
    Table t{{"a2x", "b2x", "Q2x", "p_of_Q", "overlap", "overlap_formula", "fidelity_sq_normalized"}, {}};
    for (const auto& f : report.failures) {
        t.add_row({x2(report.a), x2(report.b), x2(f.Q), f.probability, f.overlap,
                   failure_overlap_formula(report.a, report.b, f.Q), f.fidelity_sq_normalized});
    }
    return t;
}

Table limit_table(const std::vector<LimitPoint>& points) {
    Table t{{"step", "a2x", "b2x", "P_disc", "P_cont", "gap", "gap_bound"}, {}};
    for (const auto& p : points) {
        t.add_row({p.step, x2(p.a), x2(p.b), p.P_disc, p.P_cont, p.gap, p.gap_bound});
    }
    return t;
}

Table resource_table_report(const std::vector<ResourceRow>& rows) {
    Table t{{"n", "dim_anc", "N_KLM", "N_KLM_sum", "N_linear", "P_success"}, {}};
    for (const auto& r : rows) {
        Cell linear;
        Cell P;
        if (r.linear_count) {
            linear = static_cast<std::int64_t>(*r.linear_count);
        }
        if (r.P_success) {
            P = *r.P_success;
        }
        t.add_row({static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.dim_anc), r.klm_count.str(),
                   klm_outcome_count_by_sum(r.n).str(), linear, P});
    }
    return t;
}

Table record_table_header() { return Table{{"trial", "Q2x", "P2x", "probability", "success", "fidelity_sq"}, {}}; }

std::vector<Cell> record_row(std::uint64_t trial, const ProtocolRecord& record) {
    return {static_cast<std::int64_t>(trial), x2(record.outcome.Q), x2(record.outcome.P),
            record.outcome.probability,       record.success,       record.fidelity_sq};
}

nlohmann::ordered_json record_to_json(std::uint64_t trial, const ProtocolRecord& record) {
    const Table header = record_table_header();
    const auto row = record_row(trial, record);
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
        obj[header.columns[i]] = cell_json(row[i]);
    }
    return obj;
}

}  // namespace qtel
