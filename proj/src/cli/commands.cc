// Copyright 2026 The Rabin OT Toolkit Authors
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

#include "rabin_ot/cli/commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rabin_ot/analytics/closed_forms.h"
#include "rabin_ot/cli/format.h"

namespace rabin_ot::cli {

namespace an = analytics;

namespace {

double curve_value(const an::CheatCurvePoint &c, const std::string &column) {
    if (column == "a_guess") return c.a_guess;
    if (column == "a_no_test") return c.a_no_test;
    if (column == "a_monitor") return c.a_monitor;
    if (column == "a_full_2") return c.a_full_two_state;
    if (column == "a_full_3") return c.a_full_three_state;
    if (column == "b_guess") return c.b_guess;
    if (column == "b_cheat") return c.b_cheat;
    throw std::invalid_argument("unknown curve column " + column);
}

std::string optional_number(const std::optional<double> &x) {
    return x ? format_number(*x) : "";
}

/// Round-trips through the printed form so JSON carries the same digits as CSV.
nlohmann::json printed(double x) {
    std::string text = format_number(x);
    double value = x;
    std::from_chars(text.data(), text.data() + text.size(), value);
    return value;
}

}  // namespace

const std::vector<std::string> &curve_columns() {
    static const std::vector<std::string> columns{"a_guess",  "a_no_test", "a_monitor", "a_full_2",
                                                  "a_full_3", "b_guess",   "b_cheat"};
    return columns;
}

void SweepSpec::validate() const {
    if (!(p_min >= 0 && p_max <= 1 && p_min <= p_max)) {
        throw std::invalid_argument("sweep needs 0 <= p-min <= p-max <= 1");
    }
    if (!(step > 0)) {
        throw std::invalid_argument("sweep step must be positive");
    }
    if (columns.empty()) {
        throw std::invalid_argument("sweep needs at least one column");
    }
    for (const auto &column : columns) {
        if (std::find(curve_columns().begin(), curve_columns().end(), column) == curve_columns().end()) {
            throw std::invalid_argument("unknown curve column " + column);
        }
    }
}

std::vector<double> SweepSpec::points() const {
    validate();
    std::vector<double> points;
    for (std::size_t k = 0;; k++) {
        double p = p_min + static_cast<double>(k) * step;
        if (std::abs(p - p_max) <= 1e-9) {
            points.push_back(p_max);
            break;
        }
        if (p > p_max) {
            break;
        }
        points.push_back(p);
    }
    return points;
}

void write_curves(const SweepSpec &sweep, std::ostream &out) {
    std::vector<double> points = sweep.points();
    out << "p_question";
    for (const auto &column : sweep.columns) {
        out << ',' << column;
    }
    out << '\n';
    for (double p : points) {
        auto curves = an::quantum_curves(p);
        std::vector<double> row{p};
        for (const auto &column : sweep.columns) {
            row.push_back(curve_value(curves, column));
        }
        out << csv_row(row) << '\n';
    }
}

std::vector<TradeoffRow> tradeoff_rows(double p, std::size_t segment_points) {
    if (!(p > 0 && p < 1)) {
        throw std::invalid_argument("tradeoff needs 0 < p_? < 1");
    }
    if (segment_points < 2) {
        throw std::invalid_argument("the classical segment needs at least 2 points");
    }
    std::vector<TradeoffRow> rows;
    double lo = 1 - p;
    double hi = std::min(1.0, 2 * (1 - p));
    for (std::size_t k = 0; k < segment_points; k++) {
        double s = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(segment_points - 1);
        auto point = an::classical_point_for_send(p, s);
        rows.push_back({"classical", p, point.s, point.r, point.a_value, point.b_value});
    }
    double quantum_a = an::alice_monitoring(p);
    double quantum_b = an::bob_cheating_quantum(p);
    try {
        auto matched = an::classical_tradeoff_point(p, quantum_a);
        rows.push_back({"classical_matched", p, matched.s, matched.r, matched.a_value, matched.b_value});
    } catch (const an::InfeasibleTradeoff &) {
        // No classical protocol reaches the quantum Alice value at this p_?.
    }
    rows.push_back({"quantum", p, std::nullopt, std::nullopt, quantum_a, quantum_b});
    rows.push_back({"ideal", p, std::nullopt, std::nullopt, an::alice_guessing(p), an::bob_guessing(p)});
    if (std::abs(p - 0.5) < 1e-12) {
        auto constants = an::comparison_constants();
        rows.push_back({"stochastic_switching", p, std::nullopt, std::nullopt, constants.stochastic_switching_alice,
                        constants.stochastic_switching_bob});
    }
    return rows;
}

void write_tradeoff(const std::vector<TradeoffRow> &rows, std::ostream &out) {
    out << "kind,p_question,s,r,a,b\n";
    for (const auto &row : rows) {
        out << row.kind << ',' << format_number(row.p_question) << ',' << optional_number(row.s) << ','
            << optional_number(row.r) << ',' << format_number(row.a) << ',' << format_number(row.b) << '\n';
    }
}

SimulationResult simulate(const verify::McConfig &config) {
    SimulationResult result{config, verify::mc_estimate(config), verify::mc_reference(config), 0, false};
    double deviation = std::abs(result.report.success_probability - result.reference);
    double ci = *result.report.ci99;
    result.deviation_widths = ci > 0 ? deviation / ci : (deviation > 0 ? INFINITY : 0);
    result.passed = verify::within_ci(result.report, result.reference);
    return result;
}

void write_simulation(const SimulationResult &result, Format format, std::ostream &out) {
    const auto &cfg = result.config;
    const auto &report = result.report;
    verify::ScenarioInput input = cfg.input();
    std::string verdict = result.passed ? "PASS" : "FAIL";
    if (format == Format::Jsonl) {
        nlohmann::ordered_json row;
        row["protocol"] = cfg.protocol;
        row["strategy"] = cfg.strategy;
        row["p_question"] = printed(input.p_question);
        row["rounds"] = cfg.rounds;
        row["seed"] = cfg.seed;
        row["estimate"] = printed(report.success_probability);
        row["ci99"] = printed(*report.ci99);
        row["reference"] = printed(result.reference);
        row["deviation_ci"] = printed(result.deviation_widths);
        row["certainty_fraction"] = printed(report.certainty_fraction);
        row["result"] = verdict;
        out << row.dump() << '\n';
        return;
    }
    out << "protocol,strategy,p_question,rounds,seed,estimate,ci99,reference,deviation_ci,certainty_fraction,result\n";
    out << cfg.protocol << ',' << cfg.strategy << ',' << format_number(input.p_question) << ',' << cfg.rounds << ','
        << cfg.seed << ',' << format_number(report.success_probability) << ',' << format_number(*report.ci99) << ','
        << format_number(result.reference) << ',' << format_number(result.deviation_widths) << ','
        << format_number(report.certainty_fraction) << ',' << verdict << '\n';
}

void RunManifest::add(const std::string &key, const std::string &value) {
    entries_.emplace_back(key, value);
}

std::string RunManifest::text() const {
    std::string text;
    for (const auto &[key, value] : entries_) {
        text += key + "=" + value + "\n";
    }
    return text;
}

std::optional<std::vector<std::string>> RunManifest::parse_argv(const std::string &text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("argv=", 0) == 0) {
            auto parsed = nlohmann::json::parse(line.substr(5), nullptr, false);
            if (parsed.is_discarded() || !parsed.is_array()) {
                return std::nullopt;
            }
            std::vector<std::string> argv;
            for (const auto &item : parsed) {
                if (!item.is_string()) {
                    return std::nullopt;
                }
                argv.push_back(item.get<std::string>());
            }
            return argv;
        }
    }
    return std::nullopt;
}

}  // namespace rabin_ot::cli
