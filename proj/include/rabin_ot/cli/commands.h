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

#ifndef RABIN_OT_CLI_COMMANDS_H
#define RABIN_OT_CLI_COMMANDS_H

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rabin_ot/verify/monte_carlo.h"

namespace rabin_ot::cli {

/// All curve columns, in output order after p_question.
const std::vector<std::string> &curve_columns();

struct SweepSpec {
    double p_min = 0;
    double p_max = 1;
    double step = 0.01;
    std::vector<std::string> columns = curve_columns();

    /// Throws std::invalid_argument on p_min > p_max, step <= 0, an empty or
    /// unknown column, or bounds outside [0, 1].
    void validate() const;
    /// p_min + k step up to p_max; a last point within 1e-9 of p_max is
    /// snapped to it.
    std::vector<double> points() const;
};

/// Header p_question,<columns> and one row per point.
void write_curves(const SweepSpec &sweep, std::ostream &out);

struct TradeoffRow {
    /// classical, classical_matched, quantum, ideal or stochastic_switching.
    std::string kind;
    double p_question;
    std::optional<double> s;
    std::optional<double> r;
    double a;
    double b;
};

/// The feasible classical segment (segment_points values of s, evenly
/// spaced), the classical protocol at the quantum protocol's Alice value,
/// the quantum point, the ideal (guessing) point and, at p_? = 1/2, the
/// stochastic-switching constants. Throws std::invalid_argument unless
/// 0 < p_? < 1.
std::vector<TradeoffRow> tradeoff_rows(double p_question, std::size_t segment_points = 101);

/// Header kind,p_question,s,r,a,b; s and r are empty where undefined.
void write_tradeoff(const std::vector<TradeoffRow> &rows, std::ostream &out);

enum class Format { Csv, Jsonl };

struct SimulationResult {
    verify::McConfig config;
    adversary::CheatReport report;
    double reference;
    /// |estimate - reference| / ci99; 0 when both the deviation and ci99 are 0.
    double deviation_widths;
    bool passed;
};

/// Throws std::out_of_range for an unknown (protocol, strategy).
SimulationResult simulate(const verify::McConfig &config);

void write_simulation(const SimulationResult &result, Format format, std::ostream &out);

/// key=value lines describing a run; written next to every output.
class RunManifest {
   public:
    void add(const std::string &key, const std::string &value);
    std::string text() const;
    /// The argv entry, if present.
    static std::optional<std::vector<std::string>> parse_argv(const std::string &text);

   private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace rabin_ot::cli

#endif
