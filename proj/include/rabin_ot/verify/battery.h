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

#ifndef RABIN_OT_VERIFY_BATTERY_H
#define RABIN_OT_VERIFY_BATTERY_H

#include <cstdint>
#include <string>
#include <vector>

#include "rabin_ot/verify/monte_carlo.h"

namespace rabin_ot::verify {

enum class CheckStatus { Pass, Fail, Info };

std::string status_name(CheckStatus status);

struct CheckResult {
    std::string name;
    CheckStatus status;
    /// One line, starting with the check name.
    std::string detail;
    double seconds = 0;

    /// "<detail> PASS", "<detail> FAIL" or "<detail> INFO".
    std::string line() const;
};

struct BatteryReport {
    std::vector<CheckResult> checks;

    /// No check failed; Info lines never fail.
    bool passed() const;
    std::vector<std::string> failed_names() const;
    std::size_t count(CheckStatus status) const;
};

enum class Depth { Quick, Full };

struct BatteryOptions {
    Depth depth = Depth::Quick;
    std::uint64_t seed = 1;
    std::uint64_t mc_rounds = 1000000;
    /// Test mode: replaces one reference constant with a wrong value so that
    /// the battery must fail.
    bool inject_fault = false;
};

/// Quick: closed-form identities, including qmath evaluations of the same
/// quantities. Full adds the crossover solve, every oracle at its default
/// grid, protocol sessions and Monte Carlo agreement for every scenario.
BatteryReport run_battery(const BatteryOptions &options);

/// Monte Carlo agreement of one scenario at each p_?: every run must lie
/// within 4 CI-widths of the closed form.
CheckResult mc_agreement_check(const Scenario &scenario, const std::vector<double> &p_values, std::uint64_t rounds,
                               std::uint64_t seed);

/// Runs every scenario at p_? for seeds 1..seeds and fails when more than
/// max_fraction of the runs fall outside 4 CI-widths.
CheckResult mc_seed_battery_check(double p_question, std::uint64_t seeds, std::uint64_t rounds,
                                  double max_fraction = 0.01);

/// The p_? values at which the scenarios are checked.
std::vector<double> mc_check_points();

}  // namespace rabin_ot::verify

#endif
