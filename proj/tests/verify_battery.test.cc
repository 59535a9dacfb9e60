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

#include "rabin_ot/verify/battery.h"

#include <algorithm>

#include "gtest/gtest.h"

using namespace rabin_ot::verify;

namespace {

bool has_line_containing(const BatteryReport &report, const std::string &text) {
    return std::any_of(report.checks.begin(), report.checks.end(),
                       [&](const CheckResult &c) { return c.line().find(text) != std::string::npos; });
}

}  // namespace

TEST(battery, quick_passes_fast) {
    BatteryOptions options;
    auto report = run_battery(options);
    ASSERT_TRUE(report.passed());
    double seconds = 0;
    for (const auto &c : report.checks) {
        seconds += c.seconds;
        ASSERT_EQ(c.status, CheckStatus::Pass) << c.line();
    }
    ASSERT_LT(seconds, 5);
    ASSERT_FALSE(has_line_containing(report, "crossover"));
}

TEST(battery, quick_fault_is_caught) {
    BatteryOptions options;
    options.inject_fault = true;
    auto report = run_battery(options);
    ASSERT_FALSE(report.passed());
    ASSERT_EQ(report.failed_names(), std::vector<std::string>{"spot-values"});
}

TEST(battery, full_passes) {
    BatteryOptions options;
    options.depth = Depth::Full;
    auto report = run_battery(options);
    for (const auto &c : report.checks) {
        ASSERT_NE(c.status, CheckStatus::Fail) << c.line();
    }
    ASSERT_TRUE(has_line_containing(report, "crossover = 0.384615385 (target 5/13) PASS"));
    ASSERT_EQ(report.count(CheckStatus::Info), 2u);
    ASSERT_TRUE(has_line_containing(report, "mc coinflip/bob-cheat"));
}

TEST(battery, full_fault_is_caught) {
    BatteryOptions options;
    options.depth = Depth::Full;
    options.mc_rounds = 10000;
    options.inject_fault = true;
    auto report = run_battery(options);
    ASSERT_FALSE(report.passed());
    ASSERT_EQ(report.failed_names(), std::vector<std::string>{"spot-values"});
}

TEST(battery, line_format) {
    CheckResult c{"x", CheckStatus::Info, "x: detail", 0};
    ASSERT_EQ(c.line(), "x: detail INFO");
    c.status = CheckStatus::Fail;
    ASSERT_EQ(c.line(), "x: detail FAIL");
}
