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

#include "rabin_ot/verify/monte_carlo.h"

#include <cmath>
#include <cstdlib>
#include <set>

#include "gtest/gtest.h"

#include "rabin_ot/verify/scenarios.h"

using namespace rabin_ot::verify;

namespace {

McConfig config(const std::string &protocol, const std::string &strategy, double p, std::uint64_t rounds,
                std::uint64_t seed, unsigned threads) {
    McConfig cfg;
    cfg.protocol = protocol;
    cfg.strategy = strategy;
    cfg.p_question = p;
    cfg.rounds = rounds;
    cfg.seed = seed;
    cfg.threads = threads;
    return cfg;
}

}  // namespace

TEST(monte_carlo, registry_is_well_formed) {
    const auto &registry = scenario_registry();
    ASSERT_EQ(registry.size(), 15u);
    std::set<std::string> keys;
    for (const auto &s : registry) {
        ASSERT_TRUE(keys.insert(s.key()).second) << s.key();
        ASSERT_FALSE(s.description.empty());
    }
    ASSERT_NO_THROW(find_scenario("quantum", "bob-helstrom"));
    ASSERT_THROW(find_scenario("quantum", "bob-helstorm"), std::out_of_range);
}

TEST(monte_carlo, honest_no_bit_frequency) {
    McConfig cfg = config("quantum", "honest-nobit", 0.5, 1000000, 1, 0);
    auto report = mc_estimate(cfg);
    ASSERT_NEAR(report.success_probability, 0.5, 0.0013);
    ASSERT_TRUE(report.ci99.has_value());
    ASSERT_NEAR(*report.ci99, 2.576 * std::sqrt(report.success_probability * (1 - report.success_probability) / 1e6),
                1e-15);
    ASSERT_EQ(report.rounds, 1000000u);
}

TEST(monte_carlo, quoted_values) {
    auto bob = mc_estimate(config("quantum", "bob-helstrom", 0.5, 1000000, 1, 0));
    ASSERT_TRUE(within_ci(bob, 0.933012701892, 1));
    auto alice = mc_estimate(config("quantum", "alice-monitor", 0.5, 1000000, 1, 0));
    ASSERT_TRUE(within_ci(alice, 0.75, 1));
    ASSERT_NEAR(alice.certainty_fraction, 0.25, 0.002);
}

TEST(monte_carlo, deterministic_across_thread_counts) {
    McConfig cfg = config("quantum", "alice-entangled", 0.4, 100003, 99, 1);
    auto single = mc_estimate(cfg);
    for (unsigned threads : {2u, 3u, 7u}) {
        cfg.threads = threads;
        auto multi = mc_estimate(cfg);
        ASSERT_EQ(multi.success_probability, single.success_probability);
        ASSERT_EQ(multi.certainty_events, single.certainty_events);
    }
    cfg.seed = 100;
    ASSERT_NE(mc_estimate(cfg).success_probability, single.success_probability);
}

TEST(monte_carlo, every_scenario_matches_its_closed_form) {
    for (const auto &s : scenario_registry()) {
        for (double p : {0.1, 1.0 / 3, 0.75}) {
            McConfig cfg = config(s.protocol, s.strategy, p, 200000, 5, 0);
            auto report = mc_estimate(cfg);
            double reference = mc_reference(cfg);
            ASSERT_TRUE(within_ci(report, reference)) << s.key() << " p=" << p << " estimate "
                                                      << report.success_probability << " reference " << reference;
        }
    }
}

TEST(monte_carlo, certainty_accounting) {
    auto no_test = mc_estimate(config("quantum", "alice-no-test", 0.5, 10000, 1, 0));
    ASSERT_EQ(no_test.success_probability, 1);
    ASSERT_EQ(no_test.certainty_events, 10000u);
    ASSERT_EQ(*no_test.ci99, 0);
    auto coin = mc_estimate(config("coinflip", "alice-cheat", 0.5, 100000, 1, 0));
    // Certain on the sender branch (probability y = 1/2) only.
    ASSERT_NEAR(coin.certainty_fraction, 0.5, 0.01);
}

TEST(monte_carlo, within_ci) {
    auto report = rabin_ot::adversary::CheatReport::monte_carlo(500, 0, 1000);
    ASSERT_TRUE(within_ci(report, 0.5));
    ASSERT_TRUE(within_ci(report, 0.5 + 3.9 * *report.ci99));
    ASSERT_FALSE(within_ci(report, 0.5 + 4.1 * *report.ci99));
}

TEST(monte_carlo, worker_count_from_environment) {
    setenv("RABIN_OT_THREADS", "3", 1);
    ASSERT_EQ(default_worker_count(), 3u);
    setenv("RABIN_OT_THREADS", "zero", 1);
    ASSERT_GE(default_worker_count(), 1u);
    unsetenv("RABIN_OT_THREADS");
}

TEST(monte_carlo, explicit_classical_parameters) {
    McConfig cfg = config("classical", "alice-cheat", 0.9, 1000000, 1, 0);
    cfg.classical = rabin_ot::protocols::ClassicalParams(1, 0.5);
    ASSERT_EQ(cfg.input().p_question, 0.5);
    ASSERT_EQ(mc_reference(cfg), 0.5);
    ASSERT_TRUE(within_ci(mc_estimate(cfg), 0.5));
    // r < 1/2 branch: Alice guesses NoBit after sending.
    cfg.classical = rabin_ot::protocols::ClassicalParams(0.8, 0.3);
    ASSERT_NEAR(mc_reference(cfg), 1 - 0.3 * 0.8, 1e-15);
    ASSERT_TRUE(within_ci(mc_estimate(cfg), mc_reference(cfg)));
}

TEST(monte_carlo, coin_flip_weight) {
    for (double y : {0.0, 0.3, 1.0}) {
        McConfig cfg = config("coinflip", "bob-cheat", 0.6, 200000, 3, 0);
        cfg.y = y;
        ASSERT_NEAR(mc_reference(cfg), 1 - y * 0.6 / 2, 1e-15);
        ASSERT_TRUE(within_ci(mc_estimate(cfg), mc_reference(cfg))) << y;
        cfg.strategy = "alice-cheat";
        ASSERT_TRUE(within_ci(mc_estimate(cfg), mc_reference(cfg))) << y;
    }
}
