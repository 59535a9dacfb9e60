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

#include "rabin_ot/analytics/closed_forms.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace rabin_ot::analytics;
using rabin_ot::protocols::ClassicalBranch;
using rabin_ot::protocols::GeneralizedClassicalParams;
using rabin_ot::testing::unit_grid;

TEST(closed_forms, bob_values) {
    ASSERT_EQ(bob_guessing(0), 1);
    ASSERT_EQ(bob_guessing(1), 0.5);
    ASSERT_EQ(bob_guessing(0.5), 0.75);
    ASSERT_NEAR(bob_cheating_quantum(0.5), (2 + std::sqrt(3.0)) / 4, 1e-12);
    ASSERT_EQ(bob_cheating_quantum(1), 0.5);
    ASSERT_EQ(bob_cheating_quantum(0), 1);
    ASSERT_THROW(bob_guessing(-0.1), std::invalid_argument);
}

TEST(closed_forms, alice_values) {
    ASSERT_EQ(alice_guessing(0.5), 0.5);
    ASSERT_EQ(alice_guessing(0), 1);
    ASSERT_NEAR(alice_guessing(0.8), 0.8, 1e-15);
    ASSERT_EQ(alice_no_testing(0.3), 1);
    ASSERT_EQ(alice_monitoring(0.5), 0.75);
    ASSERT_NEAR(alice_monitoring(1.0 / 3), 2.0 / 3, 1e-15);
    ASSERT_NEAR(alice_monitoring(0.2), 0.8, 1e-15);
    ASSERT_NEAR(alice_full_two_state(0.5, M_SQRT1_2), 0.75, 1e-12);
    ASSERT_NEAR(alice_full_two_state(1.0 / 3, M_SQRT1_2), 2.0 / 3, 1e-12);
    ASSERT_NEAR(alice_three_state_mirror(0.4), 0.64, 1e-15);
    ASSERT_NEAR(alice_three_state_mirror(0.5), 2.0 / 3, 1e-15);
    ASSERT_NEAR(alice_three_state_mirror(1.0 / 3), 2.0 / 3, 1e-15);
    ASSERT_THROW(alice_full_two_state(0.5, 1.5), std::invalid_argument);
}

TEST(closed_forms, product_cheat_state_is_guessing) {
    for (double p : unit_grid(0.01)) {
        ASSERT_NEAR(entangled_u(p, 1), std::abs(1 - 2 * p), 1e-12);
        ASSERT_NEAR(alice_full_two_state(p, 1), alice_guessing(p), 1e-12);
        ASSERT_NEAR(alice_full_two_state(p, 0), alice_guessing(p), 1e-12);
    }
}

TEST(closed_forms, srm_value_at_one_half) {
    // Independent evaluation at p = 1/2, a = b: ab = 1/2, (1-p)/(1+p) = 1/3.
    double expected = (1 * (1 + 1 / std::sqrt(3.0)) + 0.5 * (3 * 0.25 / 3 - 1)) / (1 + std::sqrt(0.75));
    ASSERT_NEAR(alice_three_state_srm(0.5, M_SQRT1_2), expected, 1e-12);
    ASSERT_NEAR(alice_three_state_srm(0.5, M_SQRT1_2), 0.64433756729740, 1e-12);
    ASSERT_LE(alice_three_state_srm(0.5, M_SQRT1_2), alice_three_state_mirror(0.5));
}

TEST(closed_forms, curve_points) {
    auto half = quantum_curves(0.5);
    ASSERT_EQ(half.a_guess, 0.5);
    ASSERT_EQ(half.a_monitor, 0.75);
    ASSERT_NEAR(half.a_full_three_state, 2.0 / 3, 1e-15);
    ASSERT_NEAR(half.b_cheat, (2 + std::sqrt(3.0)) / 4, 1e-12);
    for (double p : {0.0, 1.0}) {
        auto end = quantum_curves(p);
        ASSERT_EQ(end.a_guess, 1);
        ASSERT_EQ(end.a_no_test, 1);
        ASSERT_EQ(end.a_monitor, 1);
        ASSERT_EQ(end.a_full_two_state, 1);
        ASSERT_EQ(end.a_full_three_state, 1);
    }
    ASSERT_EQ(quantum_curves(0).b_cheat, 1);
    ASSERT_EQ(quantum_curves(1).b_cheat, 0.5);
    ASSERT_NEAR(quantum_curves(0.4).a_full_three_state, 0.64, 1e-15);
}

TEST(closed_forms, curve_invariants_on_fine_grid) {
    for (double p : unit_grid(0.001)) {
        auto c = quantum_curves(p);
        for (double v : {c.a_guess, c.a_no_test, c.a_monitor, c.a_full_two_state, c.a_full_three_state, c.b_guess,
                         c.b_cheat}) {
            ASSERT_GE(v, 0);
            ASSERT_LE(v, 1);
        }
        ASSERT_EQ(c.a_no_test, 1);
        ASSERT_EQ(c.a_monitor, c.a_full_two_state);
        ASSERT_LE(c.a_full_three_state, c.a_full_two_state + 1e-12) << p;
        ASSERT_GE(c.b_cheat, c.b_guess - 1e-12);
        if (p > 0 && p < 1) {
            ASSERT_GT(c.b_cheat, c.b_guess);
        }
        if (p <= 1.0 / 3) {
            ASSERT_NEAR(c.a_monitor, c.a_guess, 1e-12);
            ASSERT_NEAR(c.a_full_two_state, c.a_guess, 1e-12);
            ASSERT_NEAR(c.a_full_three_state, c.a_guess, 1e-12) << p;
        }
    }
}

TEST(closed_forms, equal_coefficients_maximize_u) {
    for (double p : unit_grid(0.01)) {
        double best = alice_full_two_state(p, M_SQRT1_2);
        for (double a : unit_grid(0.01)) {
            ASSERT_LE(alice_full_two_state(p, a), best + 1e-12);
        }
    }
}

TEST(closed_forms, classical_values) {
    ASSERT_EQ(classical_alice(1, 0.5), 0.5);
    ASSERT_EQ(classical_bob(1), 1);
    ASSERT_EQ(classical_alice(0, 0.7), 1);
    ASSERT_EQ(classical_bob(0), 0.5);
    ASSERT_EQ(classical_alice(0.5, 1), 1);
    ASSERT_EQ(classical_bob(0.5), 0.75);
    ASSERT_NEAR(classical_alice(0.5, 0.2), 0.9, 1e-15);
}

TEST(closed_forms, classical_tradeoff) {
    ASSERT_EQ(classical_tradeoff(0.5, 0.5), 1);
    ASSERT_EQ(classical_tradeoff(0.5, 0.75), 0.875);
    ASSERT_EQ(classical_tradeoff(0, 1), 1);
    ASSERT_THROW(classical_tradeoff(0.5, 0.2), InfeasibleTradeoff);
    ASSERT_THROW(classical_tradeoff(0.5, 1.2), std::invalid_argument);
    // A = 1 needs s = 1 - p exactly: feasible with r = 1.
    ASSERT_EQ(classical_tradeoff_point(0.5, 1.0).r, 1);
    // A below the guessing value needs s > 2(1 - p).
    ASSERT_THROW(classical_tradeoff(0.9, 0.85), InfeasibleTradeoff);

    auto point = classical_tradeoff_point(0.5, 0.75);
    ASSERT_EQ(point.s, 0.75);
    ASSERT_NEAR(point.r, 2.0 / 3, 1e-15);
    ASSERT_NEAR(classical_alice(point.s, point.r), 0.75, 1e-15);
    ASSERT_NEAR(classical_bob(point.s), point.b_value, 1e-15);
}

TEST(closed_forms, classical_tradeoff_residual_on_samples) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 10000; trial++) {
        double s = unit(rng);
        double r = 0.5 + 0.5 * unit(rng);
        double p = 1 - s * r;
        double a = classical_alice(s, r);
        double b = classical_bob(s);
        ASSERT_LT(std::abs(b - classical_tradeoff(p, a)), 1e-12);
    }
}

TEST(closed_forms, classical_point_for_send) {
    auto low = classical_point_for_send(0.9, 0.1);
    ASSERT_NEAR(low.r, 1, 1e-15);
    ASSERT_NEAR(low.a_value, 1, 1e-15);
    auto high = classical_point_for_send(0.9, 0.2);
    ASSERT_NEAR(high.r, 0.5, 1e-15);
    ASSERT_EQ(high.regime, TradeoffRegime::ReadAtLeastHalf);
    auto below = classical_point_for_send(0.9, 0.5);
    ASSERT_EQ(below.regime, TradeoffRegime::ReadBelowHalf);
    ASSERT_THROW(classical_point_for_send(0.5, 0.2), InfeasibleTradeoff);
}

TEST(closed_forms, coin_flip) {
    auto a = coin_flip_cheats(1, 0.25);
    ASSERT_EQ(a.alice, 1);
    ASSERT_EQ(a.bob, 0.875);
    for (double p : {0.0, 0.1, 0.3, 0.5}) {
        auto zero = coin_flip_cheats(0, p);
        ASSERT_NEAR(zero.alice, 1 - p, 1e-15);
        ASSERT_EQ(zero.bob, 1);
    }
    auto boundary = coin_flip_cheats(0.5, 0.5);
    ASSERT_NEAR(boundary.alice + 2 * boundary.bob, 2.5, 1e-12);
    ASSERT_LT(boundary.residual(0.5), 1e-12);
}

TEST(closed_forms, coin_flip_identities_on_grid) {
    for (double y : unit_grid(0.05)) {
        for (double p : unit_grid(0.01)) {
            ASSERT_LT(coin_flip_cheats(y, p).residual(p), 1e-12) << y << " " << p;
        }
    }
}

TEST(closed_forms, coin_flip_comparison) {
    auto high = compare_with_coin_flip(0.75);
    ASSERT_NEAR(high.slack, -0.125, 1e-15);
    ASSERT_EQ(high.ordering, ProtocolOrdering::SendReadBetter);
    ASSERT_EQ(ordering_name(high.ordering), "send/read better");
    auto half = compare_with_coin_flip(0.5);
    ASSERT_EQ(half.slack, 0);
    ASSERT_EQ(half.ordering, ProtocolOrdering::Equal);
    auto one = compare_with_coin_flip(1);
    ASSERT_EQ(one.slack, 0);
    ASSERT_EQ(one.ordering, ProtocolOrdering::Equal);
    for (double p : unit_grid(0.01)) {
        auto c = compare_with_coin_flip(p);
        if (p > 0.5) {
            ASSERT_LE(c.slack, 0);
        }
        // The factorization: 3 - 5p + 3p^2 - 1 - (1-p)^2.
        ASSERT_NEAR(c.slack, 3 - 5 * p + 3 * p * p - 1 - (1 - p) * (1 - p), 1e-12);
    }
}

TEST(closed_forms, generalized_classical) {
    auto single = generalized_classical(GeneralizedClassicalParams({{1, 0.8, 0.7}}));
    ASSERT_NEAR(single.alice, classical_alice(0.8, 0.7), 1e-15);
    ASSERT_NEAR(single.bob, classical_bob(0.8), 1e-15);
    ASSERT_NEAR(single.p_question, 1 - 0.56, 1e-15);

    auto two = generalized_classical(GeneralizedClassicalParams({{0.5, 1, 0.5}, {0.5, 0.5, 1}}));
    ASSERT_LT(two.tradeoff_residual, 1e-12);
    ASSERT_THROW(generalized_classical(GeneralizedClassicalParams({{1, 0.8, 0.3}})), std::invalid_argument);
}

TEST(closed_forms, generalized_classical_random_mixtures) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 10000; trial++) {
        int branches = 1 + static_cast<int>(unit(rng) * 5);
        std::vector<ClassicalBranch> list;
        double total = 0;
        for (int k = 0; k < branches; k++) {
            list.push_back({unit(rng), unit(rng), 0.5 + 0.5 * unit(rng)});
            total += list.back().weight;
        }
        for (auto &b : list) {
            b.weight /= total;
        }
        auto result = generalized_classical(GeneralizedClassicalParams(list));
        ASSERT_LT(result.tradeoff_residual, 1e-12);
    }
}

TEST(closed_forms, advantage_crossover) {
    double root = advantage_crossover();
    ASSERT_NEAR(root, 5.0 / 13, 1e-9);
    // Exact values at the root.
    ASSERT_NEAR(alice_monitoring(5.0 / 13), 9.0 / 13, 1e-15);
    ASSERT_NEAR(bob_cheating_quantum(5.0 / 13), 25.0 / 26, 1e-15);
    ASSERT_NEAR(classical_tradeoff(5.0 / 13, 9.0 / 13), 25.0 / 26, 1e-15);

    auto low = advantage_margin(0.2);
    ASSERT_NEAR(low.classical_bob, 1, 1e-15);
    ASSERT_LT(low.quantum_bob, 1);
    ASSERT_GT(low.margin(), 0);
    ASSERT_LT(advantage_margin(0.5).margin(), 0);
    for (double p : {0.1, 0.25, 0.35}) {
        ASSERT_GT(advantage_margin(p).margin(), 0) << p;
    }
    for (double p : {0.45, 0.6, 0.9}) {
        ASSERT_LT(advantage_margin(p).margin(), 0) << p;
    }
}

TEST(closed_forms, comparison_constants) {
    auto c = comparison_constants();
    ASSERT_EQ(c.stochastic_switching_alice, 0.933);
    ASSERT_EQ(c.stochastic_switching_bob, 0.9691);
    ASSERT_EQ(c.pure_state_alice, 0.75);
    ASSERT_NEAR(c.pure_state_bob, 0.9330127, 1e-7);
    ASSERT_EQ(c.ideal_alice, 0.5);
    ASSERT_EQ(c.ideal_bob, 0.75);
    ASSERT_TRUE(c.pure_state_dominates());
}
