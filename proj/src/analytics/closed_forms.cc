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

#include <algorithm>
#include <cmath>

namespace rabin_ot::analytics {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

void require_probability(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(p));
    }
}

void require_amplitude(double a) {
    if (!(a >= 0 && a <= 1)) {
        throw std::invalid_argument("cheat-state coefficient a must be in [0, 1], got " + std::to_string(a));
    }
}

}  // namespace

double bob_guessing(double p) {
    require_probability(p, "p_question");
    return 1 - p / 2;
}

double bob_cheating_quantum(double p) {
    require_probability(p, "p_question");
    if (p == 1) {
        return 0.5;
    }
    return 0.5 * (1 + std::sqrt(1 - p * p));
}

double alice_guessing(double p) {
    require_probability(p, "p_question");
    return std::max(p, 1 - p);
}

double alice_no_testing(double p) {
    require_probability(p, "p_question");
    return 1;
}

double alice_monitoring(double p) {
    require_probability(p, "p_question");
    return std::max((1 + p) / 2, 1 - p);
}

double entangled_u(double p, double a) {
    require_probability(p, "p_question");
    require_amplitude(a);
    double b2 = 1 - a * a;
    double u2 = (1 - 2 * p) * (1 - 2 * p) - 4 * a * a * b2 * (1 - p) * (1 - 3 * p);
    return std::sqrt(std::max(0.0, u2));
}

double alice_full_two_state(double p, double a) {
    return std::max((1 + entangled_u(p, a)) / 2, 1 - p);
}

double alice_full_two_state_optimal(double p) {
    require_probability(p, "p_question");
    return std::max((1 + p) / 2, 1 - p);
}

double alice_three_state_srm(double p, double a) {
    require_probability(p, "p_question");
    require_amplitude(a);
    double ab = a * std::sqrt(1 - a * a);
    double ratio = (1 - p) / (1 + p);
    double numerator =
        (1 - p + 2 * p * p) * (1 + 2 * ab * std::sqrt(ratio)) + p * (6 * p * ab * ab * ratio - 1);
    return numerator / (1 + 2 * ab * std::sqrt(1 - p * p));
}

double alice_three_state_mirror(double p) {
    require_probability(p, "p_question");
    double guess = 1 - p;
    // 4p^2/(5p-1) - (1-p) = (3p-1)^2/(5p-1) >= 0, so a plain max would exceed
    // the guessing value on (1/5, 1/3). The mirror measurement is only used
    // from p = 1/3 on, where the two branches meet at 2/3.
    if (p <= 1.0 / 3) {
        return guess;
    }
    return std::max(4 * p * p / (5 * p - 1), guess);
}

CheatCurvePoint quantum_curves(double p) {
    return {
        p,
        alice_guessing(p),
        alice_no_testing(p),
        alice_monitoring(p),
        alice_full_two_state_optimal(p),
        alice_three_state_mirror(p),
        bob_guessing(p),
        bob_cheating_quantum(p),
    };
}

double classical_alice(double s, double r) {
    require_probability(s, "s");
    require_probability(r, "r");
    return r < 0.5 ? 1 - r * s : 1 - s + r * s;
}

double classical_bob(double s) {
    require_probability(s, "s");
    return (1 + s) / 2;
}

TradeoffPoint classical_tradeoff_point(double p, double a_value) {
    require_probability(p, "p_question");
    require_probability(a_value, "Alice cheating probability");
    double s = 2 - p - a_value;
    double s_min = 1 - p;
    double s_max = std::min(1.0, 2 * (1 - p));
    if (s < s_min - kFeasibilitySlack || s > s_max + kFeasibilitySlack) {
        throw InfeasibleTradeoff("no classical protocol with read probability >= 1/2 has p_? = " +
                                 std::to_string(p) + " and Alice-cheat " + std::to_string(a_value));
    }
    s = std::clamp(s, s_min, s_max);
    double r = s > 0 ? (1 - p) / s : 1;
    return {p, a_value, (3 - p - a_value) / 2, s, std::min(r, 1.0), TradeoffRegime::ReadAtLeastHalf};
}

double classical_tradeoff(double p, double a_value) {
    return classical_tradeoff_point(p, a_value).b_value;
}

TradeoffPoint classical_point_for_send(double p, double s) {
    require_probability(p, "p_question");
    require_probability(s, "s");
    if (s < 1 - p - kFeasibilitySlack) {
        throw InfeasibleTradeoff("send probability below 1 - p_? cannot deliver the bit often enough");
    }
    double r = s > 0 ? std::min(1.0, (1 - p) / s) : 1;
    if (std::abs(r - 0.5) < kFeasibilitySlack) {
        // s = 2(1 - p) up to rounding: the segment's endpoint, not the r < 1/2 regime.
        r = 0.5;
    }
    return {p, classical_alice(s, r), classical_bob(s), s, r,
            r < 0.5 ? TradeoffRegime::ReadBelowHalf : TradeoffRegime::ReadAtLeastHalf};
}

CoinFlipCheats coin_flip_cheats(double y, double p) {
    require_probability(y, "y");
    require_probability(p, "p_question");
    CoinFlipCheats result{};
    result.alice = p <= 0.5 ? 1 - p + y * p : p + y * (1 - p);
    result.bob = 1 - y * p / 2;
    result.low_branch_residual = std::abs(result.alice + 2 * result.bob - (3 - p));
    result.high_branch_residual =
        std::abs(p * result.alice + 2 * (1 - p) * result.bob - (1 + (1 - p) * (1 - p)));
    return result;
}

std::string ordering_name(ProtocolOrdering ordering) {
    return ordering == ProtocolOrdering::Equal ? "equal" : "send/read better";
}

CoinFlipComparison compare_with_coin_flip(double p) {
    require_probability(p, "p_question");
    double slack = (1 - 2 * p) * (1 - p);
    bool strictly_better = p > 0.5 && slack < 0;
    return {strictly_better ? ProtocolOrdering::SendReadBetter : ProtocolOrdering::Equal, slack};
}

GeneralizedCheats generalized_classical(const protocols::GeneralizedClassicalParams &params) {
    double sent = 0;
    double delivered = 0;
    for (const auto &branch : params.branches) {
        if (branch.r < 0.5) {
            throw std::invalid_argument("generalized classical protocol: every branch needs r >= 1/2");
        }
        sent += branch.weight * branch.s;
        delivered += branch.weight * branch.r * branch.s;
    }
    GeneralizedCheats result{};
    result.p_question = 1 - delivered;
    result.alice = 1 - sent + delivered;
    result.bob = 0.5 * (1 + sent);
    result.tradeoff_residual = std::abs(result.bob - 0.5 * (3 - result.p_question - result.alice));
    return result;
}

AdvantageMargin advantage_margin(double p) {
    AdvantageMargin result{};
    result.p_question = p;
    result.quantum_alice = alice_monitoring(p);
    result.quantum_bob = bob_cheating_quantum(p);
    result.classical_bob = classical_tradeoff(p, result.quantum_alice);
    return result;
}

double advantage_crossover() {
    double lo = 0.34;
    double hi = 0.45;
    double f_lo = advantage_margin(lo).margin();
    double f_hi = advantage_margin(hi).margin();
    if (f_lo * f_hi >= 0) {
        throw std::logic_error("advantage_crossover: bracket does not straddle a sign change");
    }
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        double f_mid = advantage_margin(mid).margin();
        if ((f_mid > 0) == (f_lo > 0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ComparisonConstants comparison_constants() {
    constexpr double p = 0.5;
    return {p, 0.933, 0.9691, alice_monitoring(p), bob_cheating_quantum(p), alice_guessing(p), bob_guessing(p)};
}

}  // namespace rabin_ot::analytics
