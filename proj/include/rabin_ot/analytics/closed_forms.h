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

#ifndef RABIN_OT_ANALYTICS_CLOSED_FORMS_H
#define RABIN_OT_ANALYTICS_CLOSED_FORMS_H

#include <stdexcept>
#include <string>

#include "rabin_ot/protocols/params.h"

/// Closed-form cheating and guessing probabilities. Every function here is a
/// pure formula; simulation and the numerical oracles are checked against
/// these values.
namespace rabin_ot::analytics {

// Receiver (Bob).

/// Honest measurement, random guess on no-bit: 1 - p/2.
double bob_guessing(double p_question);
/// Minimum-error measurement on the two honest states: (1 + sqrt(1 - p^2)) / 2.
double bob_cheating_quantum(double p_question);

// Sender (Alice), pure-state protocol.

/// max(p, 1 - p).
double alice_guessing(double p_question);
/// No testing: she sends |1> and always knows Bob gets a bit.
double alice_no_testing(double p_question);
/// Bob monitors outcome frequencies: max((1 + p)/2, 1 - p).
double alice_monitoring(double p_question);
/// Full testing, entangled cheat state with coefficient a, guessing only
/// whether Bob got a bit: max((1 + u)/2, 1 - p) with
/// u = sqrt((1-2p)^2 - 4 a^2 b^2 (1-p)(1-3p)).
double alice_full_two_state(double p_question, double a);
double entangled_u(double p_question, double a);
/// alice_full_two_state at a = b = 1/sqrt(2).
double alice_full_two_state_optimal(double p_question);
/// Square-root-measurement value for the three-outcome objective (no bit,
/// bit 0, bit 1) with cheat coefficient a; a lower bound on Alice's success.
double alice_three_state_srm(double p_question, double a);
/// Optimum for the three-outcome objective at a = b (mirror-symmetric
/// ensemble): 4p^2 / (5p - 1) for p > 1/3 and the guessing value 1 - p
/// otherwise.
double alice_three_state_mirror(double p_question);

/// One point of every curve, as a function of p_?.
struct CheatCurvePoint {
    double p_question;
    double a_guess;
    double a_no_test;
    double a_monitor;
    double a_full_two_state;
    double a_full_three_state;
    double b_guess;
    double b_cheat;
};

CheatCurvePoint quantum_curves(double p_question);

// Classical protocol with send probability s and read probability r.

double classical_alice(double s, double r);
double classical_bob(double s);

class InfeasibleTradeoff : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class TradeoffRegime { ReadAtLeastHalf, ReadBelowHalf };

struct TradeoffPoint {
    double p_question;
    double a_value;
    double b_value;
    double s;
    double r;
    TradeoffRegime regime;
};

/// Bob's cheating probability B = (3 - p - A)/2 of the classical protocol
/// (r >= 1/2) that achieves p_? and Alice-cheat A. Throws InfeasibleTradeoff
/// when no such protocol exists: s = 2 - p - A must lie in
/// [1 - p, min(1, 2(1 - p))].
double classical_tradeoff(double p_question, double a_value);
TradeoffPoint classical_tradeoff_point(double p_question, double a_value);

/// Classical (A, B) at send probability s for fixed p_?; r = (1-p)/s.
TradeoffPoint classical_point_for_send(double p_question, double s);

// Weak-coin-flip protocol.

struct CoinFlipCheats {
    double alice;
    double bob;
    /// |A + 2B - (3 - p)|, the identity for p <= 1/2.
    double low_branch_residual;
    /// |p A + 2(1 - p) B - (1 + (1 - p)^2)|, the identity for p > 1/2.
    double high_branch_residual;

    /// Residual of the identity that applies at this p_?.
    double residual(double p_question) const {
        return p_question <= 0.5 ? low_branch_residual : high_branch_residual;
    }
};

CoinFlipCheats coin_flip_cheats(double y, double p_question);

enum class ProtocolOrdering { Equal, SendReadBetter };

std::string ordering_name(ProtocolOrdering ordering);

struct CoinFlipComparison {
    ProtocolOrdering ordering;
    /// (1 - 2p)(1 - p): how far the best send/read protocol's tradeoff
    /// constant falls below the coin-flip one for p > 1/2.
    double slack;
};

/// Send/read protocol versus the coin-flip protocol: equal for p <= 1/2,
/// send/read strictly better for 1/2 < p < 1.
CoinFlipComparison compare_with_coin_flip(double p_question);

struct GeneralizedCheats {
    double p_question;
    double alice;
    double bob;
    /// |B - (3 - p - A)/2|.
    double tradeoff_residual;
};

/// Mixture of send/read protocols; every branch must have r >= 1/2.
GeneralizedCheats generalized_classical(const protocols::GeneralizedClassicalParams &params);

struct AdvantageMargin {
    double p_question;
    double quantum_alice;
    double quantum_bob;
    /// Classical Bob-cheat at the same p_? and Alice-cheat as the quantum protocol.
    double classical_bob;

    /// Positive when the quantum protocol has the lower Bob-cheat.
    double margin() const {
        return classical_bob - quantum_bob;
    }
};

AdvantageMargin advantage_margin(double p_question);

/// Bisection for the p_? where quantum and classical Bob-cheat coincide, in
/// the bracket (0.34, 0.45), to 1e-9. The exact root is 5/13.
double advantage_crossover();

struct ComparisonConstants {
    double p_question;
    double stochastic_switching_alice;
    double stochastic_switching_bob;
    double pure_state_alice;
    double pure_state_bob;
    double ideal_alice;
    double ideal_bob;

    bool pure_state_dominates() const {
        return pure_state_alice <= stochastic_switching_alice && pure_state_bob <= stochastic_switching_bob;
    }
};

/// Reference points at p_? = 1/2, including the published cheat values of
/// the stochastic-switching protocol (0.933, 0.9691).
ComparisonConstants comparison_constants();

}  // namespace rabin_ot::analytics

#endif
