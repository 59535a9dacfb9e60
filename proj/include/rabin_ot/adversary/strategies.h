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

#ifndef RABIN_OT_ADVERSARY_STRATEGIES_H
#define RABIN_OT_ADVERSARY_STRATEGIES_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rabin_ot/protocols/session.h"

namespace rabin_ot::adversary {

/// What a cheating sender tries to learn. TwoOutcome: whether Bob got the
/// bit. ThreeOutcome: no bit, or which bit value he got.
enum class Objective { TwoOutcome, ThreeOutcome };

std::string objective_name(Objective objective);

struct AliceStrategy {
    enum class Kind { Honest, GuessOnly, SendOne, MonitoredMixture, EntangledCheat };

    Kind kind = Kind::Honest;
    /// Probability of sending |0>; MonitoredMixture only.
    double x = 0;
    /// Cheat-state coefficient, b = sqrt(1 - a^2); EntangledCheat only.
    double a = 0;
    Objective objective = Objective::TwoOutcome;
    /// Swap (a, b) on odd rounds so Bob sees equiprobable bit values.
    bool alternate = false;

    static AliceStrategy honest();
    static AliceStrategy guess_only();
    static AliceStrategy send_one();
    static AliceStrategy monitored_mixture(double x);
    static AliceStrategy entangled_cheat(double a, Objective objective, bool alternate = false);
};

struct BobStrategy {
    enum class Kind { HonestUSD, GuessUnknown, HelstromCheat };
    Kind kind = Kind::HonestUSD;
};

enum class Method { Exact, MonteCarlo };

std::string method_name(Method method);

/// Outcome of evaluating a cheating strategy. Exact reports carry the
/// fraction of rounds in which the cheater is certain; Monte Carlo reports
/// carry counts and a 99% half-width.
struct CheatReport {
    double success_probability = 0;
    /// Rounds in which the cheater's conditional success is exactly 1.
    std::uint64_t certainty_events = 0;
    /// Rounds simulated; 0 for exact reports.
    std::uint64_t rounds = 0;
    /// certainty_events / rounds, or the exact per-round probability.
    double certainty_fraction = 0;
    Method method = Method::Exact;
    std::optional<double> ci99;
    std::string note;

    static CheatReport exact(double success, double certainty_fraction, std::string note = "");
    /// Frequency estimate with half-width 2.576 sqrt(p(1-p)/N).
    static CheatReport monte_carlo(std::uint64_t successes, std::uint64_t certain, std::uint64_t rounds);
};

enum class AliceGuess { Bit, NoBit };

std::string guess_name(AliceGuess guess);

// Receiver strategies.

/// The received bit on Bit0/Bit1, a fair coin otherwise.
int bob_guess_rule(protocols::RoundOutcome outcome, protocols::RoundRng &rng);

struct HelstromCheat {
    /// Labelled ("Bit0", "Bit1").
    qmath::Povm measurement;
    double success;
};

/// Minimum-error measurement on |psi_0>, |psi_1> with equal priors.
HelstromCheat bob_helstrom_cheat(double theta);

// Sender strategies.

struct GuessRule {
    AliceGuess guess;
    double success;
};

/// Honest sending, then guess the likelier event; ties go to NoBit.
GuessRule alice_guess_rule(double p_question);

struct NoTestingCheat {
    qmath::PureState state;
    CheatReport report;
};

/// Send |1>: Bob always gets a bit whose value Alice does not know.
NoTestingCheat alice_no_testing_cheat();

struct MonitoringCheat {
    /// Probability of sending |0>, cos^2 theta.
    double x;
    AliceGuess after_zero;
    AliceGuess after_one;
    /// Bob's NoBit probability under the mixture; equals p_?.
    double bob_no_bit;
    CheatReport report;
};

/// Send |0> with probability cos^2 theta, |1> otherwise. After |0> guess NoBit
/// iff p_? >= 1/3; after |1> always Bit (and be certain).
MonitoringCheat alice_monitoring_cheat(double p_question);

struct EntangledCheat {
    /// a|0>|psi_0> + b|1>|psi_1>, Alice's factor first.
    qmath::BipartiteState state;
    /// Alice's measurement on her half, labelled ("NoBit", "Bit").
    qmath::Povm measurement;
    /// Bob's outcome probabilities (NoBit, Bit) and Alice's conditional states.
    double p_no_bit;
    std::optional<qmath::DensityMatrix> rho_no_bit;
    std::optional<qmath::DensityMatrix> rho_bit;
    double u;
    double success;
};

/// Two-outcome objective: Helstrom measurement on Alice's conditional states
/// with priors (p_?, 1 - p_?).
EntangledCheat alice_entangled_cheat(double p_question, double a);

/// Alice's ensemble for the three-outcome objective: her conditional states
/// given Bob's (NoBit, Bit0, Bit1), with their probabilities.
struct ThreeStateEnsemble {
    std::array<double, 3> priors;
    /// Placeholder |0><0| where the prior is 0.
    std::array<qmath::DensityMatrix, 3> states;
};

ThreeStateEnsemble three_state_ensemble(double p_question, double a);

struct ThreeStateCheat {
    ThreeStateEnsemble ensemble;
    double srm_closed_form;
    double srm_numeric;
    /// Present when a = b = 1/sqrt(2).
    std::optional<double> mirror_optimum;
};

ThreeStateCheat alice_three_state_cheat(double p_question, double a);

struct ClassicalCheats {
    double alice;
    double bob;
    AliceGuess guess_after_send;
    /// When nothing was sent Bob surely has no bit.
    AliceGuess guess_after_no_send;
    /// Cheating Bob always reads.
    bool bob_always_reads;
};

/// Alice guesses the likelier event given whether she sent; Bob always reads.
ClassicalCheats classical_cheats(const protocols::ClassicalParams &params);

/// The same values computed from the qutrit mixed-state form of the protocol.
ClassicalCheats mixed_protocol_cheats(const protocols::ClassicalParams &params);

/// A session sender implementing the strategy under full testing.
/// Honest and GuessOnly send |psi_bit>; SendOne and MonitoredMixture send
/// basis states and declare their bit; EntangledCheat sends the cheat state.
protocols::SenderPolicy sender_policy(const AliceStrategy &strategy, const protocols::ProtocolParams &params);

}  // namespace rabin_ot::adversary

#endif
