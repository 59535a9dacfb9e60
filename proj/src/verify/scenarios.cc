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

#include "rabin_ot/verify/scenarios.h"

#include <array>
#include <cmath>
#include <stdexcept>

#include "rabin_ot/adversary/strategies.h"
#include "rabin_ot/analytics/closed_forms.h"

namespace rabin_ot::verify {

using adversary::AliceGuess;
using protocols::ClassicalParams;
using protocols::ProtocolParams;
using protocols::RoundOutcome;
using protocols::RoundRng;
using qmath::DensityMatrix;
using qmath::Povm;

namespace {

/// Born probabilities of each state under one measurement.
using BornTable = std::vector<std::vector<double>>;

BornTable born_table(const std::vector<DensityMatrix> &states, const Povm &povm) {
    BornTable table;
    for (const auto &state : states) {
        table.push_back(qmath::born_probabilities(state, povm));
    }
    return table;
}

bool endpoint(double p) {
    return p == 0 || p == 1;
}

double theta_for(double p) {
    return ProtocolParams::from_p_question(p).theta();
}

/// Outcome classes of Bob's USD measurement: element 2 is NoBit.
constexpr std::size_t kUsdNoBit = 2;

RoundSampler honest_usd(const ScenarioInput &in, bool score_guess) {
    double p = in.p_question;
    double theta = theta_for(p);
    auto [psi0, psi1] = protocols::honest_states(theta);
    BornTable table = born_table({psi0, psi1}, protocols::usd_povm(theta));
    return [table, score_guess](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        std::size_t k = rng.categorical(table[bit]);
        if (!score_guess) {
            return {k == kUsdNoBit, false};
        }
        int guess = adversary::bob_guess_rule(protocols::usd_outcome(k), rng);
        return {guess == bit, k != kUsdNoBit};
    };
}

RoundSampler bob_helstrom(const ScenarioInput &in) {
    double p = in.p_question;
    double theta = theta_for(p);
    auto [psi0, psi1] = protocols::honest_states(theta);
    BornTable table = born_table({psi0, psi1}, adversary::bob_helstrom_cheat(theta).measurement);
    bool certain = p == 0;
    return [table, certain](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        std::size_t k = rng.categorical(table[bit]);
        return {static_cast<int>(k) == bit, certain};
    };
}

RoundSampler alice_guess(const ScenarioInput &in) {
    double p = in.p_question;
    double theta = theta_for(p);
    auto [psi0, psi1] = protocols::honest_states(theta);
    BornTable table = born_table({psi0, psi1}, protocols::usd_povm(theta));
    bool guess_no_bit = adversary::alice_guess_rule(p).guess == AliceGuess::NoBit;
    bool certain = endpoint(p);
    return [table, guess_no_bit, certain](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        std::size_t k = rng.categorical(table[bit]);
        return {guess_no_bit == (k == kUsdNoBit), certain};
    };
}

RoundSampler alice_no_test(const ScenarioInput &in) {
    double p = in.p_question;
    auto cheat = adversary::alice_no_testing_cheat();
    BornTable table = born_table({cheat.state}, protocols::usd_povm(theta_for(p)));
    return [table](RoundRng &rng) -> RoundResult {
        std::size_t k = rng.categorical(table[0]);
        return {k != kUsdNoBit, true};
    };
}

RoundSampler alice_monitor(const ScenarioInput &in) {
    double p = in.p_question;
    auto cheat = adversary::alice_monitoring_cheat(p);
    BornTable table = born_table({qmath::ket0(), qmath::ket1()}, protocols::usd_povm(theta_for(p)));
    bool zero_no_bit = cheat.after_zero == AliceGuess::NoBit;
    bool zero_certain = endpoint(p);
    double x = cheat.x;
    return [table, zero_no_bit, zero_certain, x](RoundRng &rng) -> RoundResult {
        bool sent_zero = rng.bernoulli(x);
        std::size_t k = rng.categorical(table[sent_zero ? 0 : 1]);
        bool guess_no_bit = sent_zero && zero_no_bit;
        return {guess_no_bit == (k == kUsdNoBit), !sent_zero || zero_certain};
    };
}

/// Bob's outcome class e is drawn from `priors`; Alice then measures her
/// conditional state and succeeds when her outcome index equals e.
/// Certainty: Alice's posterior for her outcome is 1 (computed from the
/// joint table).
RoundSampler ensemble_guess(const std::vector<double> &priors, const BornTable &table) {
    std::size_t outcomes = table.front().size();
    std::vector<bool> certain(outcomes, false);
    for (std::size_t j = 0; j < outcomes; j++) {
        double total = 0;
        double correct = 0;
        for (std::size_t e = 0; e < priors.size(); e++) {
            total += priors[e] * table[e][j];
            if (e == j) {
                correct += priors[e] * table[e][j];
            }
        }
        certain[j] = total > 0 && correct >= total * (1 - 1e-12);
    }
    return [priors, table, certain](RoundRng &rng) -> RoundResult {
        std::size_t e = rng.categorical(priors);
        std::size_t j = rng.categorical(table[e]);
        return {j == e, certain[j]};
    };
}

RoundSampler alice_entangled(const ScenarioInput &in) {
    double p = in.p_question;
    auto cheat = adversary::alice_entangled_cheat(p, M_SQRT1_2);
    DensityMatrix placeholder(qmath::ket0());
    // Measurement elements are (NoBit, Bit); classes are ordered the same way.
    std::vector<DensityMatrix> states{cheat.rho_no_bit.value_or(placeholder), cheat.rho_bit.value_or(placeholder)};
    std::vector<double> priors{cheat.p_no_bit, 1 - cheat.p_no_bit};
    return ensemble_guess(priors, born_table(states, cheat.measurement));
}

RoundSampler alice_three_srm(const ScenarioInput &in) {
    double p = in.p_question;
    auto ensemble = adversary::three_state_ensemble(p, M_SQRT1_2);
    Povm srm = qmath::square_root_measurement(ensemble.priors, ensemble.states);
    std::vector<DensityMatrix> states(ensemble.states.begin(), ensemble.states.end());
    std::vector<double> priors(ensemble.priors.begin(), ensemble.priors.end());
    // A "null" fourth element, if present, never matches a class.
    return ensemble_guess(priors, born_table(states, srm));
}

RoundSampler classical_bob_guess(const ScenarioInput &in) {
    ClassicalParams params = in.classical;
    return [params](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        auto round = protocols::classical_round(params, bit, rng);
        int guess = adversary::bob_guess_rule(round.outcome, rng);
        return {guess == bit, protocols::is_bit(round.outcome)};
    };
}

RoundSampler classical_alice(const ScenarioInput &in) {
    ClassicalParams params = in.classical;
    auto cheats = adversary::classical_cheats(params);
    bool send_no_bit = cheats.guess_after_send == AliceGuess::NoBit;
    bool send_certain = params.r == 0 || params.r == 1;
    return [params, send_no_bit, send_certain](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        auto round = protocols::classical_round(params, bit, rng);
        bool sent = round.transcript.alice_sent.has_value();
        bool guess_no_bit = !sent || send_no_bit;
        return {guess_no_bit == (round.outcome == RoundOutcome::NoBit), !sent || send_certain};
    };
}

RoundSampler classical_bob(const ScenarioInput &in) {
    ClassicalParams params = in.classical;
    return [params](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        bool sent = rng.bernoulli(params.s);
        // Cheating Bob always reads.
        int guess = sent ? bit : rng.bit();
        return {guess == bit, sent};
    };
}

RoundSampler mixed_alice(const ScenarioInput &in) {
    ClassicalParams params = in.classical;
    auto mixed = protocols::mixed_protocol(params);
    auto cheats = adversary::mixed_protocol_cheats(params);
    // Alice prepares basis state k with probability rho_bit(k, k); Bob's
    // outcome distribution on |k> is the diagonal of his elements.
    std::vector<std::vector<double>> preparation(2);
    BornTable on_basis;
    for (int bit = 0; bit < 2; bit++) {
        for (std::size_t k = 0; k < 3; k++) {
            preparation[bit].push_back(mixed.state(bit)(k, k).real());
        }
    }
    for (std::size_t k = 0; k < 3; k++) {
        on_basis.push_back(qmath::born_probabilities(DensityMatrix(qmath::PureState::basis(3, k)), mixed.povm));
    }
    bool send_no_bit = cheats.guess_after_send == AliceGuess::NoBit;
    bool send_certain = params.r == 0 || params.r == 1;
    return [preparation, on_basis, send_no_bit, send_certain](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        std::size_t k = rng.categorical(preparation[bit]);
        std::size_t outcome = rng.categorical(on_basis[k]);
        bool sent = k != 0;
        bool guess_no_bit = !sent || send_no_bit;
        return {guess_no_bit == (outcome == kUsdNoBit), !sent || send_certain};
    };
}

RoundSampler mixed_bob(const ScenarioInput &in) {
    auto mixed = protocols::mixed_protocol(in.classical);
    Povm helstrom = qmath::helstrom_measurement(0.5, mixed.rho0, 0.5, mixed.rho1);
    BornTable table = born_table({mixed.rho0, mixed.rho1}, helstrom);
    return [table](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        std::size_t k = rng.categorical(table[bit]);
        return {static_cast<int>(k) == bit, false};
    };
}

RoundSampler coin_flip_alice(const ScenarioInput &in) {
    double p = in.p_question;
    protocols::CoinFlipParams params(in.y, p);
    bool guess_no_bit_unknown = adversary::alice_guess_rule(p).guess == AliceGuess::NoBit;
    bool unknown_certain = endpoint(p);
    return [params, guess_no_bit_unknown, unknown_certain](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        auto round = protocols::coin_flip_round(params, bit, rng);
        bool no_bit = round.outcome == RoundOutcome::NoBit;
        if (round.sender_branch) {
            // Bob always reads, so Alice knows the outcome from her own coin.
            return {round.transcript.alice_sent.has_value() != no_bit, true};
        }
        return {guess_no_bit_unknown == no_bit, unknown_certain};
    };
}

RoundSampler coin_flip_bob(const ScenarioInput &in) {
    const double receive = 1 - in.p_question;
    const double y = in.y;
    return [receive, y](RoundRng &rng) -> RoundResult {
        int bit = rng.bit();
        bool sender_branch = rng.bernoulli(y);
        // Cheating Bob always reads; outside the sender branch Alice always sends.
        bool sent = !sender_branch || rng.bernoulli(receive);
        int guess = sent ? bit : rng.bit();
        return {guess == bit, sent};
    };
}

std::vector<Scenario> build_registry() {
    namespace an = analytics;
    using In = const ScenarioInput &;
    auto classical_alice_value = [](In in) { return an::classical_alice(in.classical.s, in.classical.r); };
    auto classical_bob_value = [](In in) { return an::classical_bob(in.classical.s); };
    std::vector<Scenario> list;
    list.push_back({"quantum", "honest-nobit", "honest parties; frequency of Bob's NoBit outcome",
                    [](In in) { return in.p_question; }, [](In in) { return honest_usd(in, false); }});
    list.push_back({"quantum", "bob-guess", "honest USD, fair coin on NoBit",
                    [](In in) { return an::bob_guessing(in.p_question); }, [](In in) { return honest_usd(in, true); }});
    list.push_back({"quantum", "bob-helstrom", "minimum-error measurement on the honest states",
                    [](In in) { return an::bob_cheating_quantum(in.p_question); }, bob_helstrom});
    list.push_back({"quantum", "alice-guess", "honest sending, guess the likelier event",
                    [](In in) { return an::alice_guessing(in.p_question); }, alice_guess});
    list.push_back({"quantum", "alice-no-test", "send |1>, guess Bit (no testing)",
                    [](In in) { return an::alice_no_testing(in.p_question); }, alice_no_test});
    list.push_back({"quantum", "alice-monitor", "mixture of |0> and |1> matching Bob's NoBit rate",
                    [](In in) { return an::alice_monitoring(in.p_question); }, alice_monitor});
    list.push_back({"quantum", "alice-entangled", "equal-weight cheat state, two-outcome objective",
                    [](In in) { return an::alice_full_two_state_optimal(in.p_question); }, alice_entangled});
    list.push_back({"quantum", "alice-three-srm", "equal-weight cheat state, three-outcome objective, SRM",
                    [](In in) { return an::alice_three_state_srm(in.p_question, M_SQRT1_2); }, alice_three_srm});
    list.push_back({"classical", "bob-guess", "honest reading, fair coin on NoBit",
                    [](In in) { return an::bob_guessing(in.p_question); }, classical_bob_guess});
    list.push_back({"classical", "alice-cheat", "guess the likelier event given whether she sent",
                    classical_alice_value, classical_alice});
    list.push_back({"classical", "bob-cheat", "always read", classical_bob_value, classical_bob});
    list.push_back({"mixed", "alice-cheat", "qutrit form; guess from the prepared basis state",
                    classical_alice_value, mixed_alice});
    list.push_back({"mixed", "bob-helstrom", "qutrit form; minimum-error measurement", classical_bob_value,
                    mixed_bob});
    list.push_back({"coinflip", "alice-cheat", "certain on the sender branch",
                    [](In in) { return an::coin_flip_cheats(in.y, in.p_question).alice; }, coin_flip_alice});
    list.push_back({"coinflip", "bob-cheat", "always read",
                    [](In in) { return an::coin_flip_cheats(in.y, in.p_question).bob; }, coin_flip_bob});
    return list;
}

}  // namespace

ScenarioInput ScenarioInput::for_p(double p_question) {
    return {p_question, ClassicalParams::canonical(p_question), 0.5};
}

ScenarioInput ScenarioInput::for_classical(const ClassicalParams &params) {
    return {params.p_question(), params, 0.5};
}

const std::vector<Scenario> &scenario_registry() {
    static const std::vector<Scenario> registry = build_registry();
    return registry;
}

const Scenario &find_scenario(const std::string &protocol, const std::string &strategy) {
    for (const auto &scenario : scenario_registry()) {
        if (scenario.protocol == protocol && scenario.strategy == strategy) {
            return scenario;
        }
    }
    throw std::out_of_range("unknown scenario " + protocol + "/" + strategy);
}

}  // namespace rabin_ot::verify
