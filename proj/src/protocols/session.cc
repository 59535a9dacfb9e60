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

#include "rabin_ot/protocols/session.h"

#include <algorithm>
#include <stdexcept>

namespace rabin_ot::protocols {

using qmath::DensityMatrix;
using qmath::Matrix;
using qmath::Povm;

SessionStats &SessionStats::operator+=(const SessionStats &other) {
    rounds += other.rounds;
    tested += other.tested;
    test_failures += other.test_failures;
    bit0 += other.bit0;
    bit1 += other.bit1;
    no_bit += other.no_bit;
    if (other.first_failure_round &&
        (!first_failure_round || *other.first_failure_round < *first_failure_round)) {
        first_failure_round = other.first_failure_round;
    }
    return *this;
}

std::vector<bool> choose_tested_rounds(std::uint64_t rounds, std::uint64_t count, std::uint64_t seed) {
    if (count > rounds) {
        throw std::invalid_argument("cannot test more rounds than the session has");
    }
    std::vector<bool> mask(rounds, false);
    RoundRng rng(seed, 0, RoundRng::kSelectionStream);
    std::uint64_t chosen = 0;
    for (std::uint64_t k = 0; k < rounds && chosen < count; k++) {
        double remaining = static_cast<double>(rounds - k);
        double needed = static_cast<double>(count - chosen);
        if (remaining * rng.uniform() < needed) {
            mask[k] = true;
            chosen++;
        }
    }
    return mask;
}

namespace {

struct ReceivedQubit {
    DensityMatrix state;
    std::optional<int> declaration;
};

/// Bob's qubit for a tested round, with the declaration Alice makes.
ReceivedQubit tested_qubit(const Emission &emission, RoundRng &rng) {
    if (const auto *single = std::get_if<QubitEmission>(&emission)) {
        return {DensityMatrix(single->state), single->declaration};
    }
    // Alice measures her half in {|0>, |1>}; conditional_remote_state on the
    // swapped state gives Bob's half given her outcome.
    const auto &entangled = std::get<EntangledEmission>(emission).state.swapped();
    auto zero = qmath::conditional_remote_state(entangled, qmath::ket0().projector());
    auto one = qmath::conditional_remote_state(entangled, qmath::ket1().projector());
    const double weights[] = {zero.probability, one.probability};
    int outcome = static_cast<int>(rng.categorical(weights));
    return {outcome == 0 ? *zero.state : *one.state, outcome};
}

DensityMatrix untested_qubit(const Emission &emission) {
    if (const auto *single = std::get_if<QubitEmission>(&emission)) {
        return DensityMatrix(single->state);
    }
    return std::get<EntangledEmission>(emission).state.bob_reduced();
}

}  // namespace

SessionStats full_testing_session(const ProtocolParams &params, const FullTestingConfig &config,
                                  const SenderPolicy &sender, std::uint64_t seed) {
    QuantumProtocol protocol(params);
    const Povm tests[] = {declaration_test(params.theta(), 0), declaration_test(params.theta(), 1)};
    std::vector<bool> tested = choose_tested_rounds(config.rounds, config.tested_rounds(), seed);

    SessionStats stats;
    stats.rounds = config.rounds;
    for (std::uint64_t k = 0; k < config.rounds; k++) {
        RoundRng rng(seed, k);
        int bit = rng.bit();
        Emission emission = sender(k, bit, rng);
        if (tested[k]) {
            stats.tested++;
            ReceivedQubit received = tested_qubit(emission, rng);
            bool passed = false;
            if (received.declaration == 0 || received.declaration == 1) {
                auto probabilities = qmath::born_probabilities(received.state, tests[*received.declaration]);
                passed = rng.categorical(probabilities) == 0;
            }
            if (!passed) {
                stats.test_failures++;
                if (!stats.first_failure_round) {
                    stats.first_failure_round = k;
                }
            }
            continue;
        }
        switch (protocol.measure(untested_qubit(emission), rng)) {
            case RoundOutcome::Bit0:
                stats.bit0++;
                break;
            case RoundOutcome::Bit1:
                stats.bit1++;
                break;
            default:
                stats.no_bit++;
                break;
        }
    }
    return stats;
}

SenderPolicy honest_sender(const ProtocolParams &params) {
    auto states = honest_states(params.theta());
    return [states](std::uint64_t, int bit, RoundRng &) -> Emission {
        return QubitEmission{bit == 0 ? states.first : states.second, bit};
    };
}

}  // namespace rabin_ot::protocols
