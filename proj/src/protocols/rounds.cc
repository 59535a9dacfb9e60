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

#include "rabin_ot/protocols/rounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rabin_ot::protocols {

using qmath::Matrix;
using qmath::Povm;
using qmath::PureState;

namespace {

void check_theta(double theta) {
    // from_theta validates the range.
    (void)ProtocolParams::from_theta(theta);
}

void check_bit(int bit) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
}

}  // namespace

std::pair<PureState, PureState> honest_states(double theta) {
    check_theta(theta);
    double c = std::cos(theta);
    double s = std::sin(theta);
    return {PureState({c, s}), PureState({c, -s})};
}

std::pair<PureState, PureState> orthogonal_states(double theta) {
    check_theta(theta);
    double c = std::cos(theta);
    double s = std::sin(theta);
    return {PureState({s, -c}), PureState({s, c})};
}

Povm usd_povm(double theta) {
    check_theta(theta);
    if (theta == 0) {
        throw std::invalid_argument("usd_povm: theta = 0 gives identical states, the protocol is degenerate");
    }
    double c = std::cos(theta);
    double t = std::tan(theta);
    auto [bar0, bar1] = orthogonal_states(theta);
    double scale = 1 / (2 * c * c);
    Matrix inconclusive = Matrix::diagonal({std::max(0.0, 1 - t * t), 0.0});
    return Povm({scale * bar1.projector(), scale * bar0.projector(), inconclusive},
                {kBit0Label, kBit1Label, kNoBitLabel});
}

Povm bit_nobit_povm(double theta) {
    Povm usd = usd_povm(theta);
    return Povm({usd.element(0) + usd.element(1), usd.element(2)}, {kBitLabel, kNoBitLabel});
}

Povm declaration_test(double theta, int declared_bit) {
    check_bit(declared_bit);
    auto honest = honest_states(theta);
    auto bars = orthogonal_states(theta);
    const PureState &pass = declared_bit == 0 ? honest.first : honest.second;
    const PureState &fail = declared_bit == 0 ? bars.first : bars.second;
    return Povm({pass.projector(), fail.projector()}, {"pass", "fail"});
}

RoundOutcome usd_outcome(std::size_t element_index) {
    switch (element_index) {
        case 0:
            return RoundOutcome::Bit0;
        case 1:
            return RoundOutcome::Bit1;
        case 2:
            return RoundOutcome::NoBit;
        default:
            throw std::out_of_range("usd_outcome: element index out of range");
    }
}

QuantumProtocol::QuantumProtocol(ProtocolParams params)
    : params_(params), states_(honest_states(params.theta())), povm_(usd_povm(params.theta())) {
}

RoundOutcome QuantumProtocol::measure(const PureState &received, RoundRng &rng) const {
    auto probabilities = qmath::born_probabilities(received, povm_);
    return usd_outcome(rng.categorical(probabilities));
}

RoundOutcome QuantumProtocol::measure(const qmath::DensityMatrix &received, RoundRng &rng) const {
    auto probabilities = qmath::born_probabilities(received, povm_);
    return usd_outcome(rng.categorical(probabilities));
}

RoundOutcome QuantumProtocol::round(int bit, RoundRng &rng) const {
    check_bit(bit);
    return measure(state(bit), rng);
}

RoundOutcome quantum_round(const ProtocolParams &params, int bit, RoundRng &rng) {
    return QuantumProtocol(params).round(bit, rng);
}

ClassicalRound classical_round(const ClassicalParams &params, int bit, RoundRng &rng) {
    check_bit(bit);
    ClassicalRound result{RoundOutcome::NoBit, {}};
    bool sent = rng.bernoulli(params.s);
    result.transcript.bob_read = rng.bernoulli(params.r);
    if (sent) {
        result.transcript.alice_sent = bit;
    }
    if (sent && result.transcript.bob_read) {
        result.outcome = bit_outcome(bit);
    }
    return result;
}

CoinFlipRound coin_flip_round(const CoinFlipParams &params, int bit, RoundRng &rng) {
    check_bit(bit);
    const double receive = 1 - params.p_question;
    CoinFlipRound result{RoundOutcome::NoBit, {}, rng.bernoulli(params.y)};
    if (result.sender_branch) {
        // Alice sends with probability 1 - p_? and keeps no record; Bob always reads.
        result.transcript.bob_read = true;
        if (rng.bernoulli(receive)) {
            result.transcript.alice_sent = bit;
        }
    } else {
        // Alice always sends; Bob reads with probability 1 - p_?.
        result.transcript.alice_sent = bit;
        result.transcript.bob_read = rng.bernoulli(receive);
    }
    if (result.transcript.alice_sent && result.transcript.bob_read) {
        result.outcome = bit_outcome(bit);
    }
    return result;
}

MixedProtocol mixed_protocol(const ClassicalParams &params) {
    const double s = params.s;
    const double r = params.r;
    Matrix rho0 = Matrix::diagonal({1 - s, s, 0.0});
    Matrix rho1 = Matrix::diagonal({1 - s, 0.0, s});
    Povm povm({Matrix::diagonal({0.0, r, 0.0}), Matrix::diagonal({0.0, 0.0, r}), Matrix::diagonal({1.0, 1 - r, 1 - r})},
              {kBit0Label, kBit1Label, kNoBitLabel});
    return {qmath::DensityMatrix(rho0), qmath::DensityMatrix(rho1), std::move(povm)};
}

RoundOutcome mixed_round(const MixedProtocol &protocol, int bit, RoundRng &rng) {
    check_bit(bit);
    auto probabilities = qmath::born_probabilities(protocol.state(bit), protocol.povm);
    return usd_outcome(rng.categorical(probabilities));
}

}  // namespace rabin_ot::protocols
