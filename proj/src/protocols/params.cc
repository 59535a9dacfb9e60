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

#include "rabin_ot/protocols/params.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rabin_ot::protocols {

namespace {

void require_probability(double value, const char *name) {
    if (!(value >= 0 && value <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

ProtocolParams ProtocolParams::from_theta(double theta) {
    // A few ulps of slack so that acos(cos(2 theta)) / 2 round-trips at pi/4.
    if (!(theta >= 0 && theta <= M_PI_4 + 1e-15)) {
        throw std::invalid_argument("theta must be in [0, pi/4], got " + std::to_string(theta));
    }
    theta = std::min(theta, M_PI_4);
    return ProtocolParams(theta, std::clamp(std::cos(2 * theta), 0.0, 1.0));
}

ProtocolParams ProtocolParams::from_p_question(double p_question) {
    require_probability(p_question, "p_question");
    return ProtocolParams(0.5 * std::acos(p_question), p_question);
}

ClassicalParams::ClassicalParams(double send, double read) : s(send), r(read) {
    require_probability(s, "s");
    require_probability(r, "r");
}

ClassicalParams ClassicalParams::canonical(double p_question) {
    require_probability(p_question, "p_question");
    double read = std::max(1 - p_question, 0.5);
    return ClassicalParams((1 - p_question) / read, read);
}

CoinFlipParams::CoinFlipParams(double y_, double p) : y(y_), p_question(p) {
    require_probability(y, "y");
    require_probability(p_question, "p_question");
}

GeneralizedClassicalParams::GeneralizedClassicalParams(std::vector<ClassicalBranch> b) : branches(std::move(b)) {
    if (branches.empty()) {
        throw std::invalid_argument("generalized classical protocol needs at least one branch");
    }
    double total = 0;
    for (const auto &branch : branches) {
        require_probability(branch.weight, "branch weight");
        require_probability(branch.s, "branch s");
        require_probability(branch.r, "branch r");
        total += branch.weight;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("branch weights must sum to 1, got " + std::to_string(total));
    }
}

FullTestingConfig::FullTestingConfig(double fraction, std::uint64_t n) : fraction_tested(fraction), rounds(n) {
    if (!(fraction_tested > 0 && fraction_tested < 1)) {
        throw std::invalid_argument("tested fraction must be in (0, 1)");
    }
    if (rounds < 1) {
        throw std::invalid_argument("a session needs at least one round");
    }
}

std::uint64_t FullTestingConfig::tested_rounds() const {
    return static_cast<std::uint64_t>(std::llround(fraction_tested * static_cast<double>(rounds)));
}

std::string outcome_name(RoundOutcome outcome) {
    switch (outcome) {
        case RoundOutcome::Bit0:
            return "Bit0";
        case RoundOutcome::Bit1:
            return "Bit1";
        case RoundOutcome::NoBit:
            return "NoBit";
        case RoundOutcome::Abort:
            return "Abort";
    }
    return "?";
}

}  // namespace rabin_ot::protocols
