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

#ifndef RABIN_OT_PROTOCOLS_PARAMS_H
#define RABIN_OT_PROTOCOLS_PARAMS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rabin_ot::protocols {

/// The pure-state protocol's single knob: the half-angle theta between the
/// two honest states, with p_? = cos(2 theta) the honest no-bit probability.
class ProtocolParams {
   public:
    /// theta in radians, 0 <= theta <= pi/4.
    static ProtocolParams from_theta(double theta);
    /// p_? in [0, 1].
    static ProtocolParams from_p_question(double p_question);

    double theta() const {
        return theta_;
    }
    double p_question() const {
        return p_question_;
    }

   private:
    ProtocolParams(double theta, double p_question) : theta_(theta), p_question_(p_question) {
    }

    double theta_;
    double p_question_;
};

/// Classical protocol: Alice sends with probability s, Bob reads with
/// probability r.
struct ClassicalParams {
    ClassicalParams(double send, double read);

    /// The lowest-cheating parametrization with read probability >= 1/2 for a
    /// given p_?: r = max(1 - p_?, 1/2), s = (1 - p_?) / r.
    static ClassicalParams canonical(double p_question);

    double p_question() const {
        return 1 - s * r;
    }

    double s;
    double r;
};

/// Weak-coin-flip protocol: with probability y run the send-with-probability
/// protocol, otherwise the read-with-probability protocol.
struct CoinFlipParams {
    CoinFlipParams(double y, double p_question);

    double y;
    double p_question;
};

struct ClassicalBranch {
    double weight;
    double s;
    double r;
};

/// Probabilistic mixture of classical protocols.
struct GeneralizedClassicalParams {
    explicit GeneralizedClassicalParams(std::vector<ClassicalBranch> branches);

    std::vector<ClassicalBranch> branches;
};

struct FullTestingConfig {
    FullTestingConfig(double fraction_tested = 0.1, std::uint64_t rounds = 100000);

    /// round(F N), the number of rounds Bob tests.
    std::uint64_t tested_rounds() const;

    double fraction_tested;
    std::uint64_t rounds;
};

enum class RoundOutcome { Bit0, Bit1, NoBit, Abort };

std::string outcome_name(RoundOutcome outcome);

inline bool is_bit(RoundOutcome outcome) {
    return outcome == RoundOutcome::Bit0 || outcome == RoundOutcome::Bit1;
}

inline RoundOutcome bit_outcome(int bit) {
    return bit == 0 ? RoundOutcome::Bit0 : RoundOutcome::Bit1;
}

/// What happened on the wire in one round. `declaration` is present exactly
/// when the round was tested.
struct Transcript {
    std::optional<int> alice_sent;
    bool bob_read = false;
    bool tested = false;
    std::optional<int> declaration;
};

}  // namespace rabin_ot::protocols

#endif
