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

#ifndef RABIN_OT_PROTOCOLS_SESSION_H
#define RABIN_OT_PROTOCOLS_SESSION_H

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "rabin_ot/protocols/rounds.h"

namespace rabin_ot::protocols {

/// A single qubit handed to Bob, with the bit Alice would declare if the
/// round is tested (nullopt: she has no answer and the test fails).
struct QubitEmission {
    qmath::PureState state;
    std::optional<int> declaration;
};

/// Bob receives the second factor; if the round is tested Alice measures her
/// factor in the computational basis and declares the result.
struct EntangledEmission {
    qmath::BipartiteState state;
};

using Emission = std::variant<QubitEmission, EntangledEmission>;

/// Alice's behaviour in a session: called once per round with the round
/// index, her honest bit, and that round's generator.
using SenderPolicy = std::function<Emission(std::uint64_t round, int bit, RoundRng &rng)>;

/// Counts accumulated over a session. Merging with += is associative and
/// commutative, so partial sessions can be combined in any order.
struct SessionStats {
    std::uint64_t rounds = 0;
    std::uint64_t tested = 0;
    std::uint64_t test_failures = 0;
    std::uint64_t bit0 = 0;
    std::uint64_t bit1 = 0;
    std::uint64_t no_bit = 0;
    std::optional<std::uint64_t> first_failure_round;

    bool aborted() const {
        return test_failures > 0;
    }
    std::uint64_t untested() const {
        return bit0 + bit1 + no_bit;
    }
    SessionStats &operator+=(const SessionStats &other);
    bool operator==(const SessionStats &other) const = default;
};

/// Exactly `count` of `rounds` indices chosen uniformly without replacement
/// (selection sampling), as a membership mask. Depends only on the seed.
std::vector<bool> choose_tested_rounds(std::uint64_t rounds, std::uint64_t count, std::uint64_t seed);

/// Runs N rounds in which Bob tests round(F N) uniformly chosen rounds by
/// asking for a declaration x and measuring {|psi_x>, |psibar_x>}; the
/// session aborts if any test fails. Untested rounds are measured with the
/// USD POVM. Every tested round is evaluated even after the first failure so
/// that failure rates can be estimated.
SessionStats full_testing_session(const ProtocolParams &params, const FullTestingConfig &config,
                                  const SenderPolicy &sender, std::uint64_t seed);

/// The honest sender: |psi_bit>, declaring bit.
SenderPolicy honest_sender(const ProtocolParams &params);

}  // namespace rabin_ot::protocols

#endif
