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

#ifndef RABIN_OT_PROTOCOLS_ROUNDS_H
#define RABIN_OT_PROTOCOLS_ROUNDS_H

#include <utility>

#include "rabin_ot/protocols/params.h"
#include "rabin_ot/protocols/rng.h"
#include "rabin_ot/qmath/measurement.h"

namespace rabin_ot::protocols {

inline const std::string kBit0Label = "Bit0";
inline const std::string kBit1Label = "Bit1";
inline const std::string kNoBitLabel = "NoBit";
inline const std::string kBitLabel = "Bit";

/// |psi_0> = cos t |0> + sin t |1>, |psi_1> = cos t |0> - sin t |1>.
std::pair<qmath::PureState, qmath::PureState> honest_states(double theta);

/// The states orthogonal to the honest ones:
/// |psibar_0> = sin t |0> - cos t |1>, |psibar_1> = sin t |0> + cos t |1>.
std::pair<qmath::PureState, qmath::PureState> orthogonal_states(double theta);

/// Bob's unambiguous-discrimination measurement, elements ordered
/// (Bit0, Bit1, NoBit). Rejects theta = 0, where the protocol is vacuous.
qmath::Povm usd_povm(double theta);

/// Coarse-grained two-outcome version (Bit, NoBit) of usd_povm.
qmath::Povm bit_nobit_povm(double theta);

/// Bob's test of a declared state x: projective pair {|psi_x>, |psibar_x>},
/// labelled ("pass", "fail").
qmath::Povm declaration_test(double theta, int declared_bit);

/// Maps a usd_povm element index to the outcome it reports.
RoundOutcome usd_outcome(std::size_t element_index);

/// The pure-state protocol with its states and measurement precomputed.
class QuantumProtocol {
   public:
    explicit QuantumProtocol(ProtocolParams params);

    const ProtocolParams &params() const {
        return params_;
    }
    const qmath::PureState &state(int bit) const {
        return bit == 0 ? states_.first : states_.second;
    }
    const qmath::Povm &povm() const {
        return povm_;
    }

    /// Bob's USD outcome on an arbitrary received qubit.
    RoundOutcome measure(const qmath::PureState &received, RoundRng &rng) const;
    RoundOutcome measure(const qmath::DensityMatrix &received, RoundRng &rng) const;

    /// One honest round: Alice sends |psi_bit>, Bob measures.
    RoundOutcome round(int bit, RoundRng &rng) const;

   private:
    ProtocolParams params_;
    std::pair<qmath::PureState, qmath::PureState> states_;
    qmath::Povm povm_;
};

/// Convenience wrapper building a QuantumProtocol per call.
RoundOutcome quantum_round(const ProtocolParams &params, int bit, RoundRng &rng);

struct ClassicalRound {
    RoundOutcome outcome;
    Transcript transcript;
};

/// Alice sends with probability s, Bob reads with probability r; Bob gets the
/// bit iff both happen.
ClassicalRound classical_round(const ClassicalParams &params, int bit, RoundRng &rng);

struct CoinFlipRound {
    RoundOutcome outcome;
    Transcript transcript;
    /// True when the coin selected the branch where Alice sends with
    /// probability 1 - p_?; false for the branch where Bob reads with
    /// probability 1 - p_?.
    bool sender_branch;
};

/// One round of the weak-coin-flip protocol; the overall no-bit probability
/// is p_? on either branch.
CoinFlipRound coin_flip_round(const CoinFlipParams &params, int bit, RoundRng &rng);

/// The classical protocol written as a qutrit protocol with mixed states
/// rho_0 = (1-s)|0><0| + s|1><1|, rho_1 = (1-s)|0><0| + s|2><2| and Bob's
/// measurement (Bit0, Bit1, NoBit) = (r|1><1|, r|2><2|, |0><0| + (1-r)(|1><1| + |2><2|)).
struct MixedProtocol {
    qmath::DensityMatrix rho0;
    qmath::DensityMatrix rho1;
    qmath::Povm povm;

    const qmath::DensityMatrix &state(int bit) const {
        return bit == 0 ? rho0 : rho1;
    }
};

MixedProtocol mixed_protocol(const ClassicalParams &params);

/// Honest round of the mixed-state protocol.
RoundOutcome mixed_round(const MixedProtocol &protocol, int bit, RoundRng &rng);

}  // namespace rabin_ot::protocols

#endif
