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

#ifndef RABIN_OT_VERIFY_SCENARIOS_H
#define RABIN_OT_VERIFY_SCENARIOS_H

#include <functional>
#include <string>
#include <vector>

#include "rabin_ot/protocols/params.h"
#include "rabin_ot/protocols/rng.h"

namespace rabin_ot::verify {

/// One simulated round from the cheater's point of view.
struct RoundResult {
    bool success;
    /// The cheater's posterior for her guess was exactly 1.
    bool certain;
};

/// Draws one round. Must use only the given generator, so that a round is a
/// pure function of (seed, round index).
using RoundSampler = std::function<RoundResult(protocols::RoundRng &rng)>;

/// Protocol parameters a scenario runs at. Quantum scenarios read only
/// p_question; classical and mixed read `classical`; coinflip reads
/// (y, p_question).
struct ScenarioInput {
    double p_question;
    protocols::ClassicalParams classical;
    double y;

    /// Canonical classical parameters for p_? and y = 1/2.
    static ScenarioInput for_p(double p_question);
    /// p_? = 1 - s r.
    static ScenarioInput for_classical(const protocols::ClassicalParams &params);
};

/// A (protocol, strategy) pair: a round-by-round physical simulation (states,
/// Born-rule sampling, guess rules) together with the closed form it should
/// reproduce.
struct Scenario {
    std::string protocol;
    std::string strategy;
    std::string description;
    std::function<double(const ScenarioInput &input)> reference;
    /// Precomputes the Born tables for this input and returns the sampler.
    std::function<RoundSampler(const ScenarioInput &input)> prepare;

    std::string key() const {
        return protocol + "/" + strategy;
    }
};

/// All registered pairs. Protocols: quantum, classical, mixed, coinflip.
const std::vector<Scenario> &scenario_registry();

/// Throws std::out_of_range for an unknown pair.
const Scenario &find_scenario(const std::string &protocol, const std::string &strategy);

}  // namespace rabin_ot::verify

#endif
