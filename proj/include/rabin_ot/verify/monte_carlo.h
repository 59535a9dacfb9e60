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

#ifndef RABIN_OT_VERIFY_MONTE_CARLO_H
#define RABIN_OT_VERIFY_MONTE_CARLO_H

#include <cstdint>
#include <optional>
#include <string>

#include "rabin_ot/adversary/strategies.h"
#include "rabin_ot/verify/scenarios.h"

namespace rabin_ot::verify {

struct McConfig {
    std::string protocol;
    std::string strategy;
    double p_question = 0.5;
    std::uint64_t rounds = 1000000;
    std::uint64_t seed = 1;
    /// 0: take RABIN_OT_THREADS, else the hardware concurrency.
    unsigned threads = 0;
    /// Explicit (s, r) for classical and mixed scenarios; overrides
    /// p_question, which becomes 1 - s r.
    std::optional<protocols::ClassicalParams> classical;
    /// Sender-branch probability of the coin-flip protocol.
    double y = 0.5;

    ScenarioInput input() const;
};

/// RABIN_OT_THREADS if set to a positive integer, else hardware concurrency
/// (at least 1).
unsigned default_worker_count();

/// Runs cfg.rounds independent rounds of the scenario. Round k draws from
/// RoundRng(seed, k) only and the per-worker counts are integers, so the
/// report does not depend on the thread count.
adversary::CheatReport mc_estimate(const McConfig &cfg);

/// Closed-form value the scenario should reproduce at cfg.p_question.
double mc_reference(const McConfig &cfg);

/// |estimate - reference| <= widths * ci99.
bool within_ci(const adversary::CheatReport &report, double reference, double widths = 4);

}  // namespace rabin_ot::verify

#endif
