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

#include "rabin_ot/verify/monte_carlo.h"

#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "rabin_ot/verify/scenarios.h"

namespace rabin_ot::verify {

unsigned default_worker_count() {
    if (const char *env = std::getenv("RABIN_OT_THREADS")) {
        char *end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<unsigned>(value);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ScenarioInput McConfig::input() const {
    ScenarioInput in = classical ? ScenarioInput::for_classical(*classical) : ScenarioInput::for_p(p_question);
    in.y = y;
    return in;
}

namespace {

struct Tally {
    std::uint64_t successes = 0;
    std::uint64_t certain = 0;
};

Tally run_range(const RoundSampler &sampler, std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
    Tally tally;
    for (std::uint64_t k = begin; k < end; k++) {
        protocols::RoundRng rng(seed, k);
        RoundResult r = sampler(rng);
        tally.successes += r.success;
        tally.certain += r.certain;
    }
    return tally;
}

}  // namespace

adversary::CheatReport mc_estimate(const McConfig &cfg) {
    if (cfg.rounds == 0) {
        throw std::invalid_argument("Monte Carlo needs at least one round");
    }
    const Scenario &scenario = find_scenario(cfg.protocol, cfg.strategy);
    RoundSampler sampler = scenario.prepare(cfg.input());

    unsigned workers = cfg.threads > 0 ? cfg.threads : default_worker_count();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.rounds));
    std::vector<Tally> tallies(workers);
    if (workers == 1) {
        tallies[0] = run_range(sampler, cfg.seed, 0, cfg.rounds);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; w++) {
            std::uint64_t begin = cfg.rounds * w / workers;
            std::uint64_t end = cfg.rounds * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { tallies[w] = run_range(sampler, cfg.seed, begin, end); });
        }
        for (auto &t : threads) {
            t.join();
        }
    }
    Tally total;
    for (const auto &t : tallies) {
        total.successes += t.successes;
        total.certain += t.certain;
    }
    auto report = adversary::CheatReport::monte_carlo(total.successes, total.certain, cfg.rounds);
    report.note = scenario.key() + ": " + scenario.description;
    return report;
}

double mc_reference(const McConfig &cfg) {
    return find_scenario(cfg.protocol, cfg.strategy).reference(cfg.input());
}

bool within_ci(const adversary::CheatReport &report, double reference, double widths) {
    double half_width = report.ci99.value_or(0);
    return std::abs(report.success_probability - reference) <= widths * half_width;
}

}  // namespace rabin_ot::verify
