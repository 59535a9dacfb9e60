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

#include "rabin_ot/adversary/strategies.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rabin_ot/analytics/closed_forms.h"

namespace rabin_ot::adversary {

using protocols::ProtocolParams;
using protocols::RoundOutcome;
using qmath::BipartiteState;
using qmath::DensityMatrix;
using qmath::Matrix;
using qmath::Povm;
using qmath::PureState;

namespace {

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0 && value <= 1)) {
        throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " + std::to_string(value));
    }
}

BipartiteState cheat_state(double theta, double a, double b) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return BipartiteState({a * c, a * s, b * c, -b * s});
}

/// Bob's coarse (NoBit, Bit) elements, built directly so that theta = 0 is
/// allowed.
std::pair<Matrix, Matrix> no_bit_and_bit_elements(double theta) {
    double t = std::tan(theta);
    Matrix no_bit = Matrix::diagonal({std::max(0.0, 1 - t * t), 0.0});
    return {no_bit, Matrix::identity(2) - no_bit};
}

}  // namespace

std::string objective_name(Objective objective) {
    return objective == Objective::TwoOutcome ? "two-outcome" : "three-outcome";
}

AliceStrategy AliceStrategy::honest() {
    return {};
}

AliceStrategy AliceStrategy::guess_only() {
    AliceStrategy s;
    s.kind = Kind::GuessOnly;
    return s;
}

AliceStrategy AliceStrategy::send_one() {
    AliceStrategy s;
    s.kind = Kind::SendOne;
    return s;
}

AliceStrategy AliceStrategy::monitored_mixture(double x) {
    require_unit_interval(x, "mixture weight x");
    AliceStrategy s;
    s.kind = Kind::MonitoredMixture;
    s.x = x;
    return s;
}

AliceStrategy AliceStrategy::entangled_cheat(double a, Objective objective, bool alternate) {
    require_unit_interval(a, "cheat-state coefficient a");
    AliceStrategy s;
    s.kind = Kind::EntangledCheat;
    s.a = a;
    s.objective = objective;
    s.alternate = alternate;
    return s;
}

std::string method_name(Method method) {
    return method == Method::Exact ? "exact" : "monte-carlo";
}

CheatReport CheatReport::exact(double success, double certainty_fraction, std::string note) {
    CheatReport report;
    report.success_probability = success;
    report.certainty_fraction = certainty_fraction;
    report.method = Method::Exact;
    report.note = std::move(note);
    return report;
}

CheatReport CheatReport::monte_carlo(std::uint64_t successes, std::uint64_t certain, std::uint64_t rounds) {
    if (rounds == 0) {
        throw std::invalid_argument("a Monte Carlo report needs at least one round");
    }
    CheatReport report;
    double n = static_cast<double>(rounds);
    double p = static_cast<double>(successes) / n;
    report.success_probability = p;
    report.certainty_events = certain;
    report.rounds = rounds;
    report.certainty_fraction = static_cast<double>(certain) / n;
    report.method = Method::MonteCarlo;
    report.ci99 = 2.576 * std::sqrt(p * (1 - p) / n);
    return report;
}

std::string guess_name(AliceGuess guess) {
    return guess == AliceGuess::Bit ? "Bit" : "NoBit";
}

int bob_guess_rule(RoundOutcome outcome, protocols::RoundRng &rng) {
    switch (outcome) {
        case RoundOutcome::Bit0:
            return 0;
        case RoundOutcome::Bit1:
            return 1;
        default:
            return rng.bit();
    }
}

HelstromCheat bob_helstrom_cheat(double theta) {
    auto [psi0, psi1] = protocols::honest_states(theta);
    DensityMatrix rho0(psi0);
    DensityMatrix rho1(psi1);
    return {qmath::helstrom_measurement(0.5, rho0, 0.5, rho1, protocols::kBit0Label, protocols::kBit1Label),
            qmath::helstrom_success(0.5, rho0, 0.5, rho1)};
}

GuessRule alice_guess_rule(double p) {
    require_unit_interval(p, "p_question");
    return p >= 0.5 ? GuessRule{AliceGuess::NoBit, p} : GuessRule{AliceGuess::Bit, 1 - p};
}

NoTestingCheat alice_no_testing_cheat() {
    return {qmath::ket1(),
            CheatReport::exact(1, 1, "Bob always gets a bit; Alice learns nothing about its value")};
}

MonitoringCheat alice_monitoring_cheat(double p) {
    double theta = ProtocolParams::from_p_question(p).theta();
    double c = std::cos(theta);
    double t = std::tan(theta);
    double x = c * c;
    double no_bit_after_zero = std::max(0.0, 1 - t * t);

    MonitoringCheat result{};
    result.x = x;
    result.after_zero = p >= 1.0 / 3 ? AliceGuess::NoBit : AliceGuess::Bit;
    result.after_one = AliceGuess::Bit;
    result.bob_no_bit = x * no_bit_after_zero;
    double after_zero_success =
        result.after_zero == AliceGuess::NoBit ? no_bit_after_zero : 1 - no_bit_after_zero;
    // After |1> she is certain; after |0> only at the degenerate endpoints.
    bool zero_certain = p == 0 || p == 1;
    result.report = CheatReport::exact(x * after_zero_success + (1 - x), (1 - x) + (zero_certain ? x : 0));
    return result;
}

EntangledCheat alice_entangled_cheat(double p, double a) {
    require_unit_interval(a, "cheat-state coefficient a");
    double theta = ProtocolParams::from_p_question(p).theta();
    double b = std::sqrt(std::max(0.0, 1 - a * a));
    BipartiteState state = cheat_state(theta, a, b);
    auto [no_bit_element, bit_element] = no_bit_and_bit_elements(theta);
    qmath::RemoteState no_bit = qmath::conditional_remote_state(state, no_bit_element);
    qmath::RemoteState bit = qmath::conditional_remote_state(state, bit_element);

    const Matrix zero(2);
    const Matrix id = Matrix::identity(2);
    std::optional<Povm> measurement;
    double success = 1;
    if (!no_bit.defined()) {
        measurement = Povm({zero, id}, {protocols::kNoBitLabel, protocols::kBitLabel});
    } else if (!bit.defined()) {
        measurement = Povm({id, zero}, {protocols::kNoBitLabel, protocols::kBitLabel});
    } else {
        double total = no_bit.probability + bit.probability;
        double q = no_bit.probability / total;
        measurement = qmath::helstrom_measurement(q, *no_bit.state, 1 - q, *bit.state, protocols::kNoBitLabel,
                                                  protocols::kBitLabel);
        success = qmath::helstrom_success(q, *no_bit.state, 1 - q, *bit.state);
    }
    return {state,       *measurement, no_bit.probability, no_bit.state, bit.state, analytics::entangled_u(p, a),
            success};
}

ThreeStateEnsemble three_state_ensemble(double p, double a) {
    require_unit_interval(a, "cheat-state coefficient a");
    double theta = ProtocolParams::from_p_question(p).theta();
    double b = std::sqrt(std::max(0.0, 1 - a * a));
    DensityMatrix placeholder(qmath::ket0());
    if (theta == 0) {
        // Bob never gets a bit; Alice keeps her cheat coefficients.
        return {{1, 0, 0}, {DensityMatrix(PureState({a, b})), placeholder, placeholder}};
    }
    BipartiteState state = cheat_state(theta, a, b);
    Povm usd = protocols::usd_povm(theta);
    // usd_povm is ordered (Bit0, Bit1, NoBit); the ensemble is (NoBit, Bit0, Bit1).
    const std::size_t order[] = {2, 0, 1};
    std::array<double, 3> priors{};
    std::array<DensityMatrix, 3> states{placeholder, placeholder, placeholder};
    for (std::size_t k = 0; k < 3; k++) {
        qmath::RemoteState remote = qmath::conditional_remote_state(state, usd.element(order[k]));
        priors[k] = remote.probability;
        if (remote.defined()) {
            states[k] = *remote.state;
        }
    }
    return {priors, states};
}

ThreeStateCheat alice_three_state_cheat(double p, double a) {
    ThreeStateEnsemble ensemble = three_state_ensemble(p, a);
    double numeric = qmath::srm_success(ensemble.priors, ensemble.states);
    std::optional<double> mirror;
    if (std::abs(a - M_SQRT1_2) < 1e-12) {
        mirror = analytics::alice_three_state_mirror(p);
    }
    return {ensemble, analytics::alice_three_state_srm(p, a), numeric, mirror};
}

ClassicalCheats classical_cheats(const protocols::ClassicalParams &params) {
    ClassicalCheats result{};
    result.guess_after_send = params.r > 0.5 ? AliceGuess::Bit : AliceGuess::NoBit;
    result.guess_after_no_send = AliceGuess::NoBit;
    result.bob_always_reads = true;
    double after_send = result.guess_after_send == AliceGuess::Bit ? params.r : 1 - params.r;
    result.alice = (1 - params.s) + params.s * after_send;
    result.bob = params.s + (1 - params.s) / 2;
    return result;
}

ClassicalCheats mixed_protocol_cheats(const protocols::ClassicalParams &params) {
    protocols::MixedProtocol mixed = protocols::mixed_protocol(params);
    const Matrix &no_bit = mixed.povm.element(mixed.povm.index_of(protocols::kNoBitLabel));
    ClassicalCheats result{};
    result.guess_after_no_send = AliceGuess::NoBit;
    result.bob_always_reads = true;
    // rho_x is diagonal: Alice knows which basis state she prepared.
    double alice = 0;
    for (std::size_t k = 0; k < 3; k++) {
        double weight = mixed.rho0(k, k).real();
        double q = no_bit(k, k).real();
        alice += weight * std::max(q, 1 - q);
    }
    double bit_after_send = 1 - no_bit(1, 1).real();
    result.guess_after_send = bit_after_send > 0.5 ? AliceGuess::Bit : AliceGuess::NoBit;
    result.alice = alice;
    result.bob = qmath::helstrom_success(0.5, mixed.rho0, 0.5, mixed.rho1);
    return result;
}

protocols::SenderPolicy sender_policy(const AliceStrategy &strategy, const ProtocolParams &params) {
    using protocols::Emission;
    using protocols::EntangledEmission;
    using protocols::QubitEmission;
    using protocols::RoundRng;
    switch (strategy.kind) {
        case AliceStrategy::Kind::Honest:
        case AliceStrategy::Kind::GuessOnly:
            return protocols::honest_sender(params);
        case AliceStrategy::Kind::SendOne:
            return [](std::uint64_t, int bit, RoundRng &) -> Emission {
                return QubitEmission{qmath::ket1(), bit};
            };
        case AliceStrategy::Kind::MonitoredMixture: {
            double x = strategy.x;
            return [x](std::uint64_t, int bit, RoundRng &rng) -> Emission {
                return QubitEmission{rng.bernoulli(x) ? qmath::ket0() : qmath::ket1(), bit};
            };
        }
        case AliceStrategy::Kind::EntangledCheat: {
            double a = strategy.a;
            double b = std::sqrt(std::max(0.0, 1 - a * a));
            BipartiteState even = cheat_state(params.theta(), a, b);
            BipartiteState odd = strategy.alternate ? cheat_state(params.theta(), b, a) : even;
            return [even, odd](std::uint64_t round, int, RoundRng &) -> Emission {
                return EntangledEmission{round % 2 == 0 ? even : odd};
            };
        }
    }
    throw std::logic_error("unknown Alice strategy kind");
}

}  // namespace rabin_ot::adversary
