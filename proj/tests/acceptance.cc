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

// Acceptance gate: one PASS/FAIL line per criterion, each including its
// runtime limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rabin_ot/adversary/strategies.h"
#include "rabin_ot/analytics/closed_forms.h"
#include "rabin_ot/cli/app.h"
#include "rabin_ot/verify/battery.h"
#include "rabin_ot/verify/monte_carlo.h"
#include "rabin_ot/verify/oracles.h"

namespace an = rabin_ot::analytics;
namespace vf = rabin_ot::verify;
using rabin_ot::adversary::Objective;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::string num(double x, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

bool run_criterion(int index, const std::string &name, double limit_seconds, const std::function<Outcome()> &body) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
        outcome = body();
    } catch (const std::exception &e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = outcome.ok && seconds < limit_seconds;
    std::printf("criterion %d %s: %s (%s) [%.2f s, limit %g s]\n", index, name.c_str(), ok ? "PASS" : "FAIL",
                outcome.detail.c_str(), seconds, limit_seconds);
    std::fflush(stdout);
    return ok;
}

Outcome spot_values() {
    double third = 1.0 / 3;
    double errors[] = {
        std::abs(an::bob_cheating_quantum(0.5) - (2 + std::sqrt(3.0)) / 4),
        std::abs(an::alice_monitoring(0.5) - 0.75),
        std::abs(an::alice_three_state_mirror(0.4) - 16.0 / 25),
        std::abs(an::alice_guessing(third) - 2.0 / 3),
        std::abs(an::alice_monitoring(third) - 2.0 / 3),
        std::abs(an::alice_full_two_state_optimal(third) - 2.0 / 3),
        std::abs(an::alice_full_two_state(third, 0.3) - 2.0 / 3),
        std::abs(an::alice_three_state_mirror(third) - 2.0 / 3),
    };
    double worst = 0;
    for (double e : errors) {
        worst = std::max(worst, e);
    }
    return {worst <= 1e-12, "max error " + num(worst) + " over B(1/2), A_monitor(1/2), A_3(2/5) and the testing "
                            "regimes at p = 1/3; tolerance 1e-12"};
}

Outcome crossover() {
    double x = an::advantage_crossover();
    bool ok = std::abs(x - 5.0 / 13) <= 1e-9;
    std::string signs;
    for (double p : {0.1, 0.25, 0.35}) {
        bool dominates = an::advantage_margin(p).margin() > 0;
        ok = ok && dominates;
        signs += " " + num(p, 2) + (dominates ? ":quantum" : ":classical");
    }
    for (double p : {0.45, 0.6, 0.9}) {
        bool dominated = an::advantage_margin(p).margin() < 0;
        ok = ok && dominated;
        signs += " " + num(p, 2) + (dominated ? ":classical" : ":quantum");
    }
    return {ok, "root " + num(x, 12) + ", |root - 5/13| = " + num(std::abs(x - 5.0 / 13)) + "; lower Bob-cheat at" +
                    signs};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(20260101);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0, 1);
    auto random_qubit = [&] {
        std::vector<rabin_ot::qmath::DensityMatrix> parts;
        for (int j = 0; j < 2; j++) {
            parts.emplace_back(
                rabin_ot::qmath::PureState::normalized({{normal(rng), normal(rng)}, {normal(rng), normal(rng)}}));
        }
        double w = unit(rng);
        const double weights[] = {w, 1 - w};
        return rabin_ot::qmath::DensityMatrix::mixture(weights, parts);
    };
    double worst_pair = 0;
    for (int trial = 0; trial < 50; trial++) {
        auto r0 = random_qubit();
        auto r1 = random_qubit();
        double p0 = unit(rng);
        double exact = rabin_ot::qmath::helstrom_success(p0, r0, 1 - p0, r1);
        worst_pair = std::max(worst_pair, std::abs(vf::oracle_qubit_minerr(r0, r1, p0, 1 - p0).best_value - exact));
    }
    double worst_mirror = 0;
    for (double p : {0.35, 0.4, 0.5, 0.75}) {
        auto ensemble = rabin_ot::adversary::three_state_ensemble(p, M_SQRT1_2);
        double found = vf::oracle_three_outcome(ensemble.states, ensemble.priors).best_value;
        worst_mirror = std::max(worst_mirror, std::abs(found - an::alice_three_state_mirror(p)));
    }
    return {worst_pair <= 1e-6 && worst_mirror <= 1e-4,
            "50 random pairs: max |grid - Helstrom| = " + num(worst_pair) +
                " (tol 1e-6); POVM search at p = 0.35, 0.4, 0.5, 0.75: max |search - mirror| = " + num(worst_mirror) +
                " (tol 1e-4)"};
}

Outcome srm_ordering() {
    int above = 0;
    std::vector<std::string> equal_at;
    bool equality_ok = true;
    for (int k = 0; k <= 100; k++) {
        double p = k / 100.0;
        double srm = an::alice_three_state_srm(p, M_SQRT1_2);
        double mirror = an::alice_three_state_mirror(p);
        above += srm > mirror + 1e-12;
        if (std::abs(mirror - srm) <= 1e-6) {
            equal_at.push_back(num(p, 2));
            // Permitted only where both sit at the guessing value.
            double guess = an::alice_guessing(p);
            equality_ok = equality_ok && std::abs(srm - guess) <= 1e-12 && std::abs(mirror - guess) <= 1e-12;
        }
    }
    std::string where;
    for (const auto &p : equal_at) {
        where += (where.empty() ? "" : ", ") + p;
    }
    return {above == 0 && equality_ok, std::to_string(above) + " grid points with SRM > mirror; equal within 1e-6 at p = " +
                                           where + " (both at the guessing value 1)"};
}

Outcome monte_carlo() {
    const auto &registry = vf::scenario_registry();
    auto points = vf::mc_check_points();
    int failures = 0;
    double worst = 0;
    std::string failed;
    for (const auto &scenario : registry) {
        for (double p : points) {
            vf::McConfig cfg;
            cfg.protocol = scenario.protocol;
            cfg.strategy = scenario.strategy;
            cfg.p_question = p;
            cfg.rounds = 1000000;
            cfg.seed = 1;
            auto report = vf::mc_estimate(cfg);
            double reference = vf::mc_reference(cfg);
            if (!vf::within_ci(report, reference)) {
                failures++;
                failed += " " + scenario.key() + "@" + num(p);
            }
            if (*report.ci99 > 0) {
                worst = std::max(worst, std::abs(report.success_probability - reference) / *report.ci99);
            }
        }
    }
    std::uint64_t runs = 0;
    std::uint64_t excursions = 0;
    for (const auto &scenario : registry) {
        for (double p : points) {
            for (std::uint64_t seed = 1; seed <= 100; seed++) {
                vf::McConfig cfg;
                cfg.protocol = scenario.protocol;
                cfg.strategy = scenario.strategy;
                cfg.p_question = p;
                cfg.rounds = 100000;
                cfg.seed = seed;
                runs++;
                excursions += !vf::within_ci(vf::mc_estimate(cfg), vf::mc_reference(cfg));
            }
        }
    }
    double fraction = static_cast<double>(excursions) / static_cast<double>(runs);
    std::string detail = std::to_string(registry.size() * points.size()) +
                         " runs of 1e6 rounds (seed 1), " + std::to_string(failures) +
                         " outside 4 CI-widths, worst " + num(worst) + " widths" + failed + "; 100-seed battery: " +
                         std::to_string(excursions) + "/" + std::to_string(runs) +
                         " runs of 1e5 rounds outside 4 CI-widths (" + num(100 * fraction) + "%, limit 1%)";
    return {failures == 0 && fraction < 0.01, detail};
}

Outcome cheat_state() {
    double worst = 0;
    for (double p : {0.4, 0.5, 0.75}) {
        auto scan = vf::oracle_cheat_state(p, Objective::TwoOutcome, 1e-3);
        worst = std::max(worst, std::abs(scan.argmax_a - M_SQRT1_2));
    }
    auto low = vf::oracle_cheat_state(0.2, Objective::TwoOutcome, 1e-3);
    return {worst < 1e-3 && low.spread <= 1e-9,
            "max |argmax a - 1/sqrt(2)| = " + num(worst) + " at p = 0.4, 0.5, 0.75 (tol 1e-3); p = 0.2 spread " +
                num(low.spread) + " (tol 1e-9), value " + num(low.result.best_value, 12)};
}

Outcome classical_identities() {
    double coin = 0;
    double slack = -1;
    for (int k = 0; k <= 100; k++) {
        double p = k / 100.0;
        for (int j = 0; j <= 100; j++) {
            coin = std::max(coin, an::coin_flip_cheats(j / 100.0, p).residual(p));
        }
        if (p >= 0.5) {
            slack = std::max(slack, an::compare_with_coin_flip(p).slack);
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0, 1);
    std::uniform_int_distribution<int> count(1, 6);
    double generalized = 0;
    for (int trial = 0; trial < 10000; trial++) {
        std::vector<rabin_ot::protocols::ClassicalBranch> branches(count(rng));
        double total = 0;
        for (auto &b : branches) {
            b.weight = unit(rng) + 1e-3;
            total += b.weight;
            b.s = unit(rng);
            b.r = 0.5 + 0.5 * unit(rng);
        }
        for (auto &b : branches) {
            b.weight /= total;
        }
        generalized = std::max(
            generalized,
            an::generalized_classical(rabin_ot::protocols::GeneralizedClassicalParams(branches)).tradeoff_residual);
    }
    return {coin < 1e-12 && slack <= 0 && generalized < 1e-12,
            "coin-flip residual " + num(coin) + ", max slack for p >= 1/2 " + num(slack) +
                ", generalized residual over 1e4 mixtures " + num(generalized)};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            fields.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            fields.push_back("");
        }
        rows.push_back(fields);
    }
    return rows;
}

Outcome figure_data() {
    std::ostringstream out;
    std::ostringstream err;
    int code = rabin_ot::cli::run_cli({"curves", "--p-min", "0", "--p-max", "1", "--step", "0.01"}, out, err);
    auto rows = parse_csv(out.str());
    if (code != 0 || rows.size() != 102) {
        return {false, "curves exited " + std::to_string(code) + " with " + std::to_string(rows.size()) + " lines"};
    }
    std::map<std::string, std::size_t> col;
    for (std::size_t k = 0; k < rows[0].size(); k++) {
        col[rows[0][k]] = k;
    }
    int violations = 0;
    double floor_error = 0;
    for (std::size_t i = 1; i < rows.size(); i++) {
        auto v = [&](const char *name) { return std::stod(rows[i][col.at(name)]); };
        double p = v("p_question");
        violations += v("b_cheat") < v("b_guess");
        violations += v("a_full_3") > v("a_monitor");
        if (p <= 1.0 / 3) {
            for (const char *name : {"a_monitor", "a_full_2", "a_full_3"}) {
                floor_error = std::max(floor_error, std::abs(v(name) - v("a_guess")));
            }
        }
    }
    std::ostringstream trade;
    code = rabin_ot::cli::run_cli({"tradeoff", "--p", "0.5"}, trade, err);
    auto points = parse_csv(trade.str());
    auto has = [&](const std::string &kind, double a, double b, double tol) {
        for (std::size_t i = 1; i < points.size(); i++) {
            if ((kind.empty() || points[i][0] == kind) && std::abs(std::stod(points[i][4]) - a) <= tol &&
                std::abs(std::stod(points[i][5]) - b) <= tol) {
                return true;
            }
        }
        return false;
    };
    int found = has("classical", 0.5, 1, 1e-12) + has("", 0.75, 0.875, 1e-12) + has("quantum", 0.75, 0.93301, 1e-5) +
                has("stochastic_switching", 0.933, 0.9691, 1e-12);
    return {code == 0 && violations == 0 && floor_error <= 1e-12 && found == 4,
            "101 curve rows, " + std::to_string(violations) +
                " ordering violations, testing-regime curves vs guessing for p <= 1/3 max error " + num(floor_error) +
                "; tradeoff reference points found " + std::to_string(found) + "/4"};
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "closed-form spot values", 1, spot_values);
    ok &= run_criterion(2, "quantum-advantage crossover", 1, crossover);
    ok &= run_criterion(3, "oracle equivalence", 60, oracle_equivalence);
    ok &= run_criterion(4, "SRM ordering", 5, srm_ordering);
    ok &= run_criterion(5, "Monte Carlo agreement", 300, monte_carlo);
    ok &= run_criterion(6, "cheat-state optimum", 10, cheat_state);
    ok &= run_criterion(7, "classical and coin-flip identities", 5, classical_identities);
    ok &= run_criterion(8, "figure data", 5, figure_data);
    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
