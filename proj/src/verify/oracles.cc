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

#include "rabin_ot/verify/oracles.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rabin_ot/protocols/rounds.h"

namespace rabin_ot::verify {

using qmath::Complex;
using qmath::DensityMatrix;
using qmath::Matrix;

namespace {

/// max over unit |n> of <n|H|n>, with |n> = (cos(a/2), e^{ib} sin(a/2)).
struct BlochMax {
    double value;
    double polar;
    double azimuth;
    std::uint64_t evaluations;
};

class BlochQuadratic {
   public:
    explicit BlochQuadratic(const Matrix &h)
        : h00_(h(0, 0).real()), h11_(h(1, 1).real()), re01_(h(0, 1).real()), im01_(h(0, 1).imag()) {
        if (h.dim() != 2) {
            throw std::invalid_argument("Bloch-sphere search needs a qubit operator");
        }
    }

    double operator()(double polar, double azimuth) const {
        double c = std::cos(polar / 2);
        double s = std::sin(polar / 2);
        return value(c, s, std::cos(azimuth), std::sin(azimuth));
    }

    double value(double c, double s, double cos_az, double sin_az) const {
        return h00_ * c * c + h11_ * s * s + 2 * c * s * (re01_ * cos_az - im01_ * sin_az);
    }

   private:
    double h00_;
    double h11_;
    double re01_;
    double im01_;
};

BlochMax maximize_on_sphere(const Matrix &h, const BlochGrid &grid) {
    if (grid.polar_steps < 1 || grid.azimuth_steps < 1) {
        throw std::invalid_argument("Bloch grid needs at least one step per angle");
    }
    BlochQuadratic f(h);
    std::vector<double> cos_az(grid.azimuth_steps);
    std::vector<double> sin_az(grid.azimuth_steps);
    for (std::size_t j = 0; j < grid.azimuth_steps; j++) {
        double b = 2 * M_PI * static_cast<double>(j) / static_cast<double>(grid.azimuth_steps);
        cos_az[j] = std::cos(b);
        sin_az[j] = std::sin(b);
    }
    BlochMax best{-INFINITY, 0, 0, 0};
    for (std::size_t i = 0; i <= grid.polar_steps; i++) {
        double a = M_PI * static_cast<double>(i) / static_cast<double>(grid.polar_steps);
        double c = std::cos(a / 2);
        double s = std::sin(a / 2);
        for (std::size_t j = 0; j < grid.azimuth_steps; j++) {
            double v = f.value(c, s, cos_az[j], sin_az[j]);
            best.evaluations++;
            if (v > best.value) {
                best.value = v;
                best.polar = a;
                best.azimuth = 2 * M_PI * static_cast<double>(j) / static_cast<double>(grid.azimuth_steps);
            }
        }
    }

    double step_polar = M_PI / static_cast<double>(grid.polar_steps);
    double step_azimuth = 2 * M_PI / static_cast<double>(grid.azimuth_steps);
    for (int level = 0; level < grid.refinements; level++) {
        for (int pass = 0; pass < 1000; pass++) {
            bool improved = false;
            const double moves[4][2] = {
                {step_polar, 0}, {-step_polar, 0}, {0, step_azimuth}, {0, -step_azimuth}};
            for (const auto &m : moves) {
                double a = std::clamp(best.polar + m[0], 0.0, M_PI);
                double b = best.azimuth + m[1];
                double v = f(a, b);
                best.evaluations++;
                if (v > best.value) {
                    best = {v, a, b, best.evaluations};
                    improved = true;
                }
            }
            if (!improved) {
                break;
            }
        }
        step_polar /= 2;
        step_azimuth /= 2;
    }
    best.azimuth = std::fmod(best.azimuth, 2 * M_PI);
    if (best.azimuth < 0) {
        best.azimuth += 2 * M_PI;
    }
    return best;
}

std::vector<double> grid_resolution(const BlochGrid &grid) {
    return {M_PI / static_cast<double>(grid.polar_steps), 2 * M_PI / static_cast<double>(grid.azimuth_steps),
            static_cast<double>(grid.refinements)};
}

/// tr(A), tr(A sigma_x), tr(A sigma_y), tr(A sigma_z) for a qubit operator.
std::array<double, 4> pauli_coordinates(const Matrix &a) {
    return {(a(0, 0) + a(1, 1)).real(), 2 * a(0, 1).real(), -2 * a(0, 1).imag(), (a(0, 0) - a(1, 1)).real()};
}

std::array<double, 3> unit_vector(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

struct ThreeOutcomeScore {
    double value;
    int permutation;
    bool rejected;
};

class ThreeOutcomeObjective {
   public:
    ThreeOutcomeObjective(const std::array<DensityMatrix, 3> &states, const std::array<double, 3> &priors) {
        for (std::size_t i = 0; i < 3; i++) {
            weighted_[i] = pauli_coordinates(priors[i] * states[i].matrix());
        }
    }

    /// params = (t, polar1, azimuth1, polar2, azimuth2).
    ThreeOutcomeScore operator()(const std::array<double, 5> &params) const {
        double t = params[0];
        auto n1 = unit_vector(params[1], params[2]);
        auto n2 = unit_vector(params[3], params[4]);
        std::array<double, 3> u{};
        for (int k = 0; k < 3; k++) {
            u[k] = t * n1[k] + (1 - t) * n2[k];
        }
        double norm_u = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
        double w = 1 / (1 + norm_u);
        // Elements as (identity part, Bloch part): E = alpha I + v.sigma.
        std::array<std::array<double, 4>, 3> elements{};
        elements[0] = {w * t, w * t * n1[0], w * t * n1[1], w * t * n1[2]};
        elements[1] = {w * (1 - t), w * (1 - t) * n2[0], w * (1 - t) * n2[1], w * (1 - t) * n2[2]};
        // Completion I - E1 - E2.
        elements[2] = {1 - elements[0][0] - elements[1][0], -elements[0][1] - elements[1][1],
                       -elements[0][2] - elements[1][2], -elements[0][3] - elements[1][3]};
        const auto &e3 = elements[2];
        double e3_bloch = std::sqrt(e3[1] * e3[1] + e3[2] * e3[2] + e3[3] * e3[3]);
        if (e3[0] - e3_bloch < -1e-12) {
            return {-INFINITY, 0, true};
        }
        ThreeOutcomeScore best{-INFINITY, 0, false};
        for (int p = 0; p < 6; p++) {
            double total = 0;
            for (int e = 0; e < 3; e++) {
                const auto &a = weighted_[kPermutations[p][e]];
                const auto &el = elements[e];
                total += el[0] * a[0] + el[1] * a[1] + el[2] * a[2] + el[3] * a[3];
            }
            if (total > best.value) {
                best = {total, p, false};
            }
        }
        return best;
    }

    /// Every state assigned the identity.
    double trivial() const {
        return std::max({weighted_[0][0], weighted_[1][0], weighted_[2][0]});
    }

   private:
    std::array<std::array<double, 4>, 3> weighted_{};
};

}  // namespace

OracleResult oracle_qubit_minerr(const DensityMatrix &rho0, const DensityMatrix &rho1, double p0, double p1,
                                 const BlochGrid &grid) {
    if (rho0.dim() != 2 || rho1.dim() != 2) {
        throw std::invalid_argument("oracle_qubit_minerr: qubit states only");
    }
    // Success of {P, I - P} is p1 + tr((p0 rho0 - p1 rho1) P).
    Matrix difference = p0 * rho0.matrix() - p1 * rho1.matrix();
    BlochMax best = maximize_on_sphere(difference, grid);
    OracleResult result;
    result.best_value = p1 + best.value;
    result.best_parameters = {best.polar, best.azimuth};
    result.grid_resolution = grid_resolution(grid);
    result.evaluations = best.evaluations + 2;
    // Trivial measurements: always guess rho1 (P = 0) or rho0 (P = I).
    for (double trivial : {p1, p0}) {
        if (trivial > result.best_value) {
            result.best_value = trivial;
            result.best_parameters.clear();
        }
    }
    return result;
}

OracleResult oracle_three_outcome(const std::array<DensityMatrix, 3> &states, const std::array<double, 3> &priors,
                                  const ThreeOutcomeSearch &search) {
    for (const auto &s : states) {
        if (s.dim() != 2) {
            throw std::invalid_argument("oracle_three_outcome: qubit states only");
        }
    }
    ThreeOutcomeObjective objective(states, priors);
    OracleResult result;
    result.best_value = objective.trivial();
    result.evaluations = 1;
    result.grid_resolution = {static_cast<double>(search.restarts), static_cast<double>(search.refine_halvings)};

    std::mt19937_64 rng(search.seed);
    std::uniform_real_distribution<double> unit(0, 1);
    const std::array<double, 5> initial_steps = {0.25, 0.5, 0.5, 0.5, 0.5};
    for (int restart = 0; restart < search.restarts; restart++) {
        std::array<double, 5> x = {unit(rng), std::acos(2 * unit(rng) - 1), 2 * M_PI * unit(rng),
                                   std::acos(2 * unit(rng) - 1), 2 * M_PI * unit(rng)};
        ThreeOutcomeScore score = objective(x);
        result.evaluations++;
        result.rejected += score.rejected;
        std::array<double, 5> steps = initial_steps;
        for (int level = 0; level < search.refine_halvings; level++) {
            for (int pass = 0; pass < 200; pass++) {
                bool improved = false;
                for (std::size_t k = 0; k < 5; k++) {
                    for (double sign : {1.0, -1.0}) {
                        std::array<double, 5> y = x;
                        y[k] += sign * steps[k];
                        if (k == 0) {
                            y[0] = std::clamp(y[0], 0.0, 1.0);
                        }
                        ThreeOutcomeScore candidate = objective(y);
                        result.evaluations++;
                        result.rejected += candidate.rejected;
                        if (candidate.value > score.value) {
                            x = y;
                            score = candidate;
                            improved = true;
                        }
                    }
                }
                if (!improved) {
                    break;
                }
            }
            for (double &s : steps) {
                s /= 2;
            }
        }
        if (score.value > result.best_value) {
            result.best_value = score.value;
            result.best_parameters = {x[0], x[1], x[2], x[3], x[4], static_cast<double>(score.permutation)};
        }
    }
    result.best_value = std::min(result.best_value, 1.0);
    return result;
}

CheatStateScan oracle_cheat_state(double p, adversary::Objective objective, double a_step,
                                  const ThreeOutcomeSearch &search) {
    if (!(a_step > 0 && a_step <= 1)) {
        throw std::invalid_argument("a_step must be in (0, 1]");
    }
    auto count = static_cast<long>(std::llround(1 / a_step));
    CheatStateScan scan;
    scan.result.best_value = -INFINITY;
    scan.result.grid_resolution = {1.0 / static_cast<double>(count)};
    double lowest = INFINITY;
    for (long k = 0; k <= count; k++) {
        double a = static_cast<double>(k) / static_cast<double>(count);
        double value;
        if (objective == adversary::Objective::TwoOutcome) {
            value = adversary::alice_entangled_cheat(p, a).success;
            scan.result.evaluations++;
        } else {
            auto ensemble = adversary::three_state_ensemble(p, a);
            OracleResult inner = oracle_three_outcome(ensemble.states, ensemble.priors, search);
            value = inner.best_value;
            scan.result.evaluations += inner.evaluations;
            scan.result.rejected += inner.rejected;
        }
        scan.values.push_back(value);
        lowest = std::min(lowest, value);
        // Values within 1e-12 of the incumbent count as ties.
        if (value > scan.result.best_value + 1e-12) {
            scan.result.best_value = value;
            scan.argmax_a = a;
        }
    }
    scan.result.best_value = *std::max_element(scan.values.begin(), scan.values.end());
    scan.result.best_parameters = {scan.argmax_a};
    scan.spread = scan.result.best_value - lowest;
    scan.flat = scan.spread <= 1e-9;
    return scan;
}

OracleResult oracle_alice_input_state(double theta, InputTarget target, const BlochGrid &grid) {
    if (!(theta > 0 && theta <= M_PI_4 + 1e-15)) {
        throw std::invalid_argument("oracle_alice_input_state: theta must be in (0, pi/4]");
    }
    qmath::Povm usd = protocols::usd_povm(std::min(theta, M_PI_4));
    Matrix h = target == InputTarget::MaximizeBit ? usd.element(0) + usd.element(1) : usd.element(2);
    BlochMax best = maximize_on_sphere(h, grid);
    OracleResult result;
    result.best_value = best.value;
    result.best_parameters = {best.polar, best.azimuth};
    result.grid_resolution = grid_resolution(grid);
    result.evaluations = best.evaluations;
    return result;
}

}  // namespace rabin_ot::verify
