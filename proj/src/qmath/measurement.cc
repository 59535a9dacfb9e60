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

#include "rabin_ot/qmath/measurement.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rabin_ot::qmath {

namespace {

constexpr double kUndefinedOutcome = 1e-14;

void check_priors(std::span<const double> priors) {
    double total = 0;
    for (double p : priors) {
        if (p < 0 || p > 1) {
            throw std::invalid_argument("prior outside [0, 1]: " + std::to_string(p));
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("priors must sum to 1, got " + std::to_string(total));
    }
}

}  // namespace

double clip_probability(double p) {
    if (p < -kMaxClip || p > 1 + kMaxClip) {
        throw std::domain_error("probability " + std::to_string(p) + " outside [0, 1] beyond rounding");
    }
    return std::clamp(p, 0.0, 1.0);
}

std::vector<double> born_probabilities(const DensityMatrix &state, const Povm &povm) {
    if (state.dim() != povm.dim()) {
        throw std::invalid_argument("state and POVM dimensions differ");
    }
    std::vector<double> result;
    result.reserve(povm.size());
    for (const auto &e : povm.elements()) {
        result.push_back(clip_probability(trace_product(state.matrix(), e)));
    }
    return result;
}

std::vector<double> born_probabilities(const PureState &state, const Povm &povm) {
    if (state.dim() != povm.dim()) {
        throw std::invalid_argument("state and POVM dimensions differ");
    }
    std::vector<double> result;
    result.reserve(povm.size());
    for (const auto &e : povm.elements()) {
        result.push_back(clip_probability(e.sandwich(state.amplitudes(), state.amplitudes()).real()));
    }
    return result;
}

double helstrom_success(double p0, const DensityMatrix &rho0, double p1, const DensityMatrix &rho1) {
    const double priors[] = {p0, p1};
    check_priors(priors);
    if (rho0.dim() != rho1.dim()) {
        throw std::invalid_argument("helstrom_success: dimension mismatch");
    }
    Matrix difference = p0 * rho0.matrix() - p1 * rho1.matrix();
    return clip_probability(0.5 * (1 + trace_norm(difference)));
}

Povm helstrom_measurement(double p0, const DensityMatrix &rho0, double p1, const DensityMatrix &rho1,
                          std::string label0, std::string label1) {
    const double priors[] = {p0, p1};
    check_priors(priors);
    if (rho0.dim() != rho1.dim()) {
        throw std::invalid_argument("helstrom_measurement: dimension mismatch");
    }
    HermitianEigen eig = eigh(p0 * rho0.matrix() - p1 * rho1.matrix());
    std::vector<double> positive(eig.values.size());
    std::vector<double> rest(eig.values.size());
    for (std::size_t k = 0; k < eig.values.size(); k++) {
        (eig.values[k] > 0 ? positive : rest)[k] = 1;
    }
    return Povm({reassemble(eig, positive), reassemble(eig, rest)}, {std::move(label0), std::move(label1)});
}

Povm square_root_measurement(std::span<const double> priors, std::span<const DensityMatrix> states) {
    if (states.empty()) {
        throw std::invalid_argument("square-root measurement of an empty ensemble");
    }
    if (priors.size() != states.size()) {
        throw std::invalid_argument("square-root measurement needs one prior per state");
    }
    check_priors(priors);
    const std::size_t dim = states.front().dim();
    Matrix average(dim);
    for (std::size_t k = 0; k < states.size(); k++) {
        if (states[k].dim() != dim) {
            throw std::invalid_argument("square-root measurement: dimension mismatch");
        }
        average += priors[k] * states[k].matrix();
    }
    Matrix inverse_root = psd_sqrt_and_pinv_sqrt(average).pinv_sqrt;

    std::vector<Matrix> elements;
    std::vector<std::string> labels;
    Matrix deficit = Matrix::identity(dim);
    for (std::size_t k = 0; k < states.size(); k++) {
        Matrix e = priors[k] * (inverse_root * states[k].matrix() * inverse_root);
        deficit -= e;
        elements.push_back(e);
        labels.push_back(std::to_string(k));
    }
    if (deficit.max_abs() > kCompletenessTolerance) {
        elements.push_back(deficit);
        labels.emplace_back("null");
    }
    return Povm(std::move(elements), std::move(labels));
}

double srm_success(std::span<const double> priors, std::span<const DensityMatrix> states) {
    Povm povm = square_root_measurement(priors, states);
    double total = 0;
    for (std::size_t k = 0; k < states.size(); k++) {
        total += priors[k] * trace_product(states[k].matrix(), povm.element(k));
    }
    return clip_probability(total);
}

RemoteState conditional_remote_state(const BipartiteState &psi, const Matrix &bob_element) {
    if (bob_element.dim() != 2) {
        throw std::invalid_argument("conditional_remote_state: Bob's element must act on a qubit");
    }
    if (!bob_element.is_hermitian(kHermitianTolerance) || min_eigenvalue(bob_element) < -kPsdTolerance) {
        throw std::invalid_argument("conditional_remote_state: element is not positive semidefinite");
    }
    Matrix m = psi.coefficients();
    Matrix unnormalized = m * bob_element.transpose() * m.adjoint();
    RemoteState result;
    result.probability = clip_probability(unnormalized.trace().real());
    if (result.probability < kUndefinedOutcome) {
        return result;
    }
    Matrix normalized = (1 / result.probability) * unnormalized;
    // Re-symmetrize to absorb rounding before the DensityMatrix checks.
    normalized = 0.5 * (normalized + normalized.adjoint());
    result.state.emplace(normalized);
    return result;
}

}  // namespace rabin_ot::qmath
