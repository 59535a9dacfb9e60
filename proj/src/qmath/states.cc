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

#include "rabin_ot/qmath/states.h"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rabin_ot::qmath {

namespace {

double squared_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &z : v) {
        total += std::norm(z);
    }
    return total;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty() || amplitudes_.size() > Matrix::kMaxDim) {
        throw std::invalid_argument("pure state dimension must be in 1..4");
    }
    double norm = std::sqrt(squared_norm(amplitudes_));
    if (std::abs(norm - 1) > kNormTolerance) {
        throw std::invalid_argument("pure state is not normalized (norm " + std::to_string(norm) + ")");
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm = std::sqrt(squared_norm(amplitudes));
    if (norm == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (auto &z : amplitudes) {
        z /= norm;
    }
    return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Complex> amplitudes(dim);
    amplitudes[index] = 1;
    return PureState(std::move(amplitudes));
}

Complex PureState::inner(const PureState &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("inner product dimension mismatch");
    }
    Complex total = 0;
    for (std::size_t k = 0; k < dim(); k++) {
        total += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return total;
}

Matrix PureState::projector() const {
    return Matrix::outer(amplitudes_);
}

DensityMatrix::DensityMatrix(Matrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_hermitian(kHermitianTolerance)) {
        throw std::invalid_argument("density matrix is not Hermitian: " + matrix_.str());
    }
    Complex trace = matrix_.trace();
    if (std::abs(trace - Complex(1)) > kTraceTolerance) {
        throw std::invalid_argument("density matrix trace is not 1: " + matrix_.str());
    }
    if (min_eigenvalue(matrix_) < -kPsdTolerance) {
        throw std::invalid_argument("density matrix is not positive semidefinite: " + matrix_.str());
    }
}

DensityMatrix::DensityMatrix(const PureState &state) : matrix_(state.projector()) {
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix((1.0 / static_cast<double>(dim)) * Matrix::identity(dim));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights, std::span<const DensityMatrix> states) {
    if (weights.size() != states.size() || states.empty()) {
        throw std::invalid_argument("mixture needs one weight per state");
    }
    Matrix total(states.front().dim());
    for (std::size_t k = 0; k < states.size(); k++) {
        if (weights[k] < 0) {
            throw std::invalid_argument("mixture weights must be non-negative");
        }
        total += weights[k] * states[k].matrix();
    }
    return DensityMatrix(total);
}

BipartiteState::BipartiteState(std::array<Complex, 4> amplitudes) : amplitudes_(amplitudes) {
    double norm = std::sqrt(squared_norm(amplitudes_));
    if (std::abs(norm - 1) > kNormTolerance) {
        throw std::invalid_argument("bipartite state is not normalized (norm " + std::to_string(norm) + ")");
    }
}

BipartiteState BipartiteState::product(const PureState &alice, const PureState &bob) {
    if (alice.dim() != 2 || bob.dim() != 2) {
        throw std::invalid_argument("bipartite states are qubit-qubit");
    }
    std::array<Complex, 4> amplitudes{};
    for (std::size_t a = 0; a < 2; a++) {
        for (std::size_t b = 0; b < 2; b++) {
            amplitudes[2 * a + b] = alice[a] * bob[b];
        }
    }
    return BipartiteState(amplitudes);
}

BipartiteState BipartiteState::swapped() const {
    return BipartiteState({amplitudes_[0], amplitudes_[2], amplitudes_[1], amplitudes_[3]});
}

Matrix BipartiteState::coefficients() const {
    return Matrix(2, {amplitudes_[0], amplitudes_[1], amplitudes_[2], amplitudes_[3]});
}

DensityMatrix BipartiteState::alice_reduced() const {
    Matrix m = coefficients();
    return DensityMatrix(m * m.adjoint());
}

DensityMatrix BipartiteState::bob_reduced() const {
    return swapped().alice_reduced();
}

Povm::Povm(std::vector<Matrix> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) {
        throw std::invalid_argument("a POVM needs at least one element");
    }
    if (labels_.size() != elements_.size()) {
        throw std::invalid_argument("a POVM needs one label per element");
    }
    for (const auto &e : elements_) {
        if (e.dim() != elements_.front().dim()) {
            throw std::invalid_argument("POVM elements have mismatched dimensions");
        }
    }
}

std::size_t Povm::index_of(const std::string &label) const {
    for (std::size_t k = 0; k < labels_.size(); k++) {
        if (labels_[k] == label) {
            return k;
        }
    }
    throw std::out_of_range("no POVM element labelled " + label);
}

PovmValidation validate_povm(const Povm &povm, double tolerance) {
    PovmValidation result;
    Matrix total(povm.dim());
    for (std::size_t k = 0; k < povm.size(); k++) {
        const Matrix &e = povm.element(k);
        total += e;
        if (!e.is_hermitian(kHermitianTolerance) || min_eigenvalue(e) < -tolerance) {
            result.non_psd_elements.push_back(k);
            result.violations.push_back("element " + std::to_string(k) + " (" + povm.label(k) +
                                        ") is not positive semidefinite");
        }
    }
    result.completeness_residual = total - Matrix::identity(povm.dim());
    result.completeness_residual_norm = result.completeness_residual.frobenius_norm();
    if (result.completeness_residual_norm > tolerance) {
        result.violations.push_back("elements do not sum to identity (residual norm " +
                                    std::to_string(result.completeness_residual_norm) + ")");
    }
    result.ok = result.violations.empty();
    return result;
}

PureState ket0() {
    return PureState({1, 0});
}

PureState ket1() {
    return PureState({0, 1});
}

PureState ket_plus() {
    return PureState({M_SQRT1_2, M_SQRT1_2});
}

PureState ket_minus() {
    return PureState({M_SQRT1_2, -M_SQRT1_2});
}

}  // namespace rabin_ot::qmath
