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

#ifndef RABIN_OT_QMATH_STATES_H
#define RABIN_OT_QMATH_STATES_H

#include <array>
#include <string>
#include <vector>

#include "rabin_ot/qmath/linalg.h"

namespace rabin_ot::qmath {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;
inline constexpr double kCompletenessTolerance = 1e-10;

/// Unit vector in C^d, d in 1..4.
class PureState {
   public:
    explicit PureState(std::vector<Complex> amplitudes);
    /// Rescales to unit norm; throws on the zero vector.
    static PureState normalized(std::vector<Complex> amplitudes);
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const {
        return amplitudes_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::size_t k) const {
        return amplitudes_[k];
    }

    Complex inner(const PureState &other) const;
    Matrix projector() const;

   private:
    std::vector<Complex> amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
   public:
    /// Throws std::invalid_argument unless Hermitian within 1e-12, all
    /// eigenvalues >= -1e-10 and trace 1 within 1e-12.
    explicit DensityMatrix(Matrix m);
    DensityMatrix(const PureState &state);  // NOLINT: a pure state is a density matrix.

    static DensityMatrix maximally_mixed(std::size_t dim);
    /// Convex combination sum_i w_i rho_i; weights must sum to 1.
    static DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> states);

    const Matrix &matrix() const {
        return matrix_;
    }
    std::size_t dim() const {
        return matrix_.dim();
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return matrix_(r, c);
    }

   private:
    Matrix matrix_;
};

/// Two-qubit pure state; amplitude index is 2 * alice + bob.
class BipartiteState {
   public:
    explicit BipartiteState(std::array<Complex, 4> amplitudes);
    static BipartiteState product(const PureState &alice, const PureState &bob);

    const std::array<Complex, 4> &amplitudes() const {
        return amplitudes_;
    }
    Complex amplitude(std::size_t alice, std::size_t bob) const {
        return amplitudes_[2 * alice + bob];
    }
    /// Same state with the Alice and Bob factors exchanged.
    BipartiteState swapped() const;

    /// Coefficient matrix M with M(a, b) = amplitude(a, b).
    Matrix coefficients() const;
    DensityMatrix alice_reduced() const;
    DensityMatrix bob_reduced() const;

   private:
    std::array<Complex, 4> amplitudes_;
};

/// Labelled list of measurement operators. Construction only checks that all
/// elements share a dimension; use validate_povm for the physical predicates.
class Povm {
   public:
    Povm(std::vector<Matrix> elements, std::vector<std::string> labels);

    std::size_t size() const {
        return elements_.size();
    }
    std::size_t dim() const {
        return elements_.front().dim();
    }
    const std::vector<Matrix> &elements() const {
        return elements_;
    }
    const Matrix &element(std::size_t k) const {
        return elements_[k];
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    const std::string &label(std::size_t k) const {
        return labels_[k];
    }
    /// Index of the element with the given label; throws std::out_of_range.
    std::size_t index_of(const std::string &label) const;

   private:
    std::vector<Matrix> elements_;
    std::vector<std::string> labels_;
};

struct PovmValidation {
    bool ok = true;
    /// Indices of elements with an eigenvalue below -tolerance.
    std::vector<std::size_t> non_psd_elements;
    /// sum_k E_k - I.
    Matrix completeness_residual{1};
    /// Frobenius norm of completeness_residual.
    double completeness_residual_norm = 0;
    std::vector<std::string> violations;
};

PovmValidation validate_povm(const Povm &povm, double tolerance = kCompletenessTolerance);

/// Frequently used qubit states.
PureState ket0();
PureState ket1();
PureState ket_plus();
PureState ket_minus();

}  // namespace rabin_ot::qmath

#endif
