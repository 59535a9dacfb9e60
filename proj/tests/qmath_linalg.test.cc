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

#include "rabin_ot/qmath/linalg.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "test_util.h"

using namespace rabin_ot::qmath;
using rabin_ot::testing::random_hermitian;

namespace {

Matrix pauli_x() {
    return Matrix(2, {0, 1, 1, 0});
}

Matrix pauli_y() {
    return Matrix(2, {0, Complex(0, -1), Complex(0, 1), 0});
}

double max_diff(const Matrix &a, const Matrix &b) {
    return (a - b).max_abs();
}

}  // namespace

TEST(linalg, construction_and_access) {
    Matrix m(2, {1, 2, 3, 4});
    ASSERT_EQ(m.dim(), 2u);
    ASSERT_EQ(m(0, 1), Complex(2));
    ASSERT_EQ(m(1, 0), Complex(3));
    ASSERT_EQ(m.trace(), Complex(5));
    ASSERT_EQ(Matrix::identity(3).trace(), Complex(3));
    ASSERT_THROW(Matrix(0), std::invalid_argument);
    ASSERT_THROW(Matrix(5), std::invalid_argument);
    ASSERT_THROW(Matrix(2, {1, 2, 3}), std::invalid_argument);
}

TEST(linalg, products) {
    Matrix x = pauli_x();
    Matrix y = pauli_y();
    ASSERT_LT(max_diff(x * x, Matrix::identity(2)), 1e-15);
    // XY = iZ.
    ASSERT_LT(max_diff(x * y, Complex(0, 1) * Matrix::diagonal({1, -1})), 1e-15);
    ASSERT_LT(max_diff(y.adjoint(), y), 1e-15);
    ASSERT_LT(max_diff(y.transpose(), y.conj()), 1e-15);
    ASSERT_NEAR(trace_product(x, x), 2, 1e-15);

    Matrix k = kron(x, Matrix::diagonal({1, 2}));
    ASSERT_EQ(k.dim(), 4u);
    ASSERT_EQ(k(0, 2), Complex(1));
    ASSERT_EQ(k(1, 3), Complex(2));
    ASSERT_EQ(k(0, 0), Complex(0));
    ASSERT_THROW(kron(Matrix::identity(2), Matrix::identity(3)), std::invalid_argument);
}

TEST(linalg, outer_and_sandwich) {
    const Complex v[] = {Complex(1, 1), 2};
    Matrix o = Matrix::outer(v);
    ASSERT_EQ(o(0, 1), Complex(1, 1) * 2.0);
    ASSERT_EQ(o(1, 0), Complex(1, -1) * 2.0);
    ASSERT_NEAR(o.trace().real(), 6, 1e-15);
    ASSERT_NEAR(std::abs(o.sandwich(v, v) - Complex(36)), 0, 1e-12);
    auto applied = pauli_x().apply(v);
    ASSERT_EQ(applied[0], Complex(2));
    ASSERT_EQ(applied[1], Complex(1, 1));
}

TEST(linalg, eigh_known_spectra) {
    auto ex = eigh(pauli_x());
    ASSERT_NEAR(ex.values[0], -1, 1e-14);
    ASSERT_NEAR(ex.values[1], 1, 1e-14);
    auto ey = eigh(pauli_y());
    ASSERT_NEAR(ey.values[0], -1, 1e-14);
    ASSERT_NEAR(ey.values[1], 1, 1e-14);

    auto id = eigh(Matrix::identity(4));
    for (double v : id.values) {
        ASSERT_NEAR(v, 1, 1e-15);
    }
    auto d = eigh(Matrix::diagonal({3, -1, 2}));
    ASSERT_NEAR(d.values[0], -1, 1e-15);
    ASSERT_NEAR(d.values[1], 2, 1e-15);
    ASSERT_NEAR(d.values[2], 3, 1e-15);
}

TEST(linalg, eigh_matches_quadratic_formula_on_qubits) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        Matrix m = random_hermitian(2, rng);
        double a = m(0, 0).real();
        double d = m(1, 1).real();
        double off = std::abs(m(0, 1));
        double mean = (a + d) / 2;
        double radius = std::sqrt((a - d) * (a - d) / 4 + off * off);
        auto e = eigh(m);
        ASSERT_NEAR(e.values[0], mean - radius, 1e-12);
        ASSERT_NEAR(e.values[1], mean + radius, 1e-12);
    }
}

TEST(linalg, eigh_reconstructs_random_hermitian) {
    std::mt19937_64 rng(5);
    for (std::size_t dim = 1; dim <= 4; dim++) {
        for (int trial = 0; trial < 100; trial++) {
            Matrix m = random_hermitian(dim, rng);
            auto e = eigh(m);
            for (std::size_t k = 1; k < dim; k++) {
                ASSERT_LE(e.values[k - 1], e.values[k]);
            }
            ASSERT_LT(max_diff(reassemble(e, e.values), m), 1e-12);
            ASSERT_LT(max_diff(e.vectors.adjoint() * e.vectors, Matrix::identity(dim)), 1e-12);
            for (std::size_t k = 0; k < dim; k++) {
                auto v = e.vector(k);
                auto mv = m.apply(v);
                for (std::size_t i = 0; i < dim; i++) {
                    ASSERT_NEAR(std::abs(mv[i] - e.values[k] * v[i]), 0, 1e-11);
                }
            }
        }
    }
}

TEST(linalg, eigh_degenerate_spectrum) {
    // Projector onto a random 2-plane in C^4: eigenvalues 0, 0, 1, 1.
    std::mt19937_64 rng(3);
    Matrix h = random_hermitian(4, rng);
    auto basis = eigh(h);
    Matrix projector = Matrix::outer(basis.vector(0)) + Matrix::outer(basis.vector(3));
    auto e = eigh(projector);
    ASSERT_NEAR(e.values[0], 0, 1e-13);
    ASSERT_NEAR(e.values[1], 0, 1e-13);
    ASSERT_NEAR(e.values[2], 1, 1e-13);
    ASSERT_NEAR(e.values[3], 1, 1e-13);
}

TEST(linalg, eigh_rejects_non_hermitian) {
    ASSERT_THROW(eigh(Matrix(2, {0, 1, 0, 0})), std::invalid_argument);
}

TEST(linalg, trace_norm_and_min_eigenvalue) {
    ASSERT_NEAR(trace_norm(Matrix::diagonal({1, -1})), 2, 1e-15);
    ASSERT_NEAR(trace_norm(pauli_y()), 2, 1e-14);
    ASSERT_NEAR(min_eigenvalue(Matrix::diagonal({0.5, -0.25, 2})), -0.25, 1e-15);
}

TEST(linalg, psd_roots) {
    std::mt19937_64 rng(9);
    Matrix g = random_hermitian(3, rng);
    Matrix psd = g * g;
    auto roots = psd_sqrt_and_pinv_sqrt(psd);
    ASSERT_LT(max_diff(roots.sqrt * roots.sqrt, psd), 1e-11);
    ASSERT_LT(max_diff(roots.sqrt * roots.pinv_sqrt, Matrix::identity(3)), 1e-9);

    // Rank one: pinv_sqrt inverts on the support only.
    Matrix rank_one = Matrix::diagonal({4, 0});
    auto r1 = psd_sqrt_and_pinv_sqrt(rank_one);
    ASSERT_NEAR(r1.sqrt(0, 0).real(), 2, 1e-15);
    ASSERT_NEAR(r1.pinv_sqrt(0, 0).real(), 0.5, 1e-15);
    ASSERT_NEAR(std::abs(r1.pinv_sqrt(1, 1)), 0, 1e-15);

    ASSERT_THROW(psd_sqrt_and_pinv_sqrt(Matrix::diagonal({1, -1e-6})), std::domain_error);
    ASSERT_NO_THROW(psd_sqrt_and_pinv_sqrt(Matrix::diagonal({1, -1e-12})));
}
