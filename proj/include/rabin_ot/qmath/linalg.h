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

#ifndef RABIN_OT_QMATH_LINALG_H
#define RABIN_OT_QMATH_LINALG_H

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rabin_ot::qmath {

using Complex = std::complex<double>;

/// Dense square complex matrix of dimension 1..4, stored row-major inline.
///
/// Every operator in the toolkit (states, measurement elements, their
/// differences) lives in one of these. Hermiticity, positivity and trace are
/// checked on demand rather than assumed.
class Matrix {
   public:
    static constexpr std::size_t kMaxDim = 4;

    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::initializer_list<Complex> row_major);
    Matrix(std::size_t dim, std::span<const Complex> row_major);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const double> values);
    static Matrix diagonal(std::initializer_list<double> values);
    /// |v><v| for an arbitrary (not necessarily normalized) vector.
    static Matrix outer(std::span<const Complex> ket);

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return {entries_.data(), dim_ * dim_};
    }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    Complex trace() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex scale);

    /// Largest entrywise modulus.
    double max_abs() const;
    double frobenius_norm() const;
    bool is_hermitian(double tolerance) const;

    /// <bra| M |ket>.
    Complex sandwich(std::span<const Complex> bra, std::span<const Complex> ket) const;
    /// M |ket>.
    std::vector<Complex> apply(std::span<const Complex> ket) const;

    std::string str() const;

   private:
    std::size_t dim_;
    std::array<Complex, kMaxDim * kMaxDim> entries_{};
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator*(Complex scale, Matrix m);
Matrix operator*(double scale, Matrix m);

/// Tensor product; the result dimension must not exceed Matrix::kMaxDim.
Matrix kron(const Matrix &a, const Matrix &b);

/// Real part of tr(a b), the Born-rule pairing used everywhere.
double trace_product(const Matrix &a, const Matrix &b);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascend; the i-th
/// column of `vectors` is the eigenvector for `values[i]`.
struct HermitianEigen {
    std::vector<double> values;
    Matrix vectors;

    std::vector<Complex> vector(std::size_t index) const;
};

/// Cyclic complex Jacobi. Iterates until the off-diagonal Frobenius mass
/// falls below 1e-13 (relative to the input scale when that exceeds 1).
/// Throws std::invalid_argument if `m` is not Hermitian within `tolerance`.
HermitianEigen eigh(const Matrix &m, double tolerance = 1e-12);

/// V diag(f(lambda)) V^dagger.
Matrix reassemble(const HermitianEigen &eig, std::span<const double> values);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix &m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix &m);

/// Eigenvalues below this are treated as kernel by psd_sqrt_and_pinv_sqrt.
inline constexpr double kKernelCutoff = 1e-10;

struct PsdRoots {
    Matrix sqrt;
    Matrix pinv_sqrt;
};

/// Square root and pseudo-inverse square root of a PSD matrix. Eigenvalues in
/// [-1e-10, 1e-10) are kernel; anything more negative is rejected with
/// std::domain_error.
PsdRoots psd_sqrt_and_pinv_sqrt(const Matrix &m);

}  // namespace rabin_ot::qmath

#endif
