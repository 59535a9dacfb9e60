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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rabin_ot::qmath {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > Matrix::kMaxDim) {
        throw std::invalid_argument("matrix dimension must be in 1..4, got " + std::to_string(dim));
    }
}

void check_same_dim(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            "matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

double off_diagonal_norm(const Matrix &m) {
    double total = 0;
    for (std::size_t r = 0; r < m.dim(); r++) {
        for (std::size_t c = 0; c < m.dim(); c++) {
            if (r != c) {
                total += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(total);
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) {
    check_dim(dim);
}

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : Matrix(dim, std::span<const Complex>(row_major.begin(), row_major.size())) {
}

Matrix::Matrix(std::size_t dim, std::span<const Complex> row_major) : dim_(dim) {
    check_dim(dim);
    if (row_major.size() != dim * dim) {
        throw std::invalid_argument("matrix entry count must equal dim^2");
    }
    std::copy(row_major.begin(), row_major.end(), entries_.begin());
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix result(dim);
    for (std::size_t k = 0; k < dim; k++) {
        result(k, k) = 1;
    }
    return result;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix result(values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        result(k, k) = values[k];
    }
    return result;
}

Matrix Matrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

Matrix Matrix::outer(std::span<const Complex> ket) {
    Matrix result(ket.size());
    for (std::size_t r = 0; r < ket.size(); r++) {
        for (std::size_t c = 0; c < ket.size(); c++) {
            result(r, c) = ket[r] * std::conj(ket[c]);
        }
    }
    return result;
}

Matrix Matrix::adjoint() const {
    Matrix result(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            result(r, c) = std::conj((*this)(c, r));
        }
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix result(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            result(r, c) = (*this)(c, r);
        }
    }
    return result;
}

Matrix Matrix::conj() const {
    Matrix result = *this;
    for (auto &e : result.entries_) {
        e = std::conj(e);
    }
    return result;
}

Complex Matrix::trace() const {
    Complex total = 0;
    for (std::size_t k = 0; k < dim_; k++) {
        total += (*this)(k, k);
    }
    return total;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    check_same_dim(*this, other);
    for (std::size_t k = 0; k < dim_ * dim_; k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    check_same_dim(*this, other);
    for (std::size_t k = 0; k < dim_ * dim_; k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scale) {
    for (std::size_t k = 0; k < dim_ * dim_; k++) {
        entries_[k] *= scale;
    }
    return *this;
}

double Matrix::max_abs() const {
    double best = 0;
    for (std::size_t k = 0; k < dim_ * dim_; k++) {
        best = std::max(best, std::abs(entries_[k]));
    }
    return best;
}

double Matrix::frobenius_norm() const {
    double total = 0;
    for (std::size_t k = 0; k < dim_ * dim_; k++) {
        total += std::norm(entries_[k]);
    }
    return std::sqrt(total);
}

bool Matrix::is_hermitian(double tolerance) const {
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = r; c < dim_; c++) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

Complex Matrix::sandwich(std::span<const Complex> bra, std::span<const Complex> ket) const {
    if (bra.size() != dim_ || ket.size() != dim_) {
        throw std::invalid_argument("vector dimension does not match matrix");
    }
    Complex total = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        Complex row = 0;
        for (std::size_t c = 0; c < dim_; c++) {
            row += (*this)(r, c) * ket[c];
        }
        total += std::conj(bra[r]) * row;
    }
    return total;
}

std::vector<Complex> Matrix::apply(std::span<const Complex> ket) const {
    if (ket.size() != dim_) {
        throw std::invalid_argument("vector dimension does not match matrix");
    }
    std::vector<Complex> result(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            result[r] += (*this)(r, c) * ket[c];
        }
    }
    return result;
}

std::string Matrix::str() const {
    std::stringstream out;
    out << "[";
    for (std::size_t r = 0; r < dim_; r++) {
        out << (r ? "; " : "");
        for (std::size_t c = 0; c < dim_; c++) {
            out << (c ? ", " : "") << (*this)(r, c);
        }
    }
    out << "]";
    return out.str();
}

Matrix operator+(Matrix a, const Matrix &b) {
    a += b;
    return a;
}

Matrix operator-(Matrix a, const Matrix &b) {
    a -= b;
    return a;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    check_same_dim(a, b);
    Matrix result(a.dim());
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t k = 0; k < a.dim(); k++) {
            Complex left = a(r, k);
            for (std::size_t c = 0; c < a.dim(); c++) {
                result(r, c) += left * b(k, c);
            }
        }
    }
    return result;
}

Matrix operator*(Complex scale, Matrix m) {
    m *= scale;
    return m;
}

Matrix operator*(double scale, Matrix m) {
    m *= Complex(scale);
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix result(a.dim() * b.dim());
    for (std::size_t ra = 0; ra < a.dim(); ra++) {
        for (std::size_t ca = 0; ca < a.dim(); ca++) {
            for (std::size_t rb = 0; rb < b.dim(); rb++) {
                for (std::size_t cb = 0; cb < b.dim(); cb++) {
                    result(ra * b.dim() + rb, ca * b.dim() + cb) = a(ra, ca) * b(rb, cb);
                }
            }
        }
    }
    return result;
}

double trace_product(const Matrix &a, const Matrix &b) {
    check_same_dim(a, b);
    double total = 0;
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < a.dim(); c++) {
            total += (a(r, c) * b(c, r)).real();
        }
    }
    return total;
}

std::vector<Complex> HermitianEigen::vector(std::size_t index) const {
    std::vector<Complex> result(vectors.dim());
    for (std::size_t r = 0; r < vectors.dim(); r++) {
        result[r] = vectors(r, index);
    }
    return result;
}

HermitianEigen eigh(const Matrix &m, double tolerance) {
    if (!m.is_hermitian(tolerance)) {
        throw std::invalid_argument("eigh requires a Hermitian matrix: " + m.str());
    }
    const std::size_t n = m.dim();
    Matrix a = m;
    // Symmetrize exactly so the rotations act on a truly Hermitian matrix.
    for (std::size_t r = 0; r < n; r++) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; c++) {
            Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    Matrix v = Matrix::identity(n);
    const double threshold = 1e-13 * std::max(1.0, m.frobenius_norm());

    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > threshold; sweep++) {
        for (std::size_t p = 0; p < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double magnitude = std::abs(a(p, q));
                if (magnitude == 0) {
                    continue;
                }
                Complex phase = a(p, q) / magnitude;
                double alpha = a(p, p).real();
                double gamma = a(q, q).real();
                double angle = 0.5 * std::atan2(2 * magnitude, gamma - alpha);
                double c = std::cos(angle);
                double s = std::sin(angle);
                // Rotation acting on columns p and q:
                //   col_p' = c col_p - s conj(phase) col_q
                //   col_q' = s col_p + c conj(phase) col_q
                Complex cp = std::conj(phase);
                for (std::size_t k = 0; k < n; k++) {
                    Complex ap = a(k, p);
                    Complex aq = a(k, q);
                    a(k, p) = c * ap - s * cp * aq;
                    a(k, q) = s * ap + c * cp * aq;
                    Complex vp = v(k, p);
                    Complex vq = v(k, q);
                    v(k, p) = c * vp - s * cp * vq;
                    v(k, q) = s * vp + c * cp * vq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    Complex ap = a(p, k);
                    Complex aq = a(q, k);
                    a(p, k) = c * ap - s * phase * aq;
                    a(q, k) = s * ap + c * phase * aq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen result{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

Matrix reassemble(const HermitianEigen &eig, std::span<const double> values) {
    const std::size_t n = eig.vectors.dim();
    if (values.size() != n) {
        throw std::invalid_argument("reassemble: eigenvalue count mismatch");
    }
    Matrix result(n);
    for (std::size_t k = 0; k < n; k++) {
        if (values[k] == 0) {
            continue;
        }
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                result(r, c) += values[k] * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
            }
        }
    }
    return result;
}

double trace_norm(const Matrix &m) {
    double total = 0;
    for (double value : eigh(m).values) {
        total += std::abs(value);
    }
    return total;
}

double min_eigenvalue(const Matrix &m) {
    return eigh(m).values.front();
}

PsdRoots psd_sqrt_and_pinv_sqrt(const Matrix &m) {
    HermitianEigen eig = eigh(m);
    const std::size_t n = m.dim();
    std::vector<double> roots(n);
    std::vector<double> inverse_roots(n);
    for (std::size_t k = 0; k < n; k++) {
        double value = eig.values[k];
        if (value < -kKernelCutoff) {
            throw std::domain_error("psd_sqrt: negative eigenvalue " + std::to_string(value));
        }
        if (value < kKernelCutoff) {
            continue;
        }
        roots[k] = std::sqrt(value);
        inverse_roots[k] = 1 / roots[k];
    }
    return {reassemble(eig, roots), reassemble(eig, inverse_roots)};
}

}  // namespace rabin_ot::qmath
