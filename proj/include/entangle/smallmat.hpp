// Copyright 2026 The entangle Authors
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

// Dense kernel for the handful of fixed small shapes used across the
// library (2x2, 3x3, 4x4, 9x9). Storage is row-major and every matrix is an
// immutable-by-convention value.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "entangle/errors.hpp"

namespace entangle {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxMatrixDim = 9;

/// Hermiticity tolerance accepted by herm_eigvals (max entrywise |h - h^dagger|).
inline constexpr double kHermitianTolerance = 1e-10;
/// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this.
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
/// LU pivots smaller than this make the determinant exactly zero.
inline constexpr double kPivotTolerance = 1e-14;

namespace detail {

template <typename T>
inline constexpr bool is_complex_v = false;
template <typename T>
inline constexpr bool is_complex_v<std::complex<T>> = true;

inline void check_dims(std::size_t rows, std::size_t cols) {
    if (rows < 1 || rows > kMaxMatrixDim || cols < 1 || cols > kMaxMatrixDim) {
        throw DimensionError("matrix dimensions " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " outside supported range 1..9");
    }
}

}  // namespace detail

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        detail::check_dims(rows, cols);
        entries_.assign(rows * cols, T{});
    }

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        detail::check_dims(rows, cols);
        if (entries_.size() != rows * cols) {
            throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
        }
    }

    Matrix(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
        : Matrix(rows, cols, std::vector<T>(entries)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    static Matrix diagonal(std::span<const T> diag) {
        Matrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }
    static Matrix diagonal(std::initializer_list<T> diag) {
        return diagonal(std::span<const T>(diag.begin(), diag.size()));
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const T> entries() const noexcept { return entries_; }

    T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product shape mismatch");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

template <typename T>
Matrix<T> adjoint(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if constexpr (detail::is_complex_v<T>) {
                out(j, i) = std::conj(m(i, j));
            } else {
                out(j, i) = m(i, j);
            }
        }
    return out;
}

template <typename T>
T trace(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
    T t{};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

/// Kronecker product; the left factor owns the high-order index.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// tr(a b) without forming the product.
template <typename T>
T trace_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionError("trace_product requires square matrices of equal dimension");
    }
    T t{};
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    return t;
}

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff shape mismatch");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

/// max |m - m^dagger| entrywise.
template <typename T>
double max_asymmetry(const Matrix<T>& m) {
    if (!m.is_square()) throw DimensionError("asymmetry of a non-square matrix");
    return max_abs_diff(m, adjoint(m));
}

/// Converts a real matrix to complex storage.
inline ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

/// Determinant by LU with partial pivoting.
inline double det_real(const RealMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<double> a(m.entries().begin(), m.entries().end());
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a[i * n + k]) > std::abs(a[pivot * n + k])) pivot = i;
        }
        if (std::abs(a[pivot * n + k]) < kPivotTolerance) return 0.0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            det = -det;
        }
        const double p = a[k * n + k];
        det *= p;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a[i * n + k] / p;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return det;
}

namespace detail {

// Cyclic Jacobi on a dense real-symmetric n x n array; returns the diagonal.
inline std::vector<double> jacobi_symmetric_eigvals(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) < kJacobiOffDiagonalTolerance) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
    return diag;
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// 2x2 inputs use the closed form. Larger inputs H = A + iB are embedded as
/// the real-symmetric [[A, -B], [B, A]], whose spectrum is that of H with every
/// eigenvalue doubled, and diagonalised by cyclic Jacobi rotations.
inline std::vector<double> herm_eigvals(const ComplexMatrix& h) {
    if (!h.is_square()) throw DimensionError("herm_eigvals requires a square matrix");
    const double asym = max_asymmetry(h);
    if (asym > kHermitianTolerance) {
        throw NumericalError("herm_eigvals: matrix is not Hermitian (max asymmetry " + std::to_string(asym) + ")");
    }
    const std::size_t n = h.rows();
    if (n == 1) return {h(0, 0).real()};
    if (n == 2) {
        const double a = h(0, 0).real();
        const double d = h(1, 1).real();
        const double mean = 0.5 * (a + d);
        const double radius = std::hypot(0.5 * (a - d), std::abs(0.5 * (h(0, 1) + std::conj(h(1, 0)))));
        return {mean - radius, mean + radius};
    }

    const std::size_t m = 2 * n;
    std::vector<double> embedded(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrise so rounding in the input cannot break the embedding.
            const Complex hij = 0.5 * (h(i, j) + std::conj(h(j, i)));
            embedded[i * m + j] = hij.real();
            embedded[(i + n) * m + (j + n)] = hij.real();
            embedded[i * m + (j + n)] = -hij.imag();
            embedded[(i + n) * m + j] = hij.imag();
        }
    auto doubled = detail::jacobi_symmetric_eigvals(std::move(embedded), m);
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return out;
}

}  // namespace entangle
