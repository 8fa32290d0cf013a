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

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entangle/errors.hpp"
#include "entangle/smallmat.hpp"

namespace entangle {

inline constexpr double kStateNormTolerance = 1e-12;
/// Inputs whose norm is off by more than this are renormalised and flagged.
inline constexpr double kRenormalizeThreshold = 1e-6;
inline constexpr double kDensityHermitianTolerance = 1e-12;
inline constexpr double kDensityTraceTolerance = 1e-12;
inline constexpr double kDensityPositivityTolerance = 1e-10;
/// |tr(rho^2) - 1| at or below this counts as a pure state.
inline constexpr double kPurityGate = 1e-10;

enum class Subsystem { A, B };

inline void require_local_dim(std::size_t d) {
    if (d != 2 && d != 3) {
        throw DimensionError("unsupported local dimension " + std::to_string(d) + " (expected 2 or 3)");
    }
}

/// Unit-norm bipartite pure state; amplitude of |i,j> sits at i * dim_b + j.
class StateVector {
public:
    [[nodiscard]] std::size_t dim_a() const noexcept { return dim_a_; }
    [[nodiscard]] std::size_t dim_b() const noexcept { return dim_b_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    /// Set when the input had to be rescaled to unit norm.
    [[nodiscard]] bool normalization_warning() const noexcept { return normalization_warning_; }

    friend StateVector state_from_amplitudes(std::span<const Complex>, std::size_t, std::size_t);

private:
    StateVector(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amps, bool warned)
        : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amps)), normalization_warning_(warned) {}

    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<Complex> amplitudes_;
    bool normalization_warning_;
};

inline StateVector state_from_amplitudes(std::span<const Complex> amps, std::size_t dim_a, std::size_t dim_b) {
    require_local_dim(dim_a);
    require_local_dim(dim_b);
    if (amps.size() != dim_a * dim_b) {
        throw DimensionError("expected " + std::to_string(dim_a * dim_b) + " amplitudes, got " +
                             std::to_string(amps.size()));
    }
    double norm2 = 0.0;
    for (const auto& a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InvalidArgument("amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    if (norm2 == 0.0) throw InvalidArgument("zero state vector cannot be normalised");
    const double norm = std::sqrt(norm2);

    std::vector<Complex> out(amps.begin(), amps.end());
    const bool warned = std::abs(norm - 1.0) > kRenormalizeThreshold;
    if (norm != 1.0) {
        for (auto& a : out) a /= norm;
    }
    return StateVector(dim_a, dim_b, std::move(out), warned);
}

inline StateVector state_from_amplitudes(std::initializer_list<Complex> amps, std::size_t dim_a,
                                         std::size_t dim_b) {
    return state_from_amplitudes(std::span<const Complex>(amps.begin(), amps.size()), dim_a, dim_b);
}

/// Hermitian, unit-trace matrix. Construction checks both; positivity is a
/// separate query because reconstructed Bloch forms need not be positive.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
        if (!matrix_.is_square()) throw DimensionError("density matrix must be square");
        const double asym = max_asymmetry(matrix_);
        if (asym > kDensityHermitianTolerance) {
            throw NumericalError("density matrix is not Hermitian (max asymmetry " + std::to_string(asym) + ")");
        }
        const Complex tr = trace(matrix_);
        if (std::abs(tr - Complex{1.0}) > kDensityTraceTolerance) {
            throw NumericalError("density matrix trace " + std::to_string(tr.real()) + " differs from 1");
        }
    }

    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

private:
    ComplexMatrix matrix_;
};

/// rho = |psi><psi|.
inline DensityMatrix density_from_state(const StateVector& psi) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(std::move(m));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, std::size_t dim_a, std::size_t dim_b) {
    if (rho.dim() != dim_a * dim_b) {
        throw DimensionError("partial_trace: density dimension " + std::to_string(rho.dim()) + " is not " +
                             std::to_string(dim_a) + "*" + std::to_string(dim_b));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (std::size_t i = 0; i < dim_a; ++i)
            for (std::size_t ip = 0; ip < dim_a; ++ip)
                for (std::size_t j = 0; j < dim_b; ++j) out(i, ip) += rho(i * dim_b + j, ip * dim_b + j);
        return DensityMatrix(std::move(out));
    }
    ComplexMatrix out(dim_b, dim_b);
    for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t jp = 0; jp < dim_b; ++jp)
            for (std::size_t i = 0; i < dim_a; ++i) out(j, jp) += rho(i * dim_b + j, i * dim_b + jp);
    return DensityMatrix(std::move(out));
}

/// tr(rho^2).
inline double purity(const DensityMatrix& rho) { return trace_product(rho.matrix(), rho.matrix()).real(); }

inline bool passes_purity_gate(const DensityMatrix& rho) { return std::abs(purity(rho) - 1.0) <= kPurityGate; }

inline bool is_positive_semidefinite(const DensityMatrix& rho) {
    const auto ev = herm_eigvals(rho.matrix());
    return ev.front() >= -kDensityPositivityTolerance;
}

}  // namespace entangle
