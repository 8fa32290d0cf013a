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

// Bloch/correlation form of a bipartite density matrix over N x N local
// spaces (N = 2 or 3):
//
//   rho = (1/N^2) [ 1(x)1 + w_l sum_i u_i g_i(x)1 + w_l sum_j v_j 1(x)g_j
//                   + w_c sum_ij beta_ij g_i(x)g_j ]
//
// with (w_l, w_c) = (1, 1) for qubits and (sqrt 3, 3/2) for qutrits. Because
// tr(g_i g_j) = 2 delta_ij, projecting onto g_i(x)1 gives
// u_i = N / (2 w_l) tr(rho g_i(x)1) and beta_ij = N^2 / (4 w_c) tr(rho g_i(x)g_j).

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "entangle/errors.hpp"
#include "entangle/quantum_state.hpp"
#include "entangle/smallmat.hpp"
#include "entangle/su_basis.hpp"

namespace entangle {

/// Imaginary parts of the projecting traces above this signal non-Hermitian input.
inline constexpr double kImaginaryResidueTolerance = 1e-12;

struct BlochForm {
    std::size_t local_dim;
    std::vector<double> u;  ///< Bloch vector of A, length N^2 - 1
    std::vector<double> v;  ///< Bloch vector of B
    RealMatrix beta;        ///< correlation matrix, (N^2 - 1) x (N^2 - 1)
};

struct BasisWeights {
    double local;
    double correlation;
};

inline BasisWeights basis_weights(std::size_t local_dim) {
    switch (local_dim) {
        case 2:
            return {1.0, 1.0};
        case 3:
            return {std::sqrt(3.0), 1.5};
        default:
            throw DimensionError("no Bloch normalisation for local dimension " + std::to_string(local_dim));
    }
}

namespace detail {

inline double real_projection(const ComplexMatrix& rho, const ComplexMatrix& op) {
    const Complex t = trace_product(rho, op);
    if (std::abs(t.imag()) > kImaginaryResidueTolerance) {
        throw NumericalError("Bloch projection has imaginary residue " + std::to_string(t.imag()));
    }
    return t.real();
}

inline void require_basis_match(std::size_t local_dim, const GeneratorSet& basis) {
    if (local_dim != basis.dim) {
        throw DimensionError("local dimension " + std::to_string(local_dim) + " does not match generator set of dim " +
                             std::to_string(basis.dim));
    }
}

}  // namespace detail

inline BlochForm decompose(const DensityMatrix& rho, const GeneratorSet& basis) {
    const std::size_t n = basis.dim;
    if (rho.dim() != n * n) {
        throw DimensionError("decompose: density dimension " + std::to_string(rho.dim()) + " is not " +
                             std::to_string(n) + "^2");
    }
    const BasisWeights w = basis_weights(n);
    const double local_factor = static_cast<double>(n) / (2.0 * w.local);
    const double corr_factor = static_cast<double>(n * n) / (4.0 * w.correlation);
    const std::size_t k = basis.size();

    BlochForm bf{n, std::vector<double>(k), std::vector<double>(k), RealMatrix(k, k)};
    for (std::size_t i = 0; i < k; ++i) {
        bf.u[i] = local_factor * detail::real_projection(rho.matrix(), kron(basis[i], basis.identity));
        bf.v[i] = local_factor * detail::real_projection(rho.matrix(), kron(basis.identity, basis[i]));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            bf.beta(i, j) = corr_factor * detail::real_projection(rho.matrix(), kron(basis[i], basis[j]));
    return bf;
}

/// Evaluates the expansion literally. Hermitian and unit-trace by construction;
/// positivity is not checked.
inline DensityMatrix reconstruct(const BlochForm& bf, const GeneratorSet& basis) {
    detail::require_basis_match(bf.local_dim, basis);
    const std::size_t n = basis.dim;
    const std::size_t k = basis.size();
    if (bf.u.size() != k || bf.v.size() != k || bf.beta.rows() != k || bf.beta.cols() != k) {
        throw DimensionError("BlochForm component sizes do not match the generator set");
    }
    const BasisWeights w = basis_weights(n);
    ComplexMatrix sum = kron(basis.identity, basis.identity);
    for (std::size_t i = 0; i < k; ++i) {
        sum += kron(basis[i], basis.identity) * Complex{w.local * bf.u[i]};
        sum += kron(basis.identity, basis[i]) * Complex{w.local * bf.v[i]};
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (bf.beta(i, j) == 0.0) continue;
            sum += kron(basis[i], basis[j]) * Complex{w.correlation * bf.beta(i, j)};
        }
    sum *= Complex{1.0 / static_cast<double>(n * n)};
    return DensityMatrix(std::move(sum));
}

/// Bloch vector of a single-party density matrix, same normalisation as u and v.
inline std::vector<double> bloch_of_reduced(const DensityMatrix& rho_local, const GeneratorSet& basis) {
    detail::require_basis_match(rho_local.dim(), basis);
    const double factor = static_cast<double>(basis.dim) / (2.0 * basis_weights(basis.dim).local);
    std::vector<double> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out[i] = factor * detail::real_projection(rho_local.matrix(), basis[i]);
    }
    return out;
}

inline double euclidean_norm(const std::vector<double>& x) {
    double s = 0.0;
    for (double e : x) s += e * e;
    return std::sqrt(s);
}

}  // namespace entangle
