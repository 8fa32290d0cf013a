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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entangle/bloch.hpp"
#include "entangle/errors.hpp"
#include "entangle/quantum_state.hpp"
#include "entangle/smallmat.hpp"
#include "entangle/su_basis.hpp"

namespace entangle {

/// -det(alpha) in [-kDeterminantClampWindow, 0) is rounding noise and clamps to 0;
/// anything more negative is reported as an error.
inline constexpr double kDeterminantClampWindow = 1e-9;
inline constexpr double kSchmidtNormTolerance = 1e-10;
/// Agreement required between the determinant route and sqrt(1 - |u|^2) in analyze().
inline constexpr double kClosedFormTolerance = 1e-10;

/// The bordered matrix [[1, v^T], [u, beta]] (4x4 for qubits, 9x9 for qutrits).
class AlphaMatrix {
public:
    explicit AlphaMatrix(const BlochForm& bf) : matrix_(bf.beta.rows() + 1, bf.beta.cols() + 1) {
        const std::size_t k = bf.beta.rows();
        if (bf.u.size() != k || bf.v.size() != k || bf.beta.cols() != k) {
            throw DimensionError("BlochForm component sizes are inconsistent");
        }
        matrix_(0, 0) = 1.0;
        for (std::size_t j = 0; j < k; ++j) matrix_(0, j + 1) = bf.v[j];
        for (std::size_t i = 0; i < k; ++i) {
            matrix_(i + 1, 0) = bf.u[i];
            for (std::size_t j = 0; j < k; ++j) matrix_(i + 1, j + 1) = bf.beta(i, j);
        }
    }

    [[nodiscard]] const RealMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.rows(); }
    double operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

private:
    RealMatrix matrix_;
};

inline AlphaMatrix alpha_matrix(const BlochForm& bf) { return AlphaMatrix(bf); }

/// P_E = (-det alpha)^{1/4}. The caller is responsible for having checked
/// that the source state is pure.
inline double degree_det(const AlphaMatrix& alpha) {
    double d = -det_real(alpha.matrix());
    if (d < -kDeterminantClampWindow) {
        throw NumericalError("determinant sign inconsistent with purity (-det alpha = " + std::to_string(d) + ")");
    }
    if (d < 0.0) d = 0.0;
    return std::pow(d, 0.25);
}

struct SchmidtCoefficients {
    double major;  ///< kappa_1
    double minor;  ///< kappa_2 <= kappa_1
};

inline void require_two_qubits(const StateVector& psi, std::string_view op) {
    if (psi.dim_a() != 2 || psi.dim_b() != 2) {
        throw DimensionError(std::string(op) + " is defined for two qubits only");
    }
}

/// Square roots of the eigenvalues of rho_A.
inline SchmidtCoefficients schmidt_coeffs(const StateVector& psi) {
    require_two_qubits(psi, "schmidt_coeffs");
    const auto rho_a = partial_trace(density_from_state(psi), Subsystem::A, 2, 2);
    const auto ev = herm_eigvals(rho_a.matrix());
    return {std::sqrt(std::max(ev[1], 0.0)), std::sqrt(std::max(ev[0], 0.0))};
}

/// P_E = 2 kappa_1 kappa_2.
inline double degree_schmidt(const SchmidtCoefficients& kappa) {
    const double n2 = kappa.major * kappa.major + kappa.minor * kappa.minor;
    if (std::abs(n2 - 1.0) > kSchmidtNormTolerance) {
        throw InvalidArgument("Schmidt coefficients are not normalised (sum of squares " + std::to_string(n2) + ")");
    }
    return 2.0 * kappa.major * kappa.minor;
}

/// 2 |ad - bc| for amplitudes (a, b, c, d).
inline double concurrence_pure(const StateVector& psi) {
    require_two_qubits(psi, "concurrence_pure");
    return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

/// Max-abs residuals of the identities a pure two-qubit Bloch form satisfies.
struct ConstraintResiduals {
    double eq5 = 0.0;               ///< beta v - u
    double eq6 = 0.0;               ///< beta^T u - v
    double eq7 = 0.0;               ///< sum beta_ij^2 - (3 - |u|^2 - |v|^2)
    double eq8 = 0.0;               ///< beta_ij - (u_i v_j - (-1)^{i+j} M_ij)
    double u_eq_v = 0.0;            ///< | |u| - |v| |
    double detbeta_identity = 0.0;  ///< | -det beta - (1 - |u|^2) |

    [[nodiscard]] std::array<std::pair<std::string_view, double>, 6> items() const {
        return {{{"eq5", eq5},
                 {"eq6", eq6},
                 {"eq7", eq7},
                 {"eq8", eq8},
                 {"u_eq_v", u_eq_v},
                 {"detbeta_identity", detbeta_identity}}};
    }

    [[nodiscard]] double max() const {
        double m = 0.0;
        for (const auto& [name, value] : items()) m = std::max(m, value);
        return m;
    }
};

namespace detail {

// Unsigned 2x2 minor of a 3x3 matrix with row r and column c removed.
inline double minor3(const RealMatrix& m, std::size_t r, std::size_t c) {
    std::array<std::size_t, 2> rows{};
    std::array<std::size_t, 2> cols{};
    for (std::size_t i = 0, n = 0; i < 3; ++i)
        if (i != r) rows[n++] = i;
    for (std::size_t j = 0, n = 0; j < 3; ++j)
        if (j != c) cols[n++] = j;
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
}

}  // namespace detail

inline ConstraintResiduals purity_constraints_report(const BlochForm& bf) {
    if (bf.local_dim != 2) {
        throw DimensionError("purity constraints are only established for two qubits");
    }
    const RealMatrix& b = bf.beta;
    const auto& u = bf.u;
    const auto& v = bf.v;
    ConstraintResiduals r;

    double u2 = 0.0;
    double v2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        u2 += u[i] * u[i];
        v2 += v[i] * v[i];
    }

    double beta2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        double bv = 0.0;
        double btu = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            bv += b(i, j) * v[j];
            btu += b(j, i) * u[j];
            beta2 += b(i, j) * b(i, j);
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            const double predicted = u[i] * v[j] - sign * detail::minor3(b, i, j);
            r.eq8 = std::max(r.eq8, std::abs(b(i, j) - predicted));
        }
        r.eq5 = std::max(r.eq5, std::abs(bv - u[i]));
        r.eq6 = std::max(r.eq6, std::abs(btu - v[i]));
    }
    r.eq7 = std::abs(beta2 - (3.0 - u2 - v2));
    r.u_eq_v = std::abs(std::sqrt(u2) - std::sqrt(v2));
    r.detbeta_identity = std::abs(-det_real(b) - (1.0 - u2));
    return r;
}

struct EntanglementReport {
    std::size_t local_dim = 0;
    double p_e_det = 0.0;
    double minus_det_alpha = 0.0;  ///< raw -det(alpha) before clamping
    std::optional<double> p_e_schmidt;
    std::optional<double> concurrence;
    std::optional<SchmidtCoefficients> kappa;
    std::vector<double> u;
    std::vector<double> v;
    double u_norm = 0.0;
    double v_norm = 0.0;
    double purity = 0.0;
    std::optional<ConstraintResiduals> constraint_residuals;  ///< qubits only
    bool normalization_warning = false;
    /// Qutrit results apply the determinant formula as published; it is not
    /// established to be a faithful measure there.
    bool as_published = false;
};

/// sqrt(1 - x^2) evaluated as sqrt((1 - x)(1 + x)), clamped at zero.
inline double complement_sqrt(double x) { return std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x))); }

inline EntanglementReport analyze(const StateVector& psi) {
    if (psi.dim_a() != psi.dim_b()) {
        throw DimensionError("analyze requires equal local dimensions");
    }
    const std::size_t n = psi.dim_a();
    const GeneratorSet& basis = generators_for(n);

    EntanglementReport rep;
    rep.local_dim = n;
    rep.normalization_warning = psi.normalization_warning();

    const DensityMatrix rho = density_from_state(psi);
    rep.purity = purity(rho);
    if (!passes_purity_gate(rho)) {
        throw NumericalError("state fails the purity gate (tr rho^2 = " + std::to_string(rep.purity) + ")");
    }

    const BlochForm bf = decompose(rho, basis);
    rep.u = bf.u;
    rep.v = bf.v;
    rep.u_norm = euclidean_norm(bf.u);
    rep.v_norm = euclidean_norm(bf.v);

    const AlphaMatrix alpha(bf);
    rep.minus_det_alpha = -det_real(alpha.matrix());
    rep.p_e_det = degree_det(alpha);

    if (n == 2) {
        rep.kappa = schmidt_coeffs(psi);
        rep.p_e_schmidt = degree_schmidt(*rep.kappa);
        rep.concurrence = concurrence_pure(psi);
        rep.constraint_residuals = purity_constraints_report(bf);
        const double closed_form = complement_sqrt(rep.u_norm);
        if (std::abs(rep.p_e_det - closed_form) > kClosedFormTolerance) {
            throw NumericalError("determinant route disagrees with sqrt(1 - |u|^2): " + std::to_string(rep.p_e_det) +
                                 " vs " + std::to_string(closed_form));
        }
    } else {
        rep.as_published = true;
    }
    return rep;
}

}  // namespace entangle
