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

// Rapidity picture of a qubit Bloch vector: u = u_hat tanh(phi), the boost
// L(u) = cosh(phi) 1 + sinh(phi) sigma.u_hat with boost rapidity 2 phi, and
// rho(u) = L(u) / (2 cosh phi).

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "entangle/errors.hpp"
#include "entangle/smallmat.hpp"
#include "entangle/su_basis.hpp"

namespace entangle {

using Vec3 = std::array<double, 3>;

/// |u| above 1 - kLightConeMargin has no finite rapidity.
inline constexpr double kLightConeMargin = 1e-12;
inline constexpr double kBlochNormTolerance = 1e-10;

inline double vec_norm(const Vec3& x) { return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]); }

class RapidityParam {
public:
    [[nodiscard]] const Vec3& unit_direction() const noexcept { return direction_; }
    /// phi with |u| = tanh(phi).
    [[nodiscard]] double half_rapidity() const noexcept { return half_; }
    /// The rapidity appearing in the boost, twice half_rapidity.
    [[nodiscard]] double boost_rapidity() const noexcept { return 2.0 * half_; }

    friend RapidityParam rapidity_of(const Vec3& u);
    friend RapidityParam rapidity_from(const Vec3& direction, double half_rapidity);

private:
    RapidityParam(const Vec3& d, double half) : direction_(d), half_(half) {}

    Vec3 direction_;
    double half_;
};

inline RapidityParam rapidity_of(const Vec3& u) {
    const double r = vec_norm(u);
    if (!(r <= 1.0 - kLightConeMargin)) {
        throw InvalidArgument("boost degenerate at the light-cone (|u| = " + std::to_string(r) + ")");
    }
    if (r == 0.0) return RapidityParam({0.0, 0.0, 1.0}, 0.0);
    return RapidityParam({u[0] / r, u[1] / r, u[2] / r}, std::atanh(r));
}

/// Builds a parameter from an explicit direction and half rapidity phi >= 0.
inline RapidityParam rapidity_from(const Vec3& direction, double half_rapidity) {
    const double r = vec_norm(direction);
    if (std::abs(r - 1.0) > 1e-12) throw InvalidArgument("rapidity direction must be a unit vector");
    if (!(half_rapidity >= 0.0) || !std::isfinite(half_rapidity)) {
        throw InvalidArgument("half rapidity must be finite and non-negative");
    }
    return RapidityParam(direction, half_rapidity);
}

namespace detail {

inline ComplexMatrix sigma_dot(const Vec3& n) {
    const auto& s = pauli_set();
    return s[0] * Complex{n[0]} + s[1] * Complex{n[1]} + s[2] * Complex{n[2]};
}

}  // namespace detail

/// cosh(b/2) 1 + sinh(b/2) sigma.u_hat for boost rapidity b.
inline ComplexMatrix lorentz_boost(const RapidityParam& r) {
    const double half = 0.5 * r.boost_rapidity();
    return ComplexMatrix::identity(2) * Complex{std::cosh(half)} +
           detail::sigma_dot(r.unit_direction()) * Complex{std::sinh(half)};
}

/// max |(1 + sigma.u)/2 - L(u) / (2 cosh phi)| entrywise.
inline double boost_density_residual(const Vec3& u) {
    const RapidityParam r = rapidity_of(u);
    const ComplexMatrix rho = (ComplexMatrix::identity(2) + detail::sigma_dot(u)) * Complex{0.5};
    const ComplexMatrix from_boost = lorentz_boost(r) * Complex{1.0 / (2.0 * std::cosh(r.half_rapidity()))};
    return max_abs_diff(rho, from_boost);
}

/// P_E = sqrt(1 - |u|^2) = 1 / cosh(phi), the reciprocal Lorentz factor.
inline double degree_hyperbolic(const Vec3& u) {
    const double r = vec_norm(u);
    if (r > 1.0 + kBlochNormTolerance) {
        throw InvalidArgument("invalid Bloch vector (|u| = " + std::to_string(r) + ")");
    }
    if (r < 1.0 - kLightConeMargin) return 1.0 / std::cosh(std::atanh(r));
    if (r >= 1.0) return 0.0;
    return std::sqrt((1.0 - r) * (1.0 + r));
}

}  // namespace entangle
