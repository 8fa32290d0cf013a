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

// Reference states with known degrees of entanglement.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "entangle/bloch.hpp"
#include "entangle/entanglement.hpp"
#include "entangle/hyperbolic.hpp"
#include "entangle/quantum_state.hpp"
#include "entangle/smallmat.hpp"
#include "entangle/su_basis.hpp"

namespace entangle::fixtures {

/// (|00> + |01> + |11>) / sqrt 3
inline StateVector three_term_state() {
    const double s = 1.0 / std::sqrt(3.0);
    return state_from_amplitudes({s, s, 0.0, s}, 2, 2);
}

/// [|00> + 2(|01> + |11>)] / 3
inline StateVector weighted_three_term_state() {
    return state_from_amplitudes({1.0 / 3.0, 2.0 / 3.0, 0.0, 2.0 / 3.0}, 2, 2);
}

/// (|00> + |11>) / sqrt 2
inline StateVector bell_state() {
    const double s = 1.0 / std::sqrt(2.0);
    return state_from_amplitudes({s, 0.0, 0.0, s}, 2, 2);
}

/// (|00> + |11> + |22>) with the non-normalising 1/3 prefactor; renormalised
/// on construction, so the warning flag is set.
inline StateVector qutrit_diagonal_state() {
    const double t = 1.0 / 3.0;
    return state_from_amplitudes({t, 0.0, 0.0, 0.0, t, 0.0, 0.0, 0.0, t}, 3, 3);
}

/// (1 + sigma.n) / 2
inline DensityMatrix qubit_density(const Vec3& n) {
    const auto& s = pauli_set();
    ComplexMatrix m = ComplexMatrix::identity(2);
    for (std::size_t i = 0; i < 3; ++i) m += s[i] * Complex{n[i]};
    m *= Complex{0.5};
    return DensityMatrix(std::move(m));
}

/// rho_A(u) (x) rho_B(v).
inline DensityMatrix product_density(const Vec3& u, const Vec3& v) {
    return DensityMatrix(kron(qubit_density(u).matrix(), qubit_density(v).matrix()));
}

/// Degree of entanglement through the determinant route for a density matrix
/// that passes the purity gate.
inline double degree_of_density(const DensityMatrix& rho) {
    if (!passes_purity_gate(rho)) throw NumericalError("reference density is not pure");
    const std::size_t n = rho.dim() == 4 ? 2 : 3;
    return degree_det(AlphaMatrix(decompose(rho, generators_for(n))));
}

struct ReferenceCase {
    std::string name;
    std::string expected_label;
    double expected;
    double computed;
    bool normalization_warning = false;
};

/// The five reference rows reported by the examples command.
inline std::vector<ReferenceCase> reference_cases() {
    std::vector<ReferenceCase> out;
    auto from_state = [&](std::string name, std::string label, double expected, const StateVector& psi) {
        out.push_back({std::move(name), std::move(label), expected, degree_of_density(density_from_state(psi)),
                       psi.normalization_warning()});
    };
    from_state("Example 1", "2/3", 2.0 / 3.0, three_term_state());
    from_state("Example 2", "4/9", 4.0 / 9.0, weighted_three_term_state());
    from_state("Example 3", "1", 1.0, bell_state());
    out.push_back({"Example 4", "0", 0.0, degree_of_density(product_density({1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}))});
    from_state("Qutrit maximally entangled", "1", 1.0, qutrit_diagonal_state());
    return out;
}

}  // namespace entangle::fixtures
