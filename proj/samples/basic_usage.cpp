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

// Computes the degree of entanglement of a two-qubit state three ways.

#include <cmath>
#include <cstdio>

#include "entangle/entangle.hpp"

int main() {
    using namespace entangle;

    const double s = 1.0 / std::sqrt(3.0);
    const StateVector psi = state_from_amplitudes({s, s, 0.0, s}, 2, 2);

    const BlochForm bf = decompose(density_from_state(psi), pauli_set());
    const double by_det = degree_det(alpha_matrix(bf));
    const double by_schmidt = degree_schmidt(schmidt_coeffs(psi));
    const double by_concurrence = concurrence_pure(psi);

    std::printf("u = (%.6f, %.6f, %.6f)\n", bf.u[0], bf.u[1], bf.u[2]);
    std::printf("P_E determinant %.15f\n", by_det);
    std::printf("P_E Schmidt     %.15f\n", by_schmidt);
    std::printf("concurrence     %.15f\n", by_concurrence);
    std::printf("1/cosh(phi)     %.15f\n", degree_hyperbolic({bf.u[0], bf.u[1], bf.u[2]}));
    return 0;
}
