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

#include "entangle/quantum_state.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "entangle/fixtures.hpp"
#include "entangle/su_basis.hpp"
#include "test_support.hpp"

using namespace entangle;

TEST(quantum_state, three_term_state_has_no_warning) {
    const auto psi = fixtures::three_term_state();
    EXPECT_FALSE(psi.normalization_warning());
    EXPECT_EQ(psi.dim(), 4u);
    double n2 = 0.0;
    for (const auto& a : psi.amplitudes()) n2 += std::norm(a);
    EXPECT_NEAR(n2, 1.0, 1e-15);
}

TEST(quantum_state, basis_state_is_exact) {
    const auto psi = state_from_amplitudes({1.0, 0.0, 0.0, 0.0}, 2, 2);
    EXPECT_FALSE(psi.normalization_warning());
    EXPECT_EQ(psi[0], Complex(1.0));
    EXPECT_EQ(psi[1], Complex(0.0));
}

TEST(quantum_state, misnormalised_qutrit_state_is_rescaled_and_flagged) {
    const auto psi = fixtures::qutrit_diagonal_state();
    EXPECT_TRUE(psi.normalization_warning());
    const double s = 1.0 / std::sqrt(3.0);
    for (std::size_t k : {0u, 4u, 8u}) EXPECT_NEAR(psi[k].real(), s, 1e-15);
    EXPECT_EQ(psi[1], Complex(0.0));
}

TEST(quantum_state, rejects_bad_input) {
    EXPECT_THROW(state_from_amplitudes({0.0, 0.0, 0.0, 0.0}, 2, 2), InvalidArgument);
    EXPECT_THROW(state_from_amplitudes({1.0, 0.0, 0.0}, 2, 2), DimensionError);
    EXPECT_THROW(state_from_amplitudes({1.0, 0.0, 0.0, 0.0}, 4, 1), DimensionError);
    EXPECT_THROW(state_from_amplitudes({NAN, 0.0, 0.0, 1.0}, 2, 2), InvalidArgument);
}

TEST(quantum_state, density_of_three_term_state) {
    const auto rho = density_from_state(fixtures::three_term_state());
    const double pattern[4][4] = {{1, 1, 0, 1}, {1, 1, 0, 1}, {0, 0, 0, 0}, {1, 1, 0, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(rho(i, j) - pattern[i][j] / 3.0), 0.0, 1e-15);
}

TEST(quantum_state, density_of_bell_state) {
    const auto rho = density_from_state(fixtures::bell_state());
    ComplexMatrix expected(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
    EXPECT_LE(max_abs_diff(rho.matrix(), expected), 1e-15);
}

TEST(quantum_state, density_of_basis_state) {
    const auto rho = density_from_state(state_from_amplitudes({1.0, 0.0, 0.0, 0.0}, 2, 2));
    EXPECT_EQ(rho.matrix(), ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0}));
}

TEST(quantum_state, density_invariants_enforced) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), NumericalError);
    ComplexMatrix m(2, 2, {Complex(0.5), Complex(0.1), Complex(0.2), Complex(0.5)});
    EXPECT_THROW(DensityMatrix{m}, NumericalError);
}

TEST(quantum_state, partial_trace_of_three_term_state) {
    const auto rho = density_from_state(fixtures::three_term_state());
    const auto rho_a = partial_trace(rho, Subsystem::A, 2, 2);
    EXPECT_LE(max_abs_diff(rho_a.matrix(), fixtures::qubit_density({2.0 / 3.0, 0.0, 1.0 / 3.0}).matrix()), 1e-15);
    const auto rho_b = partial_trace(rho, Subsystem::B, 2, 2);
    EXPECT_LE(max_abs_diff(rho_b.matrix(), fixtures::qubit_density({2.0 / 3.0, 0.0, -1.0 / 3.0}).matrix()), 1e-15);
}

TEST(quantum_state, partial_trace_of_product) {
    oracle::Rng rng(21);
    for (std::size_t n : {2u, 3u}) {
        for (int t = 0; t < 20; ++t) {
            const auto ra = oracle::random_mixed(rng, n);
            const auto rb = oracle::random_mixed(rng, n);
            const DensityMatrix joint(kron(ra.matrix(), rb.matrix()));
            EXPECT_LE(max_abs_diff(partial_trace(joint, Subsystem::A, n, n).matrix(), ra.matrix()), 1e-13);
            EXPECT_LE(max_abs_diff(partial_trace(joint, Subsystem::B, n, n).matrix(), rb.matrix()), 1e-13);
        }
    }
}

TEST(quantum_state, partial_trace_dimension_mismatch) {
    const auto rho = density_from_state(fixtures::bell_state());
    EXPECT_THROW(partial_trace(rho, Subsystem::A, 3, 3), DimensionError);
}

TEST(quantum_state, purity_examples) {
    EXPECT_NEAR(purity(density_from_state(fixtures::three_term_state())), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(purity(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25))), 0.25);
    const auto rho_a = partial_trace(density_from_state(fixtures::three_term_state()), Subsystem::A, 2, 2);
    EXPECT_NEAR(purity(rho_a), 7.0 / 9.0, 1e-15);
    EXPECT_FALSE(passes_purity_gate(DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25))));
    EXPECT_TRUE(is_positive_semidefinite(rho_a));
}

TEST(quantum_state, random_pure_state_properties) {
    oracle::Rng rng(22);
    for (std::size_t n : {2u, 3u}) {
        for (int t = 0; t < 200; ++t) {
            const auto rho = density_from_state(oracle::random_state(rng, n));
            EXPECT_NEAR(purity(rho), 1.0, 1e-12);
            EXPECT_TRUE(passes_purity_gate(rho));
            EXPECT_TRUE(is_positive_semidefinite(rho));
            EXPECT_NEAR(trace(partial_trace(rho, Subsystem::A, n, n).matrix()).real(), 1.0, 1e-12);
            EXPECT_NEAR(trace(partial_trace(rho, Subsystem::B, n, n).matrix()).real(), 1.0, 1e-12);
        }
    }
}
