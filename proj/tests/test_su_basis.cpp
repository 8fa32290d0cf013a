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

#include "entangle/su_basis.hpp"

#include <cmath>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace entangle;

namespace {

void expect_normalised(const GeneratorSet& set) {
    ASSERT_EQ(set.size(), set.dim * set.dim - 1);
    for (std::size_t i = 0; i < set.size(); ++i) {
        EXPECT_LE(max_asymmetry(set[i]), 1e-15) << "g" << i + 1;
        EXPECT_LE(std::abs(trace(set[i])), 1e-15) << "g" << i + 1;
        for (std::size_t j = 0; j < set.size(); ++j) {
            const Complex t = trace_product(set[i], set[j]);
            EXPECT_LE(std::abs(t - Complex(i == j ? 2.0 : 0.0)), 1e-15) << i << "," << j;
        }
    }
}

// H = (tr H / N) 1 + sum_i (tr(H g_i) / 2) g_i
void expect_complete(const GeneratorSet& set, std::uint64_t seed) {
    oracle::Rng rng(seed);
    for (int t = 0; t < 20; ++t) {
        const auto h = oracle::random_hermitian(rng, set.dim);
        ComplexMatrix rebuilt = set.identity * (trace(h) / static_cast<double>(set.dim));
        for (std::size_t i = 0; i < set.size(); ++i) rebuilt += set[i] * (trace_product(h, set[i]) * 0.5);
        EXPECT_LE(max_abs_diff(rebuilt, h), 1e-13);
    }
}

}  // namespace

TEST(su_basis, pauli_matrices) {
    const auto& p = pauli_set();
    const Complex i{0.0, 1.0};
    EXPECT_EQ(p.dim, 2u);
    EXPECT_EQ(p[0], ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
    EXPECT_EQ(p[1], ComplexMatrix(2, 2, {0.0, -i, i, 0.0}));
    EXPECT_EQ(p[2], ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}));
    EXPECT_EQ(p.identity, ComplexMatrix::identity(2));
    EXPECT_EQ(trace_product(p[0], p[0]), Complex(2.0));
    EXPECT_EQ(trace(p[2]), Complex(0.0));
}

TEST(su_basis, pauli_commutator) {
    const auto& p = pauli_set();
    const auto comm = p[0] * p[1] - p[1] * p[0];
    EXPECT_EQ(comm, p[2] * Complex(0.0, 2.0));
}

TEST(su_basis, pauli_normalisation) { expect_normalised(pauli_set()); }

TEST(su_basis, gellmann_normalisation_all_pairs) { expect_normalised(gellmann_set()); }

TEST(su_basis, gellmann_structure) {
    const auto& g = gellmann_set();
    const double r3 = 1.0 / std::sqrt(3.0);
    EXPECT_DOUBLE_EQ(g[7](0, 0).real(), r3);
    EXPECT_DOUBLE_EQ(g[7](1, 1).real(), r3);
    EXPECT_DOUBLE_EQ(g[7](2, 2).real(), -2.0 * r3);
    EXPECT_EQ(trace(g[4]), Complex(0.0));
    // real symmetric: lambda_1, 3, 4, 6, 8; imaginary antisymmetric: lambda_2, 5, 7
    for (std::size_t k : {0u, 2u, 3u, 5u, 7u}) EXPECT_EQ(g[k], transpose(g[k])) << "lambda_" << k + 1;
    for (std::size_t k : {1u, 4u, 6u}) {
        EXPECT_EQ(g[k], transpose(g[k]) * Complex(-1.0)) << "lambda_" << k + 1;
        for (const auto& e : g[k].entries()) EXPECT_EQ(e.real(), 0.0);
    }
}

TEST(su_basis, completeness) {
    expect_complete(pauli_set(), 1);
    expect_complete(gellmann_set(), 2);
}

TEST(su_basis, cached_and_dispatch) {
    EXPECT_EQ(&pauli_set(), &generators_for(2));
    EXPECT_EQ(&gellmann_set(), &generators_for(3));
    EXPECT_THROW(generators_for(4), DimensionError);
}
