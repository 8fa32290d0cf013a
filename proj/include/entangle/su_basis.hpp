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
#include <string>
#include <vector>

#include "entangle/errors.hpp"
#include "entangle/smallmat.hpp"

namespace entangle {

/// Traceless Hermitian generators of SU(N), normalised to tr(g_i g_j) = 2 delta_ij,
/// together with the N x N identity.
struct GeneratorSet {
    std::size_t dim;
    std::vector<ComplexMatrix> generators;
    ComplexMatrix identity;

    [[nodiscard]] std::size_t size() const noexcept { return generators.size(); }
    [[nodiscard]] const ComplexMatrix& operator[](std::size_t i) const { return generators[i]; }
};

namespace detail {

inline GeneratorSet make_pauli_set() {
    const Complex i{0.0, 1.0};
    std::vector<ComplexMatrix> g;
    g.emplace_back(2, 2, std::initializer_list<Complex>{0.0, 1.0, 1.0, 0.0});
    g.emplace_back(2, 2, std::initializer_list<Complex>{0.0, -i, i, 0.0});
    g.emplace_back(2, 2, std::initializer_list<Complex>{1.0, 0.0, 0.0, -1.0});
    return GeneratorSet{2, std::move(g), ComplexMatrix::identity(2)};
}

inline GeneratorSet make_gellmann_set() {
    const Complex i{0.0, 1.0};
    auto zero = [] { return ComplexMatrix(3, 3); };
    std::vector<ComplexMatrix> g(8, zero());
    // lambda_1, lambda_2, lambda_3 embed the Pauli matrices in the {0,1} block.
    g[0](0, 1) = 1.0;
    g[0](1, 0) = 1.0;
    g[1](0, 1) = -i;
    g[1](1, 0) = i;
    g[2](0, 0) = 1.0;
    g[2](1, 1) = -1.0;
    // {0,2} block
    g[3](0, 2) = 1.0;
    g[3](2, 0) = 1.0;
    g[4](0, 2) = -i;
    g[4](2, 0) = i;
    // {1,2} block
    g[5](1, 2) = 1.0;
    g[5](2, 1) = 1.0;
    g[6](1, 2) = -i;
    g[6](2, 1) = i;
    const double r3 = 1.0 / std::sqrt(3.0);
    g[7](0, 0) = r3;
    g[7](1, 1) = r3;
    g[7](2, 2) = -2.0 * r3;
    return GeneratorSet{3, std::move(g), ComplexMatrix::identity(3)};
}

}  // namespace detail

/// sigma_1, sigma_2, sigma_3 in that order.
inline const GeneratorSet& pauli_set() {
    static const GeneratorSet set = detail::make_pauli_set();
    return set;
}

/// lambda_1 .. lambda_8 in the conventional enumeration.
inline const GeneratorSet& gellmann_set() {
    static const GeneratorSet set = detail::make_gellmann_set();
    return set;
}

inline const GeneratorSet& generators_for(std::size_t local_dim) {
    switch (local_dim) {
        case 2:
            return pauli_set();
        case 3:
            return gellmann_set();
        default:
            throw DimensionError("no generator set for local dimension " + std::to_string(local_dim));
    }
}

}  // namespace entangle
