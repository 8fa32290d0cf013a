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

#include "entangle/ensemble.hpp"

#include <cmath>

#include "gtest/gtest.h"

using namespace entangle;

TEST(ensemble, splitmix64_reference_sequence) {
    SplitMix64 g(0);
    EXPECT_EQ(g(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(g(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(g(), 0x06C45D188009454FULL);
}

TEST(ensemble, uniform_ranges) {
    SplitMix64 g(9);
    for (int i = 0; i < 10000; ++i) {
        const double a = g.uniform();
        const double b = g.uniform_open_closed();
        EXPECT_GE(a, 0.0);
        EXPECT_LT(a, 1.0);
        EXPECT_GT(b, 0.0);
        EXPECT_LE(b, 1.0);
    }
}

TEST(ensemble, haar_sampling_is_deterministic) {
    SplitMix64 a = sample_generator(2024, 17);
    SplitMix64 b = sample_generator(2024, 17);
    const auto x = haar_random_pure(4, a);
    const auto y = haar_random_pure(4, b);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(x[i].real(), y[i].real());
        EXPECT_EQ(x[i].imag(), y[i].imag());
    }
    SplitMix64 c = sample_generator(2024, 18);
    EXPECT_NE(haar_random_pure(4, c)[0], x[0]);
}

TEST(ensemble, haar_samples_are_normalised) {
    for (std::size_t dim : {4u, 9u}) {
        for (std::uint64_t i = 0; i < 2000; ++i) {
            SplitMix64 g = sample_generator(5, i);
            const auto psi = haar_random_pure(dim, g);
            double n2 = 0.0;
            for (const auto& a : psi.amplitudes()) n2 += std::norm(a);
            EXPECT_NEAR(std::sqrt(n2), 1.0, 1e-12);
        }
    }
    SplitMix64 g(1);
    EXPECT_THROW(haar_random_pure(6, g), DimensionError);
}

TEST(ensemble, haar_mean_reduced_purity) {
    // Haar average of tr(rho_A^2) is (d_A + d_B) / (d_A d_B + 1) = 4/5 for two qubits.
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        SplitMix64 g = sample_generator(99, static_cast<std::uint64_t>(i));
        const auto rho = density_from_state(haar_random_pure(4, g));
        sum += purity(partial_trace(rho, Subsystem::A, 2, 2));
    }
    EXPECT_NEAR(sum / n, 0.8, 0.01);
}

TEST(ensemble, qubit_sweep_passes) {
    const auto rep = property_sweep({.samples = 2000, .local_dim = 2, .seed = 42, .tol = 1e-9, .workers = 2});
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.failures, 0u);
    EXPECT_EQ(rep.worst_residuals.size(), sweep_residual_keys(2).size());
    for (const auto& [name, value] : rep.worst_residuals) {
        EXPECT_GE(value, 0.0) << name;
        EXPECT_LE(value, 1e-10) << name;
    }
}

TEST(ensemble, single_sample_sweep) {
    const auto rep = property_sweep({.samples = 1, .local_dim = 2, .seed = 3, .tol = 1e-9, .workers = 4});
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.worst("oracle_det_vs_schmidt"), 1e-10);
    EXPECT_LE(rep.worst("oracle_det_vs_concurrence"), 1e-10);
}

TEST(ensemble, qutrit_sweep_roundtrip) {
    const auto rep = property_sweep({.samples = 1000, .local_dim = 3, .seed = 7, .tol = 1e-9, .workers = 3});
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(rep.worst("roundtrip"), 1e-11);
    ASSERT_TRUE(rep.p_e_min.has_value());
    EXPECT_GE(*rep.p_e_min, 0.0);
    EXPECT_LE(*rep.p_e_max, 1.0 + 1e-9);
    EXPECT_THROW((void)rep.worst("eq5"), InvalidArgument);
}

TEST(ensemble, sweep_is_independent_of_worker_count) {
    SweepOptions opt{.samples = 301, .local_dim = 2, .seed = 8, .tol = 1e-9, .workers = 1};
    const auto base = property_sweep(opt);
    for (unsigned w : {2u, 5u, 16u}) {
        opt.workers = w;
        const auto other = property_sweep(opt);
        EXPECT_EQ(other.worst_residuals, base.worst_residuals) << "workers=" << w;
        EXPECT_EQ(other.pass, base.pass);
        EXPECT_EQ(other.p_e_min, base.p_e_min);
        EXPECT_EQ(other.p_e_max, base.p_e_max);
    }
}

TEST(ensemble, worst_residual_dominates_every_sample) {
    const SweepOptions opt{.samples = 200, .local_dim = 2, .seed = 12, .tol = 1e-9, .workers = 3};
    const auto rep = property_sweep(opt);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
        SplitMix64 g = sample_generator(opt.seed, i);
        const auto sample = sample_residuals(haar_random_pure(4, g));
        for (const auto& [name, value] : sample.residuals) EXPECT_GE(rep.worst(name), value) << name;
    }
}

TEST(ensemble, sweep_rejects_bad_options) {
    EXPECT_THROW(property_sweep({.samples = 0}), InvalidArgument);
    EXPECT_THROW(property_sweep({.samples = 5, .local_dim = 5}), DimensionError);
}

TEST(ensemble, tight_tolerance_fails) {
    const auto rep = property_sweep({.samples = 50, .local_dim = 2, .seed = 1, .tol = 0.0});
    EXPECT_FALSE(rep.pass);
}
