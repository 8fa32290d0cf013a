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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "entangle/bloch.hpp"
#include "entangle/entanglement.hpp"
#include "entangle/errors.hpp"
#include "entangle/hyperbolic.hpp"
#include "entangle/quantum_state.hpp"
#include "entangle/su_basis.hpp"

namespace entangle {

/// SplitMix64 (Steele, Lea, Flood). Small, fully specified, and identical on
/// every platform, which is what reproducible sweeps need.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1].
    double uniform_open_closed() noexcept { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }
    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// One Box-Muller pair of independent standard normals.
    std::pair<double, double> normal_pair() noexcept {
        const double r = std::sqrt(-2.0 * std::log(uniform_open_closed()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    [[nodiscard]] std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Generator for sample index of a sweep seeded with seed. Depends only on
/// (seed, index), so the partitioning of samples across workers is irrelevant.
inline SplitMix64 sample_generator(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(SplitMix64::mix(seed) ^ SplitMix64::mix(index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

/// Normalised vector of i.i.d. complex Gaussians; uniform on the unit sphere.
inline StateVector haar_random_pure(std::size_t total_dim, SplitMix64& rng) {
    std::size_t local = 0;
    if (total_dim == 4) {
        local = 2;
    } else if (total_dim == 9) {
        local = 3;
    } else {
        throw DimensionError("haar_random_pure supports total dimension 4 or 9, got " + std::to_string(total_dim));
    }
    std::vector<Complex> amps(total_dim);
    for (auto& a : amps) {
        const auto [re, im] = rng.normal_pair();
        a = Complex{re, im};
    }
    return state_from_amplitudes(amps, local, local);
}

using NamedResiduals = std::vector<std::pair<std::string, double>>;

inline const std::vector<std::string>& sweep_residual_keys(std::size_t local_dim) {
    static const std::vector<std::string> qubit{"eq5",
                                                "eq6",
                                                "eq7",
                                                "eq8",
                                                "u_eq_v",
                                                "detbeta_identity",
                                                "oracle_det_vs_schmidt",
                                                "oracle_det_vs_concurrence",
                                                "roundtrip",
                                                "eq12_identity",
                                                "reduced_consistency",
                                                "hyperbolic_vs_det",
                                                "det_alpha_excess"};
    static const std::vector<std::string> qutrit{"roundtrip", "reduced_consistency"};
    require_local_dim(local_dim);
    return local_dim == 2 ? qubit : qutrit;
}

/// Per-sample outcome of the sweep checks.
struct SampleResult {
    NamedResiduals residuals;
    std::optional<double> p_e_det;  ///< empty when the determinant formula is undefined
};

namespace detail {

inline double max_vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace detail

/// Runs every sweep check on one state. Throws if a component rejects the
/// state (for qubits) so the caller can count it as a failure.
inline SampleResult sample_residuals(const StateVector& psi) {
    const std::size_t n = psi.dim_a();
    const GeneratorSet& basis = generators_for(n);
    const DensityMatrix rho = density_from_state(psi);
    const BlochForm bf = decompose(rho, basis);

    const double roundtrip = max_abs_diff(reconstruct(bf, basis).matrix(), rho.matrix());
    const double reduced =
        std::max(detail::max_vec_diff(bf.u, bloch_of_reduced(partial_trace(rho, Subsystem::A, n, n), basis)),
                 detail::max_vec_diff(bf.v, bloch_of_reduced(partial_trace(rho, Subsystem::B, n, n), basis)));

    SampleResult out;
    if (n == 3) {
        out.residuals = {{"roundtrip", roundtrip}, {"reduced_consistency", reduced}};
        try {
            out.p_e_det = degree_det(AlphaMatrix(bf));
        } catch (const NumericalError&) {
            out.p_e_det.reset();
        }
        return out;
    }

    const EntanglementReport rep = analyze(psi);
    const ConstraintResiduals& c = *rep.constraint_residuals;
    const double u2 = rep.u_norm * rep.u_norm;
    const double target = (1.0 - u2) * (1.0 - u2);
    const Vec3 u{bf.u[0], bf.u[1], bf.u[2]};
    out.p_e_det = rep.p_e_det;
    out.residuals = {{"eq5", c.eq5},
                     {"eq6", c.eq6},
                     {"eq7", c.eq7},
                     {"eq8", c.eq8},
                     {"u_eq_v", c.u_eq_v},
                     {"detbeta_identity", c.detbeta_identity},
                     {"oracle_det_vs_schmidt", std::abs(rep.p_e_det - *rep.p_e_schmidt)},
                     {"oracle_det_vs_concurrence", std::abs(rep.p_e_det - *rep.concurrence)},
                     {"roundtrip", roundtrip},
                     {"eq12_identity", std::abs(rep.minus_det_alpha - target)},
                     {"reduced_consistency", reduced},
                     {"hyperbolic_vs_det", std::abs(degree_hyperbolic(u) - rep.p_e_det)},
                     {"det_alpha_excess", std::max(0.0, -rep.minus_det_alpha)}};
    return out;
}

struct SweepOptions {
    std::size_t samples = 10000;
    std::size_t local_dim = 2;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    /// 0 picks the hardware concurrency. Never affects the report.
    unsigned workers = 1;
};

struct SweepReport {
    std::size_t samples = 0;
    std::size_t local_dim = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    NamedResiduals worst_residuals;
    std::size_t failures = 0;
    std::optional<std::size_t> first_failure_index;
    std::string first_failure_message;
    /// Qutrit sweeps: samples where -det(alpha) fell outside the clamp window.
    std::size_t undefined_determinant = 0;
    std::optional<double> p_e_min;
    std::optional<double> p_e_max;
    bool pass = false;

    [[nodiscard]] double worst(std::string_view key) const {
        for (const auto& [name, value] : worst_residuals)
            if (name == key) return value;
        throw InvalidArgument("no residual named " + std::string(key));
    }
};

namespace detail {

struct PartialSweep {
    std::vector<double> worst;
    std::size_t failures = 0;
    std::optional<std::size_t> first_failure_index;
    std::string first_failure_message;
    std::size_t undefined = 0;
    std::optional<double> p_min;
    std::optional<double> p_max;

    void record_p(double p) {
        p_min = p_min ? std::min(*p_min, p) : p;
        p_max = p_max ? std::max(*p_max, p) : p;
    }

    void merge(const PartialSweep& o) {
        for (std::size_t i = 0; i < worst.size(); ++i) worst[i] = std::max(worst[i], o.worst[i]);
        failures += o.failures;
        if (o.first_failure_index && (!first_failure_index || *o.first_failure_index < *first_failure_index)) {
            first_failure_index = o.first_failure_index;
            first_failure_message = o.first_failure_message;
        }
        undefined += o.undefined;
        if (o.p_min) record_p(*o.p_min);
        if (o.p_max) record_p(*o.p_max);
    }
};

inline PartialSweep sweep_range(const SweepOptions& opt, std::size_t begin, std::size_t end) {
    const auto& keys = sweep_residual_keys(opt.local_dim);
    PartialSweep part;
    part.worst.assign(keys.size(), 0.0);
    const std::size_t total = opt.local_dim * opt.local_dim;
    for (std::size_t idx = begin; idx < end; ++idx) {
        SplitMix64 rng = sample_generator(opt.seed, idx);
        try {
            const StateVector psi = haar_random_pure(total, rng);
            const SampleResult r = sample_residuals(psi);
            for (std::size_t k = 0; k < keys.size(); ++k) {
                // NaN never compares greater, so route it to +inf explicitly.
                const double value = std::isnan(r.residuals[k].second) ? std::numeric_limits<double>::infinity()
                                                                      : r.residuals[k].second;
                part.worst[k] = std::max(part.worst[k], value);
            }
            if (r.p_e_det) {
                part.record_p(*r.p_e_det);
            } else {
                ++part.undefined;
            }
        } catch (const Error& e) {
            ++part.failures;
            if (!part.first_failure_index) {
                part.first_failure_index = idx;
                part.first_failure_message = e.what();
            }
        }
    }
    return part;
}

}  // namespace detail

/// Max-reduces sample_residuals over a seeded Haar ensemble.
inline SweepReport property_sweep(const SweepOptions& opt) {
    if (opt.samples < 1) throw InvalidArgument("property_sweep needs at least one sample");
    const auto& keys = sweep_residual_keys(opt.local_dim);

    unsigned workers = opt.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.workers;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, opt.samples));

    std::vector<detail::PartialSweep> parts(workers);
    const std::size_t chunk = (opt.samples + workers - 1) / workers;
    auto bounds = [&](unsigned w) {
        const std::size_t b = std::min<std::size_t>(opt.samples, w * chunk);
        return std::pair{b, std::min<std::size_t>(opt.samples, b + chunk)};
    };
    if (workers == 1) {
        parts[0] = detail::sweep_range(opt, 0, opt.samples);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const auto [b, e] = bounds(w);
                parts[w] = detail::sweep_range(opt, b, e);
            });
        }
        for (auto& t : pool) t.join();
    }

    detail::PartialSweep total = parts[0];
    for (unsigned w = 1; w < workers; ++w) total.merge(parts[w]);

    SweepReport rep;
    rep.samples = opt.samples;
    rep.local_dim = opt.local_dim;
    rep.seed = opt.seed;
    rep.tol = opt.tol;
    for (std::size_t k = 0; k < keys.size(); ++k) rep.worst_residuals.emplace_back(keys[k], total.worst[k]);
    rep.failures = total.failures;
    rep.first_failure_index = total.first_failure_index;
    rep.first_failure_message = total.first_failure_message;
    rep.undefined_determinant = total.undefined;
    rep.p_e_min = total.p_min;
    rep.p_e_max = total.p_max;
    rep.pass = rep.failures == 0 &&
               std::all_of(rep.worst_residuals.begin(), rep.worst_residuals.end(),
                           [&](const auto& kv) { return kv.second <= opt.tol; });
    return rep;
}

}  // namespace entangle
