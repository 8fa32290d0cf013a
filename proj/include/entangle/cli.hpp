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

// Command implementations behind the entangle executable. Each command writes
// its result to `out`, diagnostics to `err`, and returns the process exit code.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entangle/ensemble.hpp"
#include "entangle/entanglement.hpp"
#include "entangle/errors.hpp"
#include "entangle/fixtures.hpp"
#include "entangle/quantum_state.hpp"

namespace entangle::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr double kExamplesTolerance = 1e-12;

struct StateFile {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::vector<Complex> amplitudes;
};

/// Parses {"dims": [a, b], "amplitudes": [[re, im], ...]}.
inline StateFile parse_state_file(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("state file must be a JSON object");
    if (!doc.contains("dims") || !doc.contains("amplitudes")) {
        throw InvalidArgument("state file needs 'dims' and 'amplitudes'");
    }
    const Json& dims = doc["dims"];
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() || !dims[1].is_number_unsigned()) {
        throw InvalidArgument("'dims' must be two non-negative integers");
    }
    StateFile sf;
    sf.dim_a = dims[0].get<std::size_t>();
    sf.dim_b = dims[1].get<std::size_t>();

    const Json& amps = doc["amplitudes"];
    if (!amps.is_array()) throw InvalidArgument("'amplitudes' must be an array");
    for (const Json& a : amps) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw InvalidArgument("each amplitude must be a [re, im] pair of numbers");
        }
        sf.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    if (sf.amplitudes.size() != sf.dim_a * sf.dim_b) {
        throw InvalidArgument("expected " + std::to_string(sf.dim_a * sf.dim_b) + " amplitudes for dims [" +
                              std::to_string(sf.dim_a) + ", " + std::to_string(sf.dim_b) + "], got " +
                              std::to_string(sf.amplitudes.size()));
    }
    return sf;
}

/// 15 significant digits, always carrying a decimal point or exponent so the
/// value reparses as floating point.
inline std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

namespace detail {

inline void write_json(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ",\n";
                first = false;
                os << inner << Json(key).dump() << ": ";
                write_json(os, value, indent + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            // Arrays of scalars stay on one line.
            os << "[";
            bool first = true;
            for (const auto& value : j) {
                if (!first) os << ", ";
                first = false;
                write_json(os, value, indent + 1);
            }
            os << "]";
            return;
        }
        case Json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

}  // namespace detail

inline std::string format_json(const Json& j) {
    std::ostringstream os;
    detail::write_json(os, j, 0);
    os << "\n";
    return os.str();
}

inline Json report_to_json(const EntanglementReport& r) {
    Json j;
    j["local_dim"] = r.local_dim;
    j["p_e_det"] = r.p_e_det;
    j["minus_det_alpha"] = r.minus_det_alpha;
    j["p_e_schmidt"] = r.p_e_schmidt ? Json(*r.p_e_schmidt) : Json(nullptr);
    j["concurrence"] = r.concurrence ? Json(*r.concurrence) : Json(nullptr);
    j["kappa"] = r.kappa ? Json::array({r.kappa->major, r.kappa->minor}) : Json(nullptr);
    j["u"] = r.u;
    j["v"] = r.v;
    j["u_norm"] = r.u_norm;
    j["v_norm"] = r.v_norm;
    j["purity"] = r.purity;
    if (r.constraint_residuals) {
        Json c = Json::object();
        for (const auto& [name, value] : r.constraint_residuals->items()) c[std::string(name)] = value;
        j["constraint_residuals"] = c;
    } else {
        j["constraint_residuals"] = nullptr;
    }
    j["normalization_warning"] = r.normalization_warning;
    j["as_published"] = r.as_published;
    return j;
}

inline std::string format_table(const EntanglementReport& r) {
    std::ostringstream os;
    auto row = [&](std::string_view label, const std::string& value) {
        os << std::left << std::setw(26) << label << value << "\n";
    };
    auto vec = [](const std::vector<double>& x) {
        std::string s = "(";
        for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + format_double(x[i]);
        return s + ")";
    };
    row("local dimension", std::to_string(r.local_dim) + " x " + std::to_string(r.local_dim));
    row("P_E (determinant)", format_double(r.p_e_det) + (r.as_published ? "  [as published]" : ""));
    row("-det alpha", format_double(r.minus_det_alpha));
    if (r.p_e_schmidt) row("P_E (Schmidt)", format_double(*r.p_e_schmidt));
    if (r.concurrence) row("concurrence", format_double(*r.concurrence));
    if (r.kappa) row("Schmidt coefficients", format_double(r.kappa->major) + ", " + format_double(r.kappa->minor));
    row("u", vec(r.u));
    row("v", vec(r.v));
    row("|u|", format_double(r.u_norm));
    row("|v|", format_double(r.v_norm));
    row("purity", format_double(r.purity));
    if (r.constraint_residuals) {
        for (const auto& [name, value] : r.constraint_residuals->items()) {
            row("residual " + std::string(name), format_double(value));
        }
    }
    row("normalization warning", r.normalization_warning ? "yes" : "no");
    return os.str();
}

enum class OutputFormat { Json, Table };

inline int cmd_analyze(const std::string& input_path, OutputFormat format, std::ostream& out, std::ostream& err) {
    std::ifstream in(input_path);
    if (!in) {
        err << "error: cannot open " << input_path << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const StateFile sf = parse_state_file(buf.str());
        const StateVector psi = state_from_amplitudes(sf.amplitudes, sf.dim_a, sf.dim_b);
        if (psi.normalization_warning()) err << "warning: input amplitudes were renormalised\n";
        const EntanglementReport rep = analyze(psi);
        out << (format == OutputFormat::Json ? format_json(report_to_json(rep)) : format_table(rep));
        return kExitOk;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

inline std::string format_sweep(const SweepReport& r) {
    std::ostringstream os;
    os << "samples " << r.samples << "  dim " << r.local_dim << "  seed " << r.seed << "  tol " << format_double(r.tol)
       << "\n";
    char buf[64];
    for (const auto& [name, value] : r.worst_residuals) {
        std::snprintf(buf, sizeof buf, "%.6e", value);
        os << "  " << std::left << std::setw(28) << name << buf << "\n";
    }
    if (r.local_dim == 3) {
        os << "  as-published P_E range      ";
        if (r.p_e_min && r.p_e_max) {
            os << format_double(*r.p_e_min) << " .. " << format_double(*r.p_e_max) << "\n";
        } else {
            os << "n/a\n";
        }
        os << "  undefined determinant       " << r.undefined_determinant << "\n";
    }
    os << "  failures                    " << r.failures << "\n";
    if (r.first_failure_index) {
        os << "  first failure               sample " << *r.first_failure_index << ": " << r.first_failure_message
           << "\n";
    }
    os << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

inline int cmd_verify(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.local_dim != 2 && opt.local_dim != 3) {
        err << "error: --dim must be 2 or 3\n";
        return kExitUsage;
    }
    if (opt.samples < 1) {
        err << "error: --samples must be at least 1\n";
        return kExitUsage;
    }
    if (!(opt.tol >= 0.0)) {
        err << "error: --tol must be non-negative\n";
        return kExitUsage;
    }
    const SweepReport rep = property_sweep(opt);
    out << format_sweep(rep);
    return rep.pass ? kExitOk : kExitFailed;
}

inline int cmd_examples(std::ostream& out) {
    const auto cases = fixtures::reference_cases();
    double worst = 0.0;
    char buf[64];
    for (const auto& c : cases) {
        const double dev = std::abs(c.computed - c.expected);
        worst = std::max(worst, dev);
        std::snprintf(buf, sizeof buf, "%.3e", dev);
        out << c.name << ": expected " << c.expected_label << ", computed " << format_double(c.computed)
            << ", deviation " << buf << (c.normalization_warning ? " (input renormalised)" : "") << "\n";
    }
    std::snprintf(buf, sizeof buf, "%.3e", worst);
    const bool ok = worst <= kExamplesTolerance;
    out << "max deviation " << buf << (ok ? "  PASS" : "  FAIL") << "\n";
    return ok ? kExitOk : kExitFailed;
}

}  // namespace entangle::cli
