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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entangle/cli.hpp"

int main(int argc, char** argv) {
    using namespace entangle;

    CLI::App app{"Degree of entanglement for bipartite pure states"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "json";
    auto* analyze = app.add_subcommand("analyze", "Analyze a state file");
    analyze->add_option("--input", input, "State file (JSON)")->required();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    SweepOptions sweep;
    auto* verify = app.add_subcommand("verify", "Check every identity over a seeded Haar ensemble");
    verify->add_option("--samples", sweep.samples, "Number of random states");
    verify->add_option("--dim", sweep.local_dim, "Local dimension (2 or 3)");
    verify->add_option("--seed", sweep.seed, "Ensemble seed");
    verify->add_option("--tol", sweep.tol, "Pass threshold for every residual");
    verify->add_option("--workers", sweep.workers, "Worker threads (0 = all cores); does not change the report");

    app.add_subcommand("examples", "Reproduce the reference fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    if (*analyze) {
        const auto fmt = format == "table" ? cli::OutputFormat::Table : cli::OutputFormat::Json;
        return cli::cmd_analyze(input, fmt, std::cout, std::cerr);
    }
    if (*verify) return cli::cmd_verify(sweep, std::cout, std::cerr);
    return cli::cmd_examples(std::cout);
}
