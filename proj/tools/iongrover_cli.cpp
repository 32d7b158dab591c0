// Copyright 2026 The iongrover Authors
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

#include "CLI11.hpp"

#include "iongrover/commands.hpp"

using namespace iongrover;

namespace {

struct Shared {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string noise;
    std::uint64_t trajectories = 0;
    std::string out = ".";
};

void add_shared(CLI::App *cmd, Shared &s, bool with_noise) {
    cmd->add_option("--seed", s.seed, "Master seed");
    cmd->add_option("--format", s.format, "Results format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", s.out, "Output directory");
    if (with_noise) {
        cmd->add_option("--noise", s.noise, "Noise config file, or 'fitted'");
        cmd->add_option("--trajectories", s.trajectories, "Override the trajectory count");
    }
}

CommonOptions common(const Shared &s, const std::string &line) {
    CommonOptions c;
    c.seed = s.seed;
    c.format = parse_format(s.format);
    c.noise = parse_noise_source(s.noise);
    if (s.trajectories > 0) {
        c.trajectories = s.trajectories;
    }
    c.command_line = line;
    return c;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Trapped-ion Grover search experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Shared shared;

    auto *gate = app.add_subcommand("gate-table", "Truth table and fidelity for a decomposed gate");
    std::string gate_name;
    gate->add_option("gate", gate_name, "toffoli3, toffoli4, cnot, cz or ccz")->required();
    add_shared(gate, shared, true);

    auto *grover = app.add_subcommand("grover", "Run Grover search for one or all oracles");
    GroverOptions gopts;
    std::size_t t = 0;
    std::uint64_t shots = 0;
    grover->add_option("--style", gopts.style, "Oracle style")->check(CLI::IsMember({"phase", "boolean"}));
    grover->add_option("--marked", gopts.marked, "Marked label (repeatable)");
    grover->add_flag("--all", gopts.all, "Every oracle with --t solutions");
    grover->add_option("--t", t, "Number of solutions");
    grover->add_option("--spam", gopts.spam_path, "SPAM config file");
    grover->add_option("--shots", shots, "Sample this many shots");
    add_shared(grover, shared, true);

    auto *tomo = app.add_subcommand("tomography", "Limited tomography of the Toffoli-3 template");
    add_shared(tomo, shared, true);

    auto *costs = app.add_subcommand("costs", "Toffoli-n resource counts");
    CostsOptions copts;
    costs->add_option("--n-min", copts.n_min, "Smallest n");
    costs->add_option("--n-max", copts.n_max, "Largest n");
    add_shared(costs, shared, false);

    CLI11_PARSE(app, argc, argv);

    std::string line;
    for (int i = 1; i < argc; ++i) {
        line += (i > 1 ? " " : "") + std::string(argv[i]);
    }

    try {
        CommandOutput out;
        if (*gate) {
            out = cmd_gate_table(GateTableOptions{gate_name, common(shared, line)});
        } else if (*grover) {
            if (grover->count("--t")) {
                gopts.t = t;
            }
            if (grover->count("--shots")) {
                gopts.shots = shots;
            }
            gopts.common = common(shared, line);
            out = cmd_grover(gopts);
        } else if (*tomo) {
            out = cmd_tomography(TomographyOptions{common(shared, line)});
        } else {
            copts.common = common(shared, line);
            out = cmd_costs(copts);
        }
        write_output(out, shared.out);
        std::cout << out.summary;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
