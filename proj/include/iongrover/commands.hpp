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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iongrover/grover.hpp"
#include "iongrover/noise.hpp"

namespace iongrover {

inline constexpr const char *kVersion = "0.1.0";

/// Target for the Toffoli-3 truth-table fidelity when noise is "fitted".
inline constexpr double kFittedToffoli3Fidelity = 0.896;

enum class OutputFormat { json, csv };
OutputFormat parse_format(const std::string &s);

/// Where noise parameters come from: nothing, a config file, or a fit.
struct NoiseSource {
    enum class Kind { none, file, fitted } kind = Kind::none;
    std::string path;
};

/// Parses "fitted" or a file path; an empty string means no noise.
NoiseSource parse_noise_source(const std::string &arg);

/// Loads a config file. Throws std::invalid_argument on any read or parse
/// problem.
NoiseConfig load_noise_config(const std::string &path);

/// Resolved noise for a run. `fitted_p_xx` is set when the fit was used.
struct ResolvedNoise {
    NoiseConfig config;
    std::optional<double> fitted_p_xx;
};

std::optional<ResolvedNoise> resolve_noise(const NoiseSource &src, std::uint64_t seed,
                                           std::optional<std::uint64_t> trajectories);

/// A finished command: named files (relative to the output directory) and a
/// human-readable summary for stdout. Nothing is written until the whole
/// command has succeeded.
struct CommandOutput {
    std::vector<std::pair<std::string, std::string>> files;
    std::string summary;
};

struct CommonOptions {
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::json;
    NoiseSource noise;
    std::optional<std::uint64_t> trajectories;
    std::string command_line;
};

struct GateTableOptions {
    std::string gate;
    CommonOptions common;
};

struct GroverOptions {
    std::string style = "phase";
    std::vector<std::string> marked;
    bool all = false;
    std::optional<std::size_t> t;
    std::string spam_path;
    std::optional<std::uint64_t> shots;
    CommonOptions common;
};

struct TomographyOptions {
    CommonOptions common;
};

struct CostsOptions {
    std::size_t n_min = 3;
    std::size_t n_max = 10;
    CommonOptions common;
};

CommandOutput cmd_gate_table(const GateTableOptions &opts);
CommandOutput cmd_grover(const GroverOptions &opts);
CommandOutput cmd_tomography(const TomographyOptions &opts);
CommandOutput cmd_costs(const CostsOptions &opts);

/// Writes every file into `dir` (created if missing). Files are staged under
/// temporary names and renamed only after all of them are written.
void write_output(const CommandOutput &out, const std::string &dir);

/// One Grover row as the CLI reports it. Trajectory streams derive from the
/// noise config seed and `index`; shot sampling derives from `seed` and `index`.
nlohmann::json grover_row(const OracleSpec &spec, const std::optional<ResolvedNoise> &noise,
                          const std::optional<SpamModel> &spam, std::optional<std::uint64_t> shots,
                          std::uint64_t seed, std::uint64_t index);

}  // namespace iongrover
