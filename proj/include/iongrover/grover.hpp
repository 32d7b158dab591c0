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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iongrover/circuit.hpp"
#include "iongrover/decompose.hpp"
#include "iongrover/state_vector.hpp"

namespace iongrover {

enum class OracleStyle { boolean, phase };

std::string to_string(OracleStyle style);
OracleStyle parse_style(const std::string &s);

/// Largest data register the oracle and amplification builders support.
inline constexpr std::size_t kMaxDataQubits = 3;

/// A set of marked n-bit labels and how the oracle marks them.
class OracleSpec {
  public:
    /// Throws std::invalid_argument on an empty set, duplicate or malformed
    /// labels, or labels of the wrong width.
    OracleSpec(std::size_t n, const std::vector<std::string> &marked, OracleStyle style);

    std::size_t n() const { return n_; }
    OracleStyle style() const { return style_; }
    /// Marked label indices in ascending order.
    const std::vector<std::size_t> &marked() const { return marked_; }
    std::vector<std::string> marked_labels() const;
    bool is_marked(std::size_t index) const;
    OracleSpec with_style(OracleStyle style) const;

  private:
    std::size_t n_;
    std::vector<std::size_t> marked_;
    OracleStyle style_;
};

void to_json(nlohmann::json &j, const OracleSpec &spec);
OracleSpec oracle_from_json(const nlohmann::json &j);

/// Register layout of a synthesized oracle. Data qubits come first, then the
/// Boolean target ancilla, then an optional helper ancilla used by Toffoli-4.
struct OracleCircuit {
    Circuit circuit;
    std::size_t data_qubits = 0;
    std::optional<std::size_t> target_ancilla;
    std::optional<std::size_t> helper_ancilla;
};

struct GroverConfig {
    OracleSpec oracle;
    std::size_t iterations = 1;
    ChiSigns signs{};
};

struct GroverRunResult {
    Distribution data_distribution;
    std::size_t circuit_xx_count = 0;
    std::size_t total_qubits = 0;
};

void to_json(nlohmann::json &j, const GroverRunResult &r);

/// Uniform superposition on the data qubits; for the Boolean style the extra
/// ancilla (qubit n) is taken to |1> and then to |->, so a NOT controlled on
/// the data register kicks back a phase of -1.
Circuit initialization_stage(std::size_t n, OracleStyle style);

/// Diagonal circuit with -1 on the marked labels (up to global phase).
OracleCircuit phase_oracle(const OracleSpec &spec, const ChiSigns &signs = ChiSigns{});

/// Classical reversible circuit flipping the target ancilla iff the data label
/// is marked. Any helper ancilla must start in |0> and is restored.
OracleCircuit boolean_oracle(const OracleSpec &spec, const ChiSigns &signs = ChiSigns{});

/// Dispatches on spec.style().
OracleCircuit synthesize_oracle(const OracleSpec &spec, const ChiSigns &signs = ChiSigns{});

/// Reflection about the uniform state, 2|s><s| - I, up to global phase.
Circuit amplification_stage(std::size_t n, const ChiSigns &signs = ChiSigns{});

/// Initialization, then `iterations` rounds of oracle and amplification.
/// The register is as wide as the oracle requires.
Circuit grover_circuit(const GroverConfig &config);

/// Runs from all-|0> and marginalizes the ancillas out of the probabilities.
GroverRunResult run_grover(const GroverConfig &config);

/// Marginal distribution of the first `n_data` qubits.
Distribution marginal_leading(const Distribution &dist, std::size_t n_data);

/// Single-iteration success probability t ((N - 2t)/N + 2(N - t)/N)^2 / N.
double theoretical_asp(std::size_t database_size, std::size_t solutions);

/// One classical query followed by a random guess among the rest.
double classical_asp(std::size_t database_size, std::size_t solutions);

/// All C(2^n, t) marked sets in lexicographic order.
std::vector<OracleSpec> enumerate_oracles(std::size_t n, std::size_t t, OracleStyle style = OracleStyle::phase);

}  // namespace iongrover
