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
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "iongrover/circuit.hpp"
#include "iongrover/state_vector.hpp"

namespace iongrover {

/// Per basis input, the distribution over basis outputs.
struct TruthTable {
    std::vector<Distribution> rows;

    std::size_t size() const { return rows.size(); }
    double operator()(std::size_t input, std::size_t output) const { return rows[input][output]; }
};

/// Maps a prepared input state through a circuit to an output distribution.
/// The default runs the circuit noiselessly.
using Evolver = std::function<Distribution(const Circuit &, const StateVector &)>;

Distribution noiseless_evolver(const Circuit &circuit, const StateVector &input);

/// Total measured probability of the marked labels.
double asp(const Distribution &measured, const std::vector<std::size_t> &marked);
double asp(const Distribution &measured, const std::vector<std::string> &marked);

/// Squared statistical overlap (sum_j sqrt(e_j m_j))^2.
double sso(const Distribution &expected, const Distribution &measured);

/// Marked labels share theoretical_asp(2^n, t) equally; the rest share the remainder.
Distribution expected_grover_distribution(std::size_t n, const std::vector<std::size_t> &marked);
Distribution expected_grover_distribution(std::size_t n, const std::vector<std::string> &marked);

/// Row k: prepare basis label k on `io_qubits` (in the listed order, first
/// listed = most significant), every other qubit |0>, evolve, and marginalize
/// onto `io_qubits`.
TruthTable truth_table(const Circuit &circuit, const std::vector<std::size_t> &io_qubits,
                       const Evolver &evolve = noiseless_evolver);

/// Mean over inputs k of tt(k, ideal[k]).
double truth_table_fidelity(const TruthTable &tt, const std::vector<std::size_t> &ideal);

/// Marginal of `dist` onto the listed qubits, first listed most significant.
Distribution marginal(const Distribution &dist, const std::vector<std::size_t> &qubits);

// Serialization. Doubles are written in shortest round-trip form so output
// is byte-stable.

std::string format_double(double value);
nlohmann::json distribution_to_json(const Distribution &dist);
Distribution distribution_from_json(const nlohmann::json &j);
/// Columns: label,probability.
std::string distribution_to_csv(const Distribution &dist);
/// Header "input,<labels...>", one row per input label.
std::string truth_table_to_csv(const TruthTable &tt);
nlohmann::json truth_table_to_json(const TruthTable &tt);

}  // namespace iongrover
