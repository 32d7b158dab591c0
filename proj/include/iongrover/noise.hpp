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
#include <cstdint>
#include <optional>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "iongrover/circuit.hpp"
#include "iongrover/metrics.hpp"
#include "iongrover/state_vector.hpp"

namespace iongrover {

/// Depolarizing probabilities per XX gate and per rotation.
struct NoiseModel {
    double p_xx = 0.0;
    double p_r = 0.0;

    /// Throws std::invalid_argument unless both lie in [0, 1).
    void validate() const;
};

/// Readout model. eps0: a |0> reads 1. eps1: a |1> reads 0. crosstalk: chance
/// that each bright nearest neighbour makes a dark ion read 1.
struct SpamModel {
    double eps0 = 0.0;
    double eps1 = 0.0;
    double crosstalk = 0.0;

    /// Throws std::invalid_argument unless every field lies in [0, 0.5).
    void validate() const;
    static SpamModel symmetric(double eps) { return SpamModel{eps, eps, 0.0}; }
};

/// Contents of a noise/SPAM config file. Absent keys keep these defaults.
struct NoiseConfig {
    NoiseModel noise;
    SpamModel spam;
    std::uint64_t trajectories = 1000;
    std::uint64_t seed = 0;
};

/// Strict parse: unknown keys, wrong types and out-of-range values throw
/// std::invalid_argument.
NoiseConfig noise_config_from_json(const nlohmann::json &j);
nlohmann::json to_json(const NoiseConfig &config);

/// Monte-Carlo Pauli trajectories, averaged. After each XX gate a uniformly
/// random non-identity two-qubit Pauli hits the pair with probability p_xx;
/// after each rotation a random non-identity Pauli hits the qubit with
/// probability p_r. Trajectory i draws from its own stream seeded by
/// (seed, i), so the result does not depend on the thread count.
Distribution run_noisy(const Circuit &circuit, const NoiseModel &noise, std::uint64_t trajectories,
                       std::uint64_t seed, const std::optional<StateVector> &initial = std::nullopt);

/// Evolver for truth_table that runs each row through run_noisy.
Evolver noisy_evolver(const NoiseModel &noise, std::uint64_t trajectories, std::uint64_t seed);

/// Bisects p_xx so that the Toffoli-3 truth-table fidelity under noise hits
/// `target_fidelity` at the given trajectories and seed.
double fit_p_xx(double target_fidelity, std::uint64_t trajectories, std::uint64_t seed);

/// 2^n x 2^n column-stochastic readout matrix, entry (read, true).
Eigen::MatrixXd confusion_matrix(const SpamModel &spam, std::size_t n);

Distribution apply_spam(const Distribution &true_dist, const SpamModel &spam);

/// Solves confusion * x = measured, clamps negatives to 0 and renormalizes.
/// Throws std::domain_error if the confusion matrix is singular.
Distribution correct_spam(const Distribution &measured, const SpamModel &spam);

}  // namespace iongrover
