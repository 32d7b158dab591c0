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
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "iongrover/state_vector.hpp"

namespace iongrover {

/// R(theta, phi): rotation by theta about the axis at azimuth phi in the XY plane.
struct RotationGate {
    double theta = 0.0;
    double phi = 0.0;
    std::size_t qubit = 0;

    bool operator==(const RotationGate &) const = default;
};

/// XX(chi) = exp(-i chi X(x)X) on an ordered pair of distinct qubits.
struct XXGate {
    double chi = 0.0;
    std::size_t qa = 0;
    std::size_t qb = 1;

    bool operator==(const XXGate &) const = default;
};

using Gate = std::variant<RotationGate, XXGate>;

using Unitary = Eigen::MatrixXcd;

Mat2 r_matrix(double theta, double phi);
Mat4 xx_matrix(double chi);

inline constexpr double kPi = 3.14159265358979323846;

/// Flat, ordered gate list over a fixed register.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }
    std::size_t size() const { return gates_.size(); }

    /// R(theta, phi) on `q`.
    Circuit &r(std::size_t q, double theta, double phi);
    Circuit &rx(std::size_t q, double theta) { return r(q, theta, 0.0); }
    Circuit &ry(std::size_t q, double theta) { return r(q, theta, kPi / 2); }
    Circuit &xx(std::size_t qa, std::size_t qb, double chi);
    Circuit &push(const Gate &g);

    /// Appends every gate of `other`, which must not use qubits beyond this register.
    Circuit &append(const Circuit &other);

    /// The inverse circuit: reversed order, every angle negated.
    Circuit inverse() const;

    /// Same gates on a larger register.
    Circuit widened(std::size_t n_qubits) const;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

Circuit concat(const Circuit &first, const Circuit &second);

StateVector apply_gate(const StateVector &state, const Gate &gate);
StateVector run(const Circuit &circuit, const StateVector &initial);

/// Column k is run(circuit, |k>).
Unitary circuit_unitary(const Circuit &circuit);

std::size_t xx_count(const Circuit &circuit);

void to_json(nlohmann::json &j, const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace iongrover
