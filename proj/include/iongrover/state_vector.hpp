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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace iongrover {

using Complex = std::complex<double>;

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 6;

/// Tolerance for unitarity and normalization checks.
inline constexpr double kUnitaryTol = 1e-9;

using Mat2 = std::array<Complex, 4>;   // row-major 2x2
using Mat4 = std::array<Complex, 16>;  // row-major 4x4

/// A computational basis label. Qubit 0 is the leftmost character and the
/// most significant bit of the index.
class BasisLabel {
  public:
    BasisLabel(std::size_t n_qubits, std::size_t index);

    /// Parses a '0'/'1' string; throws std::invalid_argument otherwise.
    static BasisLabel parse(std::string_view bits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t index() const { return index_; }
    std::string bits() const;
    bool bit(std::size_t qubit) const;

    bool operator==(const BasisLabel &) const = default;

  private:
    std::size_t n_qubits_;
    std::size_t index_;
};

/// Formats `index` as an n-character big-endian bit string.
std::string label_string(std::size_t index, std::size_t n_qubits);

/// Probability vector over 2^n measurement outcomes, ordered by label index.
class Distribution {
  public:
    Distribution() = default;
    /// Validates non-negativity and normalization (within 1e-9).
    explicit Distribution(std::vector<double> probs);

    static Distribution uniform(std::size_t n_qubits);
    static Distribution point_mass(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t k) const { return probs_[k]; }
    double at(std::string_view bits) const;
    const std::vector<double> &probs() const { return probs_; }

  private:
    std::size_t n_qubits_ = 0;
    std::vector<double> probs_;
};

/// Dense state vector over n <= 6 qubits. Immutable: every gate application
/// returns a new state.
class StateVector {
  public:
    /// Throws std::invalid_argument if the length is not a power of two in
    /// range or the vector is not normalized.
    explicit StateVector(std::vector<Complex> amps);

    static StateVector basis(std::size_t n_qubits, const BasisLabel &label);
    static StateVector basis(std::size_t n_qubits, std::string_view bits);
    static StateVector zero(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amps() const { return amps_; }
    Complex operator[](std::size_t k) const { return amps_[k]; }

    double norm_squared() const;

    StateVector apply_one_qubit(std::size_t q, const Mat2 &u) const;
    /// `u` acts on the ordered pair (qa, qb); qa is the more significant
    /// index of the 4x4 matrix.
    StateVector apply_two_qubit(std::size_t qa, std::size_t qb, const Mat4 &u) const;

    Distribution probabilities() const;

    /// Multinomial draw of `shots` outcomes. Deterministic for a given seed.
    std::map<std::string, std::uint64_t> sample(std::uint64_t shots, std::uint64_t seed) const;

  private:
    struct Unchecked {};
    StateVector(std::vector<Complex> amps, std::size_t n_qubits, Unchecked);

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

StateVector init_basis(std::size_t n_qubits, std::string_view bits);

bool is_unitary(const Mat2 &u, double tol = kUnitaryTol);
bool is_unitary(const Mat4 &u, double tol = kUnitaryTol);

/// Draws `shots` outcomes from `dist`; counts keyed by bit label.
std::map<std::string, std::uint64_t> sample_distribution(
    const Distribution &dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace iongrover
