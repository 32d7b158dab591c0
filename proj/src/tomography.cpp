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

#include "iongrover/tomography.hpp"

#include <stdexcept>

namespace iongrover {

namespace {

constexpr std::size_t kWidth = 3;

Circuit global_ry(int sign) {
    Circuit c(kWidth);
    for (std::size_t q = 0; q < kWidth; ++q) {
        c.ry(q, sign * kPi / 2);
    }
    return c;
}

}  // namespace

int tomography_sign(std::size_t input) { return (input & 1) == 0 ? 1 : -1; }

Circuit tomography_circuit(const Circuit &circuit, std::size_t input) {
    if (circuit.n_qubits() != kWidth) {
        throw std::invalid_argument("limited tomography needs a 3-qubit circuit");
    }
    if (input >= (std::size_t{1} << kWidth)) {
        throw std::out_of_range("tomography input out of range");
    }
    Circuit c = global_ry(tomography_sign(input));
    c.append(circuit);
    c.append(global_ry(tomography_sign(input)));
    return c;
}

TruthTable limited_tomography(const Circuit &circuit, const Evolver &evolve) {
    TruthTable tt;
    for (std::size_t k = 0; k < (std::size_t{1} << kWidth); ++k) {
        tt.rows.push_back(evolve(tomography_circuit(circuit, k), StateVector::basis(kWidth, BasisLabel(kWidth, k))));
    }
    return tt;
}

double tomography_success(const TruthTable &tt) {
    if (tt.size() != 8) {
        throw std::invalid_argument("tomography table must be 8x8");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        total += tt(k, 7 - k);
    }
    return total / 8.0;
}

}  // namespace iongrover
