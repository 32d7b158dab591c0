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

#include "iongrover/circuit.hpp"
#include "iongrover/metrics.hpp"

namespace iongrover {

/// Rotation sign used for input label k: +1 for even inputs (last bit 0),
/// -1 for odd inputs.
int tomography_sign(std::size_t input);

/// The circuit run for input k: global Ry(+-pi/2), `circuit`, the same global
/// Ry again. Throws std::invalid_argument unless `circuit` has 3 qubits.
Circuit tomography_circuit(const Circuit &circuit, std::size_t input);

/// 8x8 table: row k prepares |k>, runs tomography_circuit(circuit, k) through
/// `evolve` and measures in Z.
TruthTable limited_tomography(const Circuit &circuit, const Evolver &evolve = noiseless_evolver);

/// Mean of the anti-diagonal entries tt(k, 7 - k).
double tomography_success(const TruthTable &tt);

}  // namespace iongrover
