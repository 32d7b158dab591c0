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
#include <map>
#include <utility>
#include <vector>

#include "iongrover/circuit.hpp"

namespace iongrover {

/// Sign of chi for each unordered qubit pair. The hardware fixes the sign per
/// pair; every XX gate a template emits on a pair carries that pair's sign.
class ChiSigns {
  public:
    explicit ChiSigns(int default_sign = +1);

    int sign(std::size_t a, std::size_t b) const;
    ChiSigns &set(std::size_t a, std::size_t b, int sign);

  private:
    int default_sign_;
    std::map<std::pair<std::size_t, std::size_t>, int> signs_;
};

/// Two-qubit gate count and ancilla count of a Toffoli-n construction.
struct CostReport {
    std::size_t n = 0;
    std::size_t xx_count = 0;
    std::size_t ancilla_count = 0;

    bool operator==(const CostReport &) const = default;
};

// Templates. Each returns a circuit on `n_qubits` wires (at least large enough
// for the named slots) built only from R and XX gates.

/// diag(1, e^{i theta}) up to global phase, as three rotations in the XY plane.
Circuit rz_template(std::size_t n_qubits, std::size_t q, double theta);

/// exp(-i angle Z_a X_b): one XX gate wrapped in basis changes on `a`.
Circuit zx_interaction(std::size_t n_qubits, std::size_t a, std::size_t b, double angle, const ChiSigns &signs);

/// exp(-i angle Z_a Z_b): one XX gate wrapped in basis changes on both qubits.
Circuit zz_interaction(std::size_t n_qubits, std::size_t a, std::size_t b, double angle, const ChiSigns &signs);

Circuit cnot_template(std::size_t n_qubits, std::size_t control, std::size_t target, const ChiSigns &signs = ChiSigns{});
Circuit cz_template(std::size_t n_qubits, std::size_t qa, std::size_t qb, const ChiSigns &signs = ChiSigns{});

/// Controlled-sqrt(X) (power = +1) or its inverse (power = -1); one XX(pi/8).
Circuit controlled_sqrt_x(std::size_t n_qubits, std::size_t control, std::size_t target, int power,
                          const ChiSigns &signs = ChiSigns{});

/// Toffoli with 5 XX gates: three at |chi| = pi/8, two at |chi| = pi/4.
Circuit toffoli3_template(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t target,
                         const ChiSigns &signs = ChiSigns{});

/// CCZ: the Toffoli template conjugated by a basis change on `qc`.
Circuit ccz_template(std::size_t n_qubits, std::size_t qa, std::size_t qb, std::size_t qc,
                     const ChiSigns &signs = ChiSigns{});

/// Toffoli up to a -1 phase on one control pattern; three CNOTs. Real and
/// self-inverse, so computing and uncomputing use the same circuit.
Circuit relative_phase_toffoli(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t target,
                               const ChiSigns &signs = ChiSigns{});

/// C^3(NOT) with 11 XX gates. The ancilla must start in |0> and is returned to |0>.
Circuit toffoli4_template(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t c3,
                          std::size_t target, std::size_t ancilla, const ChiSigns &signs = ChiSigns{});

/// True iff max|u - e^{ia} v| < tol, with the phase a read from the
/// largest-magnitude entry of v^dagger u. Throws on dimension mismatch.
bool equivalent_up_to_global_phase(const Unitary &u, const Unitary &v, double tol = kUnitaryTol);

/// 6n - 13 two-qubit gates, ceil((n - 3) / 2) ancillas. Throws for n < 3.
CostReport toffoli_n_cost(std::size_t n);

/// Merges wire-adjacent rotations sharing an axis (phi equal, or opposite,
/// mod 2 pi) and drops zero-angle rotations. The unitary is unchanged.
Circuit fuse_rotations(const Circuit &circuit);

// Reference unitaries for equivalence checks.

/// Permutation matrix of a classical reversible map on n-bit labels.
Unitary permutation_unitary(std::size_t n_qubits, const std::function<std::size_t(std::size_t)> &map);

/// Unitary of multi-controlled NOT: flips `target` when every control is 1.
Unitary mcx_unitary(std::size_t n_qubits, const std::vector<std::size_t> &controls, std::size_t target);

/// Diagonal unitary with -1 where every listed qubit is 1.
Unitary mcz_unitary(std::size_t n_qubits, const std::vector<std::size_t> &qubits);

}  // namespace iongrover
