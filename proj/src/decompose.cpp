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

#include "iongrover/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>

namespace iongrover {

namespace {

constexpr double kHalfPi = kPi / 2;
constexpr double kQuarterPi = kPi / 4;
constexpr double kEighthPi = kPi / 8;

void require_distinct(std::initializer_list<std::size_t> qubits) {
    std::set<std::size_t> seen(qubits);
    if (seen.size() != qubits.size()) {
        throw std::invalid_argument("template slots must name distinct qubits");
    }
}

std::size_t bit_mask(std::size_t n_qubits, std::size_t q) { return std::size_t{1} << (n_qubits - 1 - q); }

// Wraps an angle into (-pi, pi].
double wrap_pi(double a) {
    double w = std::remainder(a, 2 * kPi);
    return w <= -kPi ? w + 2 * kPi : w;
}

}  // namespace

ChiSigns::ChiSigns(int default_sign) : default_sign_(default_sign) {
    if (default_sign != 1 && default_sign != -1) {
        throw std::invalid_argument("chi sign must be +1 or -1");
    }
}

int ChiSigns::sign(std::size_t a, std::size_t b) const {
    auto it = signs_.find(std::minmax(a, b));
    return it == signs_.end() ? default_sign_ : it->second;
}

ChiSigns &ChiSigns::set(std::size_t a, std::size_t b, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("chi sign must be +1 or -1");
    }
    signs_[std::minmax(a, b)] = sign;
    return *this;
}

Circuit rz_template(std::size_t n_qubits, std::size_t q, double theta) {
    // Rx(pi/2) Ry(theta) Rx(-pi/2) = exp(-i theta Z / 2).
    Circuit c(n_qubits);
    c.r(q, kHalfPi, kPi).ry(q, theta).rx(q, kHalfPi);
    return c;
}

Circuit zx_interaction(std::size_t n_qubits, std::size_t a, std::size_t b, double angle, const ChiSigns &signs) {
    require_distinct({a, b});
    // The pair only supports chi = s |angle|; Ry(-sigma pi/2) maps X to
    // sigma Z on `a` with sigma chosen so that sigma * chi = angle.
    const int s = signs.sign(a, b);
    const int sigma = angle < 0 ? -s : s;
    Circuit c(n_qubits);
    c.ry(a, sigma * kHalfPi).xx(a, b, s * std::abs(angle)).ry(a, -sigma * kHalfPi);
    return c;
}

Circuit zz_interaction(std::size_t n_qubits, std::size_t a, std::size_t b, double angle, const ChiSigns &signs) {
    require_distinct({a, b});
    const int s = signs.sign(a, b);
    const int sigma = angle < 0 ? -s : s;
    Circuit c(n_qubits);
    c.ry(a, sigma * kHalfPi).ry(b, kHalfPi).xx(a, b, s * std::abs(angle)).ry(b, -kHalfPi).ry(a, -sigma * kHalfPi);
    return c;
}

Circuit cnot_template(std::size_t n_qubits, std::size_t control, std::size_t target, const ChiSigns &signs) {
    // CNOT = exp(i pi/4 (1 - Z_c)(1 - X_t))
    //      ~ exp(-i pi/4 X_t) exp(-i pi/4 Z_c) exp(+i pi/4 Z_c X_t).
    require_distinct({control, target});
    Circuit c(n_qubits);
    c.rx(target, kHalfPi);
    c.append(rz_template(n_qubits, control, kHalfPi));
    c.append(zx_interaction(n_qubits, control, target, -kQuarterPi, signs));
    return c;
}

Circuit cz_template(std::size_t n_qubits, std::size_t qa, std::size_t qb, const ChiSigns &signs) {
    require_distinct({qa, qb});
    Circuit c(n_qubits);
    c.append(rz_template(n_qubits, qa, kHalfPi));
    c.append(rz_template(n_qubits, qb, kHalfPi));
    c.append(zz_interaction(n_qubits, qa, qb, -kQuarterPi, signs));
    return c;
}

Circuit controlled_sqrt_x(std::size_t n_qubits, std::size_t control, std::size_t target, int power,
                          const ChiSigns &signs) {
    // C(V^{+-1}) with V^2 = X: exp(+-i pi/8 (1 - Z_c)(1 - X_t)).
    require_distinct({control, target});
    if (power != 1 && power != -1) {
        throw std::invalid_argument("power must be +1 or -1");
    }
    Circuit c(n_qubits);
    c.rx(target, power * kQuarterPi);
    c.append(rz_template(n_qubits, control, power * kQuarterPi));
    c.append(zx_interaction(n_qubits, control, target, -power * kEighthPi, signs));
    return c;
}

Circuit toffoli3_template(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t target,
                          const ChiSigns &signs) {
    require_distinct({c1, c2, target});
    Circuit c(n_qubits);
    c.append(controlled_sqrt_x(n_qubits, c2, target, +1, signs));
    c.append(cnot_template(n_qubits, c1, c2, signs));
    c.append(controlled_sqrt_x(n_qubits, c2, target, -1, signs));
    c.append(cnot_template(n_qubits, c1, c2, signs));
    c.append(controlled_sqrt_x(n_qubits, c1, target, +1, signs));
    return c;
}

Circuit ccz_template(std::size_t n_qubits, std::size_t qa, std::size_t qb, std::size_t qc,
                     const ChiSigns &signs) {
    require_distinct({qa, qb, qc});
    Circuit c(n_qubits);
    c.ry(qc, kHalfPi);
    c.append(toffoli3_template(n_qubits, qa, qb, qc, signs));
    c.ry(qc, -kHalfPi);
    return c;
}

Circuit relative_phase_toffoli(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t target,
                               const ChiSigns &signs) {
    require_distinct({c1, c2, target});
    Circuit c(n_qubits);
    c.ry(target, kQuarterPi);
    c.append(cnot_template(n_qubits, c2, target, signs));
    c.ry(target, kQuarterPi);
    c.append(cnot_template(n_qubits, c1, target, signs));
    c.ry(target, -kQuarterPi);
    c.append(cnot_template(n_qubits, c2, target, signs));
    c.ry(target, -kQuarterPi);
    return c;
}

Circuit toffoli4_template(std::size_t n_qubits, std::size_t c1, std::size_t c2, std::size_t c3,
                          std::size_t target, std::size_t ancilla, const ChiSigns &signs) {
    // The relative phase of the compute step is diagonal on (c1, c2, ancilla)
    // and commutes with the middle Toffoli, so the uncompute step cancels it.
    require_distinct({c1, c2, c3, target, ancilla});
    Circuit c(n_qubits);
    c.append(relative_phase_toffoli(n_qubits, c1, c2, ancilla, signs));
    c.append(toffoli3_template(n_qubits, ancilla, c3, target, signs));
    c.append(relative_phase_toffoli(n_qubits, c1, c2, ancilla, signs));
    return c;
}

bool equivalent_up_to_global_phase(const Unitary &u, const Unitary &v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw std::invalid_argument("unitaries have different dimensions");
    }
    const Unitary overlap = v.adjoint() * u;
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    overlap.cwiseAbs().maxCoeff(&r, &c);
    const Complex pivot = overlap(r, c);
    if (std::abs(pivot) == 0.0) {
        return false;
    }
    const Complex phase = pivot / std::abs(pivot);
    return (u - phase * v).cwiseAbs().maxCoeff() < tol;
}

CostReport toffoli_n_cost(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("Toffoli-n cost needs n >= 3");
    }
    return CostReport{n, 6 * n - 13, (n - 2) / 2};
}

Circuit fuse_rotations(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    std::vector<std::optional<Gate>> out;
    std::vector<std::vector<std::size_t>> wire(n);

    for (const auto &g : circuit.gates()) {
        if (const auto *x = std::get_if<XXGate>(&g)) {
            wire[x->qa].push_back(out.size());
            wire[x->qb].push_back(out.size());
            out.emplace_back(g);
            continue;
        }
        RotationGate rot = std::get<RotationGate>(g);
        auto &stack = wire[rot.qubit];
        if (!stack.empty()) {
            if (auto *prev = std::get_if<RotationGate>(&*out[stack.back()])) {
                const double dphi = wrap_pi(rot.phi - prev->phi);
                std::optional<double> merged;
                if (std::abs(dphi) < 1e-12) {
                    merged = prev->theta + rot.theta;
                } else if (std::abs(std::abs(dphi) - kPi) < 1e-12) {
                    // R(theta, phi + pi) = R(-theta, phi).
                    merged = prev->theta - rot.theta;
                }
                if (merged) {
                    // R(theta + 4 pi, phi) = R(theta, phi).
                    double theta = std::remainder(*merged, 4 * kPi);
                    if (std::abs(theta) < 1e-12) {
                        out[stack.back()].reset();
                        stack.pop_back();
                    } else {
                        prev->theta = theta;
                    }
                    continue;
                }
            }
        }
        if (std::abs(std::remainder(rot.theta, 4 * kPi)) < 1e-12) {
            continue;
        }
        stack.push_back(out.size());
        out.emplace_back(rot);
    }

    Circuit fused(n);
    for (const auto &g : out) {
        if (g) {
            fused.push(*g);
        }
    }
    return fused;
}

Unitary permutation_unitary(std::size_t n_qubits, const std::function<std::size_t(std::size_t)> &map) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Unitary u = Unitary::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        u(static_cast<Eigen::Index>(map(static_cast<std::size_t>(k))), k) = 1.0;
    }
    return u;
}

Unitary mcx_unitary(std::size_t n_qubits, const std::vector<std::size_t> &controls, std::size_t target) {
    std::size_t control_mask = 0;
    for (auto q : controls) {
        control_mask |= bit_mask(n_qubits, q);
    }
    const std::size_t target_mask = bit_mask(n_qubits, target);
    return permutation_unitary(n_qubits, [=](std::size_t k) {
        return (k & control_mask) == control_mask ? k ^ target_mask : k;
    });
}

Unitary mcz_unitary(std::size_t n_qubits, const std::vector<std::size_t> &qubits) {
    std::size_t mask = 0;
    for (auto q : qubits) {
        mask |= bit_mask(n_qubits, q);
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Unitary u = Unitary::Identity(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        if ((static_cast<std::size_t>(k) & mask) == mask) {
            u(k, k) = -1.0;
        }
    }
    return u;
}

}  // namespace iongrover
