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

#include "iongrover/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace iongrover {

Mat2 r_matrix(double theta, double phi) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const Complex minus_i(0.0, -1.0);
    return {Complex(c), minus_i * std::polar(1.0, -phi) * s,
            minus_i * std::polar(1.0, phi) * s, Complex(c)};
}

Mat4 xx_matrix(double chi) {
    const Complex c(std::cos(chi));
    const Complex s(0.0, -std::sin(chi));
    const Complex z{};
    return {c, z, z, s,
            z, c, s, z,
            z, s, c, z,
            s, z, z, c};
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
}

Circuit &Circuit::r(std::size_t q, double theta, double phi) { return push(RotationGate{theta, phi, q}); }

Circuit &Circuit::xx(std::size_t qa, std::size_t qb, double chi) { return push(XXGate{chi, qa, qb}); }

Circuit &Circuit::push(const Gate &g) {
    if (const auto *rot = std::get_if<RotationGate>(&g)) {
        if (rot->qubit >= n_qubits_) {
            throw std::out_of_range("rotation qubit out of range");
        }
        if (!std::isfinite(rot->theta) || !std::isfinite(rot->phi)) {
            throw std::invalid_argument("rotation angles must be finite");
        }
    } else {
        const auto &x = std::get<XXGate>(g);
        if (x.qa >= n_qubits_ || x.qb >= n_qubits_) {
            throw std::out_of_range("XX qubit out of range");
        }
        if (x.qa == x.qb) {
            throw std::invalid_argument("XX gate needs distinct qubits");
        }
        if (!std::isfinite(x.chi)) {
            throw std::invalid_argument("XX angle must be finite");
        }
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ > n_qubits_) {
        throw std::invalid_argument("appended circuit is wider than this register");
    }
    for (const auto &g : other.gates_) {
        push(g);
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        std::visit(
            [&](const auto &g) {
                auto inv = g;
                if constexpr (std::is_same_v<std::decay_t<decltype(g)>, RotationGate>) {
                    inv.theta = -g.theta;
                } else {
                    inv.chi = -g.chi;
                }
                out.push(inv);
            },
            *it);
    }
    return out;
}

Circuit Circuit::widened(std::size_t n_qubits) const {
    if (n_qubits < n_qubits_) {
        throw std::invalid_argument("cannot narrow a circuit");
    }
    Circuit out(n_qubits);
    out.gates_ = gates_;
    return out;
}

Circuit concat(const Circuit &first, const Circuit &second) {
    Circuit out(std::max(first.n_qubits(), second.n_qubits()));
    out.append(first);
    out.append(second);
    return out;
}

StateVector apply_gate(const StateVector &state, const Gate &gate) {
    if (const auto *rot = std::get_if<RotationGate>(&gate)) {
        return state.apply_one_qubit(rot->qubit, r_matrix(rot->theta, rot->phi));
    }
    const auto &x = std::get<XXGate>(gate);
    return state.apply_two_qubit(x.qa, x.qb, xx_matrix(x.chi));
}

StateVector run(const Circuit &circuit, const StateVector &initial) {
    if (initial.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument("state and circuit qubit counts differ");
    }
    StateVector state = initial;
    for (const auto &g : circuit.gates()) {
        state = apply_gate(state, g);
    }
    return state;
}

Unitary circuit_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    Unitary u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) {
        auto out = run(circuit, StateVector::basis(n, BasisLabel(n, k)));
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = out[r];
        }
    }
    return u;
}

std::size_t xx_count(const Circuit &circuit) {
    std::size_t count = 0;
    for (const auto &g : circuit.gates()) {
        count += std::holds_alternative<XXGate>(g) ? 1 : 0;
    }
    return count;
}

void to_json(nlohmann::json &j, const Circuit &c) {
    auto gates = nlohmann::json::array();
    for (const auto &g : c.gates()) {
        if (const auto *rot = std::get_if<RotationGate>(&g)) {
            gates.push_back({{"kind", "R"}, {"q", rot->qubit}, {"theta", rot->theta}, {"phi", rot->phi}});
        } else {
            const auto &x = std::get<XXGate>(g);
            gates.push_back({{"kind", "XX"}, {"qa", x.qa}, {"qb", x.qb}, {"chi", x.chi}});
        }
    }
    j = {{"n_qubits", c.n_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(j.at("n_qubits").get<std::size_t>());
        for (const auto &g : j.at("gates")) {
            const auto kind = g.at("kind").get<std::string>();
            if (kind == "R") {
                c.r(g.at("q").get<std::size_t>(), g.at("theta").get<double>(), g.at("phi").get<double>());
            } else if (kind == "XX") {
                c.xx(g.at("qa").get<std::size_t>(), g.at("qb").get<std::size_t>(), g.at("chi").get<double>());
            } else {
                throw std::invalid_argument("unknown gate kind '" + kind + "'");
            }
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
}

}  // namespace iongrover
