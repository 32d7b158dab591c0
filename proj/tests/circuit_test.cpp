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

#include "gtest/gtest.h"

#include "iongrover/decompose.hpp"
#include "test_util.hpp"

using namespace iongrover;

namespace {

Unitary to_unitary(const Mat2 &m) {
    Unitary u(2, 2);
    u << m[0], m[1], m[2], m[3];
    return u;
}

Unitary to_unitary(const Mat4 &m) {
    Unitary u(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            u(r, c) = m[static_cast<std::size_t>(r * 4 + c)];
        }
    }
    return u;
}

}  // namespace

TEST(RMatrix, examples) {
    EXPECT_TRUE(to_unitary(r_matrix(0.0, 1.234)).isApprox(Unitary::Identity(2, 2), 1e-15));

    Unitary flip(2, 2);
    flip << 0.0, Complex(0, -1), Complex(0, -1), 0.0;
    EXPECT_LT((to_unitary(r_matrix(kPi, 0.0)) - flip).cwiseAbs().maxCoeff(), 1e-15);

    // R(pi/2, pi/2) = [[c, -s], [s, c]] with c = s = 1/sqrt 2.
    auto h = r_matrix(kPi / 2, kPi / 2);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_LT(std::abs(h[0] - r), 1e-15);
    EXPECT_LT(std::abs(h[2] - r), 1e-15);
    EXPECT_LT(std::abs(h[1] + r), 1e-15);
}

TEST(XXMatrix, examples) {
    EXPECT_TRUE(to_unitary(xx_matrix(0.0)).isApprox(Unitary::Identity(4, 4), 1e-15));
    const Unitary q = to_unitary(xx_matrix(kPi / 4));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_LT(std::abs(q(0, 0) - r), 1e-15);
    EXPECT_LT(std::abs(q(3, 0) - Complex(0, -r)), 1e-15);
    Unitary eighth = to_unitary(xx_matrix(kPi / 8));
    EXPECT_LT((eighth * eighth - q).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NativeMatrices, are_unitary) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        EXPECT_TRUE(is_unitary(r_matrix(angle(rng), angle(rng)), 1e-12));
        EXPECT_TRUE(is_unitary(xx_matrix(angle(rng)), 1e-12));
    }
}

TEST(Circuit, rejects_bad_gates) {
    Circuit c(3);
    EXPECT_THROW(c.xx(0, 0, 0.1), std::invalid_argument);
    EXPECT_THROW(c.xx(0, 3, 0.1), std::out_of_range);
    EXPECT_THROW(c.r(5, 0.1, 0.2), std::out_of_range);
    EXPECT_THROW(c.r(0, INFINITY, 0.2), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    EXPECT_THROW(Circuit(7), std::invalid_argument);
}

TEST(Run, examples) {
    std::mt19937_64 rng(2);
    auto psi = test_util::random_state(3, rng);
    EXPECT_LT(test_util::max_abs_diff(run(Circuit(3), psi), psi), 1e-15);

    auto bell = run(Circuit(2).xx(0, 1, kPi / 4), init_basis(2, "00"));
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_LT(std::abs(bell[0] - r), 1e-12);
    EXPECT_LT(std::abs(bell[3] - Complex(0, -r)), 1e-12);

    EXPECT_THROW(run(Circuit(2), init_basis(3, "000")), std::invalid_argument);
}

TEST(Run, rz_from_three_xy_rotations) {
    for (double theta : {0.3, kPi / 2, kPi, -2.0}) {
        Unitary ref(2, 2);
        ref << 1.0, 0.0, 0.0, std::polar(1.0, theta);
        EXPECT_TRUE(equivalent_up_to_global_phase(circuit_unitary(rz_template(1, 0, theta)), ref, 1e-9)) << theta;
    }
}

TEST(CircuitUnitary, examples) {
    EXPECT_TRUE(circuit_unitary(Circuit(3)).isApprox(Unitary::Identity(8, 8), 1e-15));
    Unitary flip(2, 2);
    flip << 0.0, Complex(0, -1), Complex(0, -1), 0.0;
    EXPECT_LT((circuit_unitary(Circuit(1).rx(0, kPi)) - flip).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(XXCount, examples) {
    EXPECT_EQ(xx_count(Circuit(2)), 0u);
    EXPECT_EQ(xx_count(Circuit(3).xx(0, 1, 0.1).rx(2, 0.3).xx(1, 2, -0.2)), 2u);
}

TEST(Circuit, inverse_undoes) {
    std::mt19937_64 rng(3);
    auto c = test_util::random_circuit(4, 30, rng);
    EXPECT_TRUE(circuit_unitary(concat(c, c.inverse())).isApprox(Unitary::Identity(16, 16), 1e-12));
}

TEST(CircuitProperty, run_is_compositional) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 5;
        auto c1 = test_util::random_circuit(n, 15, rng);
        auto c2 = test_util::random_circuit(n, 15, rng);
        auto s = test_util::random_state(n, rng);
        // Same gate sequence, same arithmetic: exact equality.
        auto joint = run(concat(c1, c2), s);
        auto staged = run(c2, run(c1, s));
        EXPECT_EQ(joint.amps(), staged.amps());
        EXPECT_TRUE((circuit_unitary(concat(c1, c2)) - circuit_unitary(c2) * circuit_unitary(c1)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST(CircuitProperty, unitary_columns_match_run) {
    std::mt19937_64 rng(5);
    auto c = test_util::random_circuit(3, 25, rng);
    Unitary u = circuit_unitary(c);
    EXPECT_TRUE((u.adjoint() * u).isApprox(Unitary::Identity(8, 8), 1e-9));
}

TEST(CircuitJson, round_trip) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        auto c = test_util::random_circuit(1 + trial % 6, 20, rng);
        nlohmann::json j = c;
        auto back = circuit_from_json(nlohmann::json::parse(j.dump()));
        EXPECT_EQ(back.n_qubits(), c.n_qubits());
        EXPECT_EQ(back.gates(), c.gates());
    }
}

TEST(CircuitJson, schema_shape) {
    nlohmann::json j = Circuit(2).r(1, 0.5, 0.25).xx(0, 1, -0.125);
    EXPECT_EQ(j.at("n_qubits"), 2);
    EXPECT_EQ(j.at("gates")[0].at("kind"), "R");
    EXPECT_EQ(j.at("gates")[0].at("q"), 1);
    EXPECT_EQ(j.at("gates")[1].at("kind"), "XX");
    EXPECT_EQ(j.at("gates")[1].at("chi"), -0.125);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"n_qubits": 2, "gates": [{"kind": "CZ"}]})")),
                 std::invalid_argument);
    EXPECT_THROW(circuit_from_json(nlohmann::json::parse(R"({"gates": []})")), std::invalid_argument);
}
