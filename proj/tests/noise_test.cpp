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

#include "iongrover/noise.hpp"

#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "iongrover/decompose.hpp"
#include "iongrover/grover.hpp"
#include "test_util.hpp"

using namespace iongrover;

namespace {

const std::vector<std::size_t> kToffoli3{0, 1, 2, 3, 4, 5, 7, 6};

std::vector<std::size_t> toffoli4_map() {
    std::vector<std::size_t> m(16);
    std::iota(m.begin(), m.end(), 0);
    std::swap(m[14], m[15]);
    return m;
}

Distribution interior_distribution(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> p(std::size_t{1} << n);
    for (auto &x : p) {
        x = u(rng);
    }
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto &x : p) {
        x /= s;
    }
    return Distribution(p);
}

double t3_fidelity(double p_xx, std::uint64_t traj, std::uint64_t seed) {
    return truth_table_fidelity(
        truth_table(toffoli3_template(3, 0, 1, 2), {0, 1, 2}, noisy_evolver(NoiseModel{p_xx, 0.0}, traj, seed)),
        kToffoli3);
}

}  // namespace

TEST(RunNoisy, zero_noise_matches_noiseless) {
    std::mt19937_64 rng(21);
    auto c = test_util::random_circuit(4, 30, rng);
    auto ideal = run(c, StateVector::zero(4)).probabilities();
    auto noisy = run_noisy(c, NoiseModel{}, 50, 9);
    for (std::size_t k = 0; k < ideal.size(); ++k) {
        EXPECT_NEAR(noisy[k], ideal[k], 1e-12);
    }
}

TEST(RunNoisy, deterministic_for_seed) {
    auto c = toffoli3_template(3, 0, 1, 2);
    auto a = run_noisy(c, NoiseModel{0.05, 0.01}, 3000, 17, init_basis(3, "110"));
    auto b = run_noisy(c, NoiseModel{0.05, 0.01}, 3000, 17, init_basis(3, "110"));
    EXPECT_EQ(a.probs(), b.probs());
    auto other = run_noisy(c, NoiseModel{0.05, 0.01}, 3000, 18, init_basis(3, "110"));
    EXPECT_NE(a.probs(), other.probs());
}

TEST(RunNoisy, single_pauli_statistics) {
    // One XX(pi/4) on |00> produces a Bell-like state; any Pauli error leaves
    // the populations either unchanged or swapped between {00,11} and {01,10}.
    Circuit c(2);
    c.xx(0, 1, kPi / 4);
    auto d = run_noisy(c, NoiseModel{0.3, 0.0}, 20000, 5);
    // Paulis with exactly one of X/Y on each side (XI, YI, IX, IY, XZ, YZ, ZX, ZY)
    // move population to the odd-parity block: 8 of 15.
    const double odd = d[1] + d[2];
    EXPECT_NEAR(odd, 0.3 * 8.0 / 15.0, 0.015);
}

TEST(RunNoisy, rejects_bad_input) {
    Circuit c(2);
    EXPECT_THROW(run_noisy(c, NoiseModel{1.0, 0.0}, 10, 0), std::invalid_argument);
    EXPECT_THROW(run_noisy(c, NoiseModel{}, 0, 0), std::invalid_argument);
    EXPECT_THROW(run_noisy(c, NoiseModel{}, 1, 0, StateVector::zero(3)), std::invalid_argument);
}

TEST(RunNoisy, toffoli3_fidelity_decreases_with_p) {
    const double f1 = t3_fidelity(0.01, 4000, 3);
    const double f2 = t3_fidelity(0.02, 4000, 3);
    const double f5 = t3_fidelity(0.05, 4000, 3);
    EXPECT_GT(1.0, f1);
    EXPECT_GT(f1, f2);
    EXPECT_GT(f2, f5);
}

TEST(RunNoisy, fitted_noise_orders_toffoli3_above_toffoli4) {
    const double p = fit_p_xx(0.896, 2000, 1);
    const double f3 = t3_fidelity(p, 2000, 1);
    EXPECT_NEAR(f3, 0.896, 0.01);
    const double f4 = truth_table_fidelity(truth_table(toffoli4_template(5, 0, 1, 2, 3, 4), {0, 1, 2, 3},
                                                       noisy_evolver(NoiseModel{p, 0.0}, 2000, 1)),
                                           toffoli4_map());
    EXPECT_LT(f4, f3);
}

TEST(Confusion, examples) {
    EXPECT_TRUE(confusion_matrix(SpamModel{}, 3).isApprox(Eigen::MatrixXd::Identity(8, 8), 1e-15));
    auto m1 = confusion_matrix(SpamModel{0.01, 0.02, 0.0}, 1);
    Eigen::Matrix2d expect;
    expect << 0.99, 0.02, 0.01, 0.98;
    EXPECT_LT((m1 - expect).cwiseAbs().maxCoeff(), 1e-15);

    auto a = confusion_matrix(SpamModel{0.01, 0.02, 0.0}, 1);
    auto m2 = confusion_matrix(SpamModel{0.01, 0.02, 0.0}, 2);
    Eigen::MatrixXd kron(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            kron.block(2 * i, 2 * j, 2, 2) = a(i, j) * a;
        }
    }
    EXPECT_LT((m2 - kron).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Confusion, columns_sum_to_one) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 0.499);
    for (int trial = 0; trial < 40; ++trial) {
        SpamModel s{u(rng), u(rng), u(rng)};
        for (std::size_t n = 1; n <= 5; ++n) {
            auto m = confusion_matrix(s, n);
            EXPECT_LT((m.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-12);
            EXPECT_GE(m.minCoeff(), 0.0);
        }
    }
}

TEST(Confusion, crosstalk_brightens_dark_neighbours) {
    auto m = confusion_matrix(SpamModel{0.0, 0.0, 0.1}, 3);
    // True 010: both neighbours of qubit 1 are dark ions that may read bright.
    EXPECT_NEAR(m(2, 2), 0.81, 1e-15);
    EXPECT_NEAR(m(7, 2), 0.01, 1e-15);
    // True 101: the middle ion has two bright neighbours.
    EXPECT_NEAR(m(7, 5), 1.0 - 0.81, 1e-15);
    EXPECT_THROW(confusion_matrix(SpamModel{0.5, 0.0, 0.0}, 2), std::invalid_argument);
}

TEST(ApplySpam, examples) {
    auto d = Distribution::point_mass(1, 0);
    auto out = apply_spam(d, SpamModel{0.01, 0.0, 0.0});
    EXPECT_NEAR(out[0], 0.99, 1e-15);
    EXPECT_NEAR(out[1], 0.01, 1e-15);
    auto uni = apply_spam(Distribution::uniform(3), SpamModel::symmetric(0.03));
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(uni[k], 0.125, 1e-15);
    }
    std::mt19937_64 rng(2);
    auto r = interior_distribution(3, rng);
    EXPECT_EQ(apply_spam(r, SpamModel{}).probs(), r.probs());
    EXPECT_EQ(correct_spam(r, SpamModel{}).probs(), r.probs());
}

TEST(CorrectSpam, round_trip) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> eps(0.0, 0.05);
    std::uniform_real_distribution<double> xt(0.0, 0.02);
    for (int trial = 0; trial < 100; ++trial) {
        SpamModel s{eps(rng), eps(rng), xt(rng)};
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        auto d = interior_distribution(n, rng);
        auto back = correct_spam(apply_spam(d, s), s);
        for (std::size_t k = 0; k < d.size(); ++k) {
            ASSERT_NEAR(back[k], d[k], 1e-9);
        }
    }
    auto ideal = expected_grover_distribution(3, std::vector<std::string>{"101"});
    auto back = correct_spam(apply_spam(ideal, SpamModel::symmetric(0.01)), SpamModel::symmetric(0.01));
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(back[k], k == 5 ? 0.78125 : 0.03125, 1e-9);
    }
}

TEST(CorrectSpam, clamps_outside_image) {
    // A point mass is outside the image of a noisy readout: inversion goes negative.
    auto s = SpamModel::symmetric(0.05);
    auto out = correct_spam(Distribution::point_mass(3, 0), s);
    double total = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_GE(out[k], 0.0);
        total += out[k];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(NoiseConfig, parsing) {
    auto c = noise_config_from_json(nlohmann::json::parse(
        R"({"p_xx": 0.02, "p_r": 0.001, "eps0": 0.01, "eps1": 0.02, "crosstalk": 0.005, "trajectories": 500, "seed": 3})"));
    EXPECT_EQ(c.noise.p_xx, 0.02);
    EXPECT_EQ(c.spam.eps1, 0.02);
    EXPECT_EQ(c.trajectories, 500u);
    EXPECT_EQ(noise_config_from_json(to_json(c)).seed, 3u);
    auto d = noise_config_from_json(nlohmann::json::object());
    EXPECT_EQ(d.noise.p_xx, 0.0);
    for (const char *bad : {R"({"p_xx": "high"})", R"({"bogus": 1})", R"({"eps0": 0.6})", R"({"trajectories": 0})",
                            R"({"seed": -1})", R"([1, 2])"}) {
        EXPECT_THROW(noise_config_from_json(nlohmann::json::parse(bad)), std::invalid_argument) << bad;
    }
}
