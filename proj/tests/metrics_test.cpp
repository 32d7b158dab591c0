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

#include "iongrover/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "iongrover/decompose.hpp"
#include "iongrover/grover.hpp"
#include "test_util.hpp"

using namespace iongrover;

namespace {

Distribution random_distribution(std::size_t n, std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(std::size_t{1} << n);
    for (auto &x : p) {
        x = e(rng);
    }
    const double s = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto &x : p) {
        x /= s;
    }
    return Distribution(p);
}

std::vector<std::size_t> toffoli_map(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::size_t> m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m[k] = (k >> 1) == (dim >> 1) - 1 ? k ^ 1 : k;
    }
    return m;
}

}  // namespace

TEST(Asp, examples) {
    auto ideal = expected_grover_distribution(3, std::vector<std::string>{"011"});
    EXPECT_NEAR(asp(ideal, std::vector<std::string>{"011"}), 0.78125, 1e-12);
    EXPECT_DOUBLE_EQ(asp(Distribution::uniform(3), std::vector<std::string>{"101"}), 0.125);
    auto two = expected_grover_distribution(3, std::vector<std::string>{"001", "100"});
    EXPECT_NEAR(asp(two, std::vector<std::string>{"001", "100"}), 1.0, 1e-12);
    EXPECT_THROW(asp(ideal, std::vector<std::string>{"01"}), std::invalid_argument);
}

TEST(Asp, uniform_is_fraction_marked) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t t = 1; t <= (std::size_t{1} << n); ++t) {
            std::vector<std::size_t> marked(t);
            std::iota(marked.begin(), marked.end(), 0);
            EXPECT_EQ(asp(Distribution::uniform(n), marked),
                      static_cast<double>(t) / static_cast<double>(std::size_t{1} << n));
        }
    }
}

TEST(Sso, examples) {
    std::mt19937_64 rng(11);
    auto d = random_distribution(3, rng);
    EXPECT_NEAR(sso(d, d), 1.0, 1e-12);
    EXPECT_EQ(sso(Distribution::point_mass(3, 0), Distribution::point_mass(3, 5)), 0.0);
    EXPECT_NEAR(sso(Distribution::point_mass(3, 2), Distribution::uniform(3)), 0.125, 1e-12);
    EXPECT_THROW(sso(Distribution::uniform(2), Distribution::uniform(3)), std::invalid_argument);
}

TEST(Sso, symmetric_and_permutation_invariant) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_distribution(3, rng);
        auto b = random_distribution(3, rng);
        EXPECT_NEAR(sso(a, b), sso(b, a), 1e-15);
        EXPECT_LE(sso(a, b), 1.0 + 1e-12);
        std::vector<std::size_t> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<double> pa(8);
        std::vector<double> pb(8);
        for (std::size_t k = 0; k < 8; ++k) {
            pa[perm[k]] = a[k];
            pb[perm[k]] = b[k];
        }
        EXPECT_NEAR(sso(Distribution(pa), Distribution(pb)), sso(a, b), 1e-12);
    }
}

TEST(ExpectedGrover, examples) {
    auto one = expected_grover_distribution(3, std::vector<std::string>{"011"});
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(one[k], k == 3 ? 0.78125 : 0.03125, 1e-15);
    }
    auto two = expected_grover_distribution(3, std::vector<std::string>{"010", "111"});
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(two[k], (k == 2 || k == 7) ? 0.5 : 0.0, 1e-15);
    }
    auto small = expected_grover_distribution(2, std::vector<std::string>{"11"});
    EXPECT_NEAR(small[3], 1.0, 1e-15);
}

TEST(ExpectedGrover, noiseless_runs_have_unit_sso) {
    for (std::size_t t = 1; t <= 2; ++t) {
        for (auto style : {OracleStyle::phase, OracleStyle::boolean}) {
            for (const auto &spec : enumerate_oracles(3, t, style)) {
                auto r = run_grover(GroverConfig{spec});
                EXPECT_NEAR(sso(expected_grover_distribution(3, spec.marked()), r.data_distribution), 1.0, 1e-9);
            }
        }
    }
}

TEST(TruthTable, identity_circuit) {
    auto tt = truth_table(Circuit(3), {0, 1, 2});
    ASSERT_EQ(tt.size(), 8u);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_NEAR(tt(r, c), r == c ? 1.0 : 0.0, 1e-12);
        }
    }
    std::vector<std::size_t> id(8);
    std::iota(id.begin(), id.end(), 0);
    EXPECT_NEAR(truth_table_fidelity(tt, id), 1.0, 1e-12);
    EXPECT_NEAR(truth_table_fidelity(tt, toffoli_map(3)), 0.75, 1e-12);
}

TEST(TruthTable, toffoli_templates) {
    auto t3 = truth_table(toffoli3_template(3, 0, 1, 2), {0, 1, 2});
    EXPECT_NEAR(t3(6, 7), 1.0, 1e-9);
    EXPECT_NEAR(t3(7, 6), 1.0, 1e-9);
    EXPECT_NEAR(truth_table_fidelity(t3, toffoli_map(3)), 1.0, 1e-9);

    // Ancilla on qubit 4 is marginalized out.
    auto t4 = truth_table(toffoli4_template(5, 0, 1, 2, 3, 4), {0, 1, 2, 3});
    ASSERT_EQ(t4.size(), 16u);
    auto ideal = toffoli_map(4);
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            EXPECT_NEAR(t4(r, c), c == ideal[r] ? 1.0 : 0.0, 1e-9);
        }
    }
}

TEST(TruthTable, io_order_is_respected) {
    // Reversed io order on a CNOT 0->1 reads as CNOT 1->0.
    auto tt = truth_table(cnot_template(2, 0, 1), {1, 0});
    EXPECT_NEAR(tt(1, 3), 1.0, 1e-9);
    EXPECT_NEAR(tt(3, 1), 1.0, 1e-9);
    EXPECT_NEAR(tt(2, 2), 1.0, 1e-9);
    EXPECT_THROW(truth_table(Circuit(2), {0, 0}), std::invalid_argument);
    EXPECT_THROW(truth_table(Circuit(2), {2}), std::invalid_argument);
}

TEST(TruthTable, uniform_rows_score_one_eighth) {
    TruthTable tt{std::vector<Distribution>(8, Distribution::uniform(3))};
    EXPECT_NEAR(truth_table_fidelity(tt, toffoli_map(3)), 0.125, 1e-15);
    EXPECT_THROW(truth_table_fidelity(tt, {0, 1}), std::invalid_argument);
}

TEST(Serialization, distribution_csv_and_json) {
    auto d = Distribution({0.25, 0.75});
    EXPECT_EQ(distribution_to_csv(d), "label,probability\n0,0.25\n1,0.75\n");
    EXPECT_EQ(distribution_to_json(d).dump(), "[0.25,0.75]");
    auto back = distribution_from_json(distribution_to_json(d));
    EXPECT_EQ(back.probs(), d.probs());
    EXPECT_THROW(distribution_from_json(nlohmann::json::parse("[0.5, 0.6]")), std::invalid_argument);
    EXPECT_THROW(distribution_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0), "1");
}

TEST(Serialization, truth_table_csv) {
    auto tt = truth_table(cnot_template(2, 0, 1), {0, 1});
    auto csv = truth_table_to_csv(tt);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "input,00,01,10,11");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Marginal, keeps_listed_qubits) {
    // P(q0 q1 q2) = point mass on 110; marginal on (2, 0) is label "01".
    auto d = Distribution::point_mass(3, 6);
    auto m = marginal(d, {2, 0});
    EXPECT_EQ(m[1], 1.0);
}
