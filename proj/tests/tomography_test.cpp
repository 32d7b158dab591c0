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

#include "gtest/gtest.h"

#include "iongrover/decompose.hpp"
#include "iongrover/noise.hpp"

using namespace iongrover;

namespace {

Circuit toffoli_with_spurious_cz() {
    Circuit c = toffoli3_template(3, 0, 1, 2);
    c.append(cz_template(3, 0, 1));
    return c;
}

}  // namespace

TEST(LimitedTomography, sign_rule_follows_last_bit) {
    for (std::size_t k : {0u, 2u, 4u, 6u}) {
        EXPECT_EQ(tomography_sign(k), 1);
    }
    for (std::size_t k : {1u, 3u, 5u, 7u}) {
        EXPECT_EQ(tomography_sign(k), -1);
    }
}

TEST(LimitedTomography, ideal_toffoli_is_exactly_antidiagonal) {
    auto tt = limited_tomography(toffoli3_template(3, 0, 1, 2));
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_NEAR(tt(r, c), c == 7 - r ? 1.0 : 0.0, 1e-9) << r << c;
        }
    }
    EXPECT_NEAR(tomography_success(tt), 1.0, 1e-9);
}

TEST(LimitedTomography, every_sign_map_passes) {
    for (int s01 : {1, -1}) {
        for (int s02 : {1, -1}) {
            for (int s12 : {1, -1}) {
                ChiSigns signs;
                signs.set(0, 1, s01).set(0, 2, s02).set(1, 2, s12);
                EXPECT_NEAR(tomography_success(limited_tomography(toffoli3_template(3, 0, 1, 2, signs))), 1.0, 1e-9);
            }
        }
    }
}

TEST(LimitedTomography, spurious_phase_is_detected) {
    EXPECT_LT(tomography_success(limited_tomography(toffoli_with_spurious_cz())), 0.95);
    // A relative-phase Toffoli has the right truth table but wrong phases.
    EXPECT_LT(tomography_success(limited_tomography(relative_phase_toffoli(3, 0, 1, 2))), 0.95);
}

TEST(LimitedTomography, identity_circuit_is_also_antidiagonal) {
    // With the target rotated into |+> by the even/odd rule, the Toffoli acts
    // trivially on every input, so identity and Toffoli give the same table.
    EXPECT_NEAR(tomography_success(limited_tomography(Circuit(3))), 1.0, 1e-9);
}

TEST(LimitedTomography, noisy_success_drops) {
    auto tt = limited_tomography(toffoli3_template(3, 0, 1, 2), noisy_evolver(NoiseModel{0.03, 0.0}, 2000, 4));
    const double s = tomography_success(tt);
    EXPECT_LT(s, 1.0);
    EXPECT_GT(s, 0.5);
}

TEST(LimitedTomography, rejects_wrong_width) {
    EXPECT_THROW(limited_tomography(Circuit(4)), std::invalid_argument);
    TruthTable uniform{std::vector<Distribution>(8, Distribution::uniform(3))};
    EXPECT_NEAR(tomography_success(uniform), 0.125, 1e-15);
    EXPECT_THROW(tomography_success(TruthTable{}), std::invalid_argument);
}
