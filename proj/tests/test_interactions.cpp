// Copyright 2026 The rydcz Authors
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


#include <gtest/gtest.h>

#include "rydcz/interactions.hpp"

namespace rydcz {
namespace {

LevelEnergies sample_energies() {
    nlohmann::json j = {{"nA p3/2", 0.0},   {"nB p3/2", 1.25},  {"na d5/2", 0.4},  {"na d3/2", 0.7},
                        {"na s1/2", -2.1},  {"nb d5/2", 0.55},  {"nb d3/2", 0.95}, {"nb s1/2", -1.8}};
    return level_energies_from_json(j);
}

TEST(Channels, EnumerationAndRelevance) {
    const auto ch = enumerate_channels(sample_energies());
    ASSERT_EQ(ch.size(), 9u);
    for (int k = 0; k < 9; ++k) {
        EXPECT_EQ(ch[k].index, k + 1);
        EXPECT_EQ(ch[k].relevant, k < 6);
    }
    EXPECT_EQ(ch[0].orbital_a, "d5/2");
    EXPECT_EQ(ch[0].orbital_b, "d5/2");
    EXPECT_EQ(ch[8].label(), "n_a s1/2 + n_b s1/2");
    // delta_1 = 0.4 + 0.55 - 0 - 1.25 GHz
    EXPECT_NEAR(angular_to_mhz(ch[0].defect) / 1e3, -0.3, 1e-12);
    EXPECT_NEAR(angular_to_mhz(ch[8].defect) / 1e3, -5.15, 1e-12);
}

TEST(Channels, AtomSwapSymmetry) {
    const auto e = sample_energies();
    const auto a = enumerate_channels(e);
    const auto b = enumerate_channels(swap_atoms(e));
    // Swapping the atoms maps channel (x, y) onto channel (y, x) with the same defect.
    for (const auto& ca : a) {
        bool found = false;
        for (const auto& cb : b) {
            if (cb.orbital_a == ca.orbital_b && cb.orbital_b == ca.orbital_a) {
                EXPECT_NEAR(cb.defect, ca.defect, 1e-9);
                found = true;
            }
        }
        EXPECT_TRUE(found) << ca.label();
    }
    EXPECT_EQ(swap_atoms(swap_atoms(e)), e);
}

TEST(Channels, MissingLevelRejected) {
    auto e = sample_energies();
    e.erase("nb s1/2");
    EXPECT_THROW(enumerate_channels(e), std::invalid_argument);
    EXPECT_THROW(level_energies_from_json(nlohmann::json::array()), ConfigError);
    EXPECT_THROW(level_energies_from_json({{"na d5/2", "x"}}), ConfigError);
}

TEST(Separation, WorkingPointIsValid) {
    const auto r = validate_separation(4.36);
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.violations.empty());
}

TEST(Separation, BelowCrossoverRejected) {
    const auto r = validate_separation(1.0);
    EXPECT_FALSE(r.ok);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_NE(r.violations[0].find("r1r2"), std::string::npos);
    const auto both = validate_separation(0.5);
    EXPECT_EQ(both.violations.size(), 2u);
    EXPECT_FALSE(validate_separation(1.3).ok);  // strict
    EXPECT_THROW(validate_separation(0.0), std::invalid_argument);
}

TEST(Separation, PairShiftsFollowC6) {
    const auto pairs = pair_interactions();
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_NEAR(pairs[0].shift(4.36) / pairs[0].shift(2 * 4.36), 64.0, 1e-9);
    EXPECT_LT(pairs[1].shift(4.36), 0.0);
    const auto c = apply_overrides(Constants::defaults(), {{"crossover_um", {{"r1r2", 5.0}}}});
    EXPECT_FALSE(validate_separation(4.36, c).ok);
}

}  // namespace
}  // namespace rydcz
