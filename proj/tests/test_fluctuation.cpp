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

#include <cmath>

#include "rydcz/fluctuation.hpp"

namespace rydcz {
namespace {

class SeparationFixture : public testing::Test {
  protected:
    static void SetUpTestSuite() {
        const auto c = Constants::defaults();
        const auto s = ProtocolSpec::from_mhz(ProtocolKind::kVdw, 24.23, c);
        table_ = new SeparationTable(
            error_vs_separation(s, c, leakage_settings(c), 4.36, separation_grid(4.36, 0.4, 81)));
    }
    static void TearDownTestSuite() {
        delete table_;
        table_ = nullptr;
    }
    static SeparationTable* table_;
};

SeparationTable* SeparationFixture::table_ = nullptr;

TEST(Trap, FrequencyAndSigma) {
    TrapConfig t;
    t.depth_mk = 1.4;
    const auto w = trap_frequencies(t);
    EXPECT_NEAR(w[0] / kTwoPi * 1e3, 153.0, 0.01 * 153.0);  // kHz
    EXPECT_DOUBLE_EQ(w[0], w[1]);
    EXPECT_DOUBLE_EQ(w[2], w[0] / 5.0);
    const double sigma = position_sigma(0, kTwoPi * 0.150, SpeciesConstants::rb87());
    EXPECT_NEAR(1e3 * sigma, 19.6, 0.01 * 19.6);  // nm
}

TEST(Trap, Scaling) {
    TrapConfig a, b;
    a.depth_mk = 1.0;
    b.depth_mk = 4.0;
    EXPECT_NEAR(trap_frequencies(b)[0] / trap_frequencies(a)[0], 2.0, 1e-12);
    const auto sp = SpeciesConstants::rb87();
    EXPECT_NEAR(position_sigma(1, 1.0, sp) / position_sigma(0, 1.0, sp), std::sqrt(3.0), 1e-12);
    TrapConfig bad;
    bad.waist_um = 0.0;
    EXPECT_THROW(trap_frequencies(bad), std::invalid_argument);
    bad = TrapConfig{};
    bad.n_vib = -1;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    EXPECT_THROW(position_sigma(0, 0.0, sp), std::invalid_argument);
}

TEST(MonteCarlo, UnitIntegrand) {
    TrapConfig t;
    const auto r = mc_average([](double) { return 1.0; }, t, t, 4.36, 10000, 1);
    EXPECT_NEAR(r.mean, 1.0, 3.0 * r.std_error + 1e-15);
    EXPECT_EQ(r.clamped, 0);
}

TEST(MonteCarlo, KnownSecondMoment) {
    // Separation along x: L - l ~ N(0, 2 sigma_xy^2) to leading order.
    TrapConfig t;
    const double l = 4.36;
    const auto r = mc_average([&](double L) { return (L - l) * (L - l); }, t, t, l, 200000, 9);
    const double s = atom_distribution(t, {0, 0, 0}).sigma_xy;
    EXPECT_NEAR(r.mean, 2.0 * s * s, 4.0 * r.std_error + 1e-3 * s * s);
}

TEST(MonteCarlo, DeterministicPerSeed) {
    TrapConfig t;
    auto f = [](double L) { return std::sin(L); };
    const auto a = mc_average(f, t, t, 4.36, 5000, 42);
    const auto b = mc_average(f, t, t, 4.36, 5000, 42);
    const auto c = mc_average(f, t, t, 4.36, 5000, 43);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.mean, c.mean);
    EXPECT_EQ(a.seed, 42u);
}

TEST(MonteCarlo, StdErrorScalesAsInverseRootN) {
    TrapConfig t;
    auto f = [](double L) { return (L - 4.36) * (L - 4.36); };
    const auto a = mc_average(f, t, t, 4.36, 10000, 5);
    const auto b = mc_average(f, t, t, 4.36, 160000, 5);
    EXPECT_NEAR(a.std_error / b.std_error, 4.0, 0.4);
}

TEST(MonteCarlo, Validation) {
    TrapConfig t;
    EXPECT_THROW(mc_average([](double) { return 1.0; }, t, t, 4.36, 10, 1), std::invalid_argument);
    const auto r = mc_average([](double) { return 1.0; }, t, t, 4.36, 2000, 1, 4.0, 4.1);
    EXPECT_GT(r.clamped, 0);
}

TEST_F(SeparationFixture, TableIsNonNegativeAndZeroAtDesign) {
    const auto& t = *table_;
    EXPECT_EQ(t.negative_points, 0);
    EXPECT_EQ(t.separation.size(), 81u);
    EXPECT_NEAR(t(4.36), 0.0, 1e-12);
    for (double e : t.excess) EXPECT_GE(e, 0.0);
    EXPECT_GT(t.nominal_error, 0.0);
}

TEST_F(SeparationFixture, ErrorGrowsAwayFromDesign) {
    const auto& t = *table_;
    for (double d = 0.01; d < 0.15; d += 0.01) {
        EXPECT_LT(t(4.36 + d), t(4.36 + d + 0.01)) << d;
        EXPECT_LT(t(4.36 - d), t(4.36 - d - 0.01)) << d;
    }
}

TEST_F(SeparationFixture, GridValidation) {
    const auto c = Constants::defaults();
    const auto s = ProtocolSpec::from_mhz(ProtocolKind::kVdw, 24.23, c);
    const auto leak = leakage_settings(c);
    EXPECT_THROW(error_vs_separation(s, c, leak, 4.36, {4.3, 4.4, 4.35, 4.5}), std::invalid_argument);
    EXPECT_THROW(error_vs_separation(s, c, leak, 4.36, separation_grid(4.36, 0.05, 11), 0.02),
                 std::invalid_argument);
    EXPECT_THROW(error_vs_separation(s, c, leak, 1.4, separation_grid(1.4, 0.3, 11)), std::invalid_argument);
    EXPECT_THROW(separation_grid(4.36, 5.0, 11), std::invalid_argument);
}

TEST_F(SeparationFixture, AveragedErrorFallsWithTrapDepth) {
    double prev = 1.0;
    for (double u : {1.0, 5.0, 10.0, 21.0}) {
        TrapConfig t;
        t.depth_mk = u;
        const auto r = mc_average(*table_, t, t, 4.36, 20000, 7);
        EXPECT_LT(r.mean, prev) << u;
        EXPECT_EQ(r.clamped, 0);
        prev = r.mean;
    }
}

}  // namespace
}  // namespace rydcz
