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
#include <numbers>
#include <random>

#include "rydcz/protocol.hpp"

namespace rydcz {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4cd cz() {
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    g.diagonal() << 1.0, -1.0, -1.0, -1.0;
    return g;
}

// Gate map from a modified pulse list over the ideal scheme.
Eigen::Matrix4cd gate_from_pulses(const ProtocolSpec& s, const std::vector<Pulse>& pulses) {
    const auto sc = make_scheme(s);
    Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
    const auto& inputs = computational_inputs();
    for (int col = 0; col < 4; ++col) {
        const Sector sec = build_sector(sc, pulses, inputs[col]);
        const StateVector fin = run_sector(sec).back();
        for (int row = 0; row < 4; ++row) {
            const auto& l = fin.labels();
            if (std::find(l.begin(), l.end(), inputs[row]) != l.end()) g(row, col) = fin.amplitude(inputs[row]);
        }
    }
    return g;
}

TEST(RationalCondition, GeneralizedRabiIsTwiceOmega) {
    for (double w : {0.1, 1.0, 150.0, 1262.0}) {
        const auto d = rational_condition(w, ProtocolKind::kDipolar);
        EXPECT_NEAR(d.v, std::sqrt(3.0) * w / 2.0, 1e-12 * w);
        EXPECT_NEAR(d.generalized_rabi, 2.0 * w, 1e-12 * w);
        const auto v = rational_condition(w, ProtocolKind::kVdw);
        EXPECT_NEAR(v.v, std::sqrt(3.0) * w, 1e-12 * w);
        EXPECT_NEAR(v.generalized_rabi, 2.0 * w, 1e-12 * w);
    }
    EXPECT_THROW(rational_condition(0.0, ProtocolKind::kVdw), std::invalid_argument);
    EXPECT_THROW(rational_condition(NAN, ProtocolKind::kDipolar), std::invalid_argument);
}

TEST(ProtocolSpec, ValidationNamesBrokenRelation) {
    auto d = ProtocolSpec::dipolar(10.0, 20.0);
    d.delta *= 1.01;
    try {
        validate(d);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("Delta"), std::string::npos);
    }
    auto v = ProtocolSpec::vdw(10.0, 20.0, -0.99);
    v.v2 = -v.v2;
    try {
        validate(v);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("V2"), std::string::npos);
    }
    EXPECT_THROW(ProtocolSpec::vdw(1.0, 1.0, 0.5), std::invalid_argument);
    auto neg = ProtocolSpec::dipolar(1.0, 1.0);
    neg.omega0 = -1.0;
    EXPECT_THROW(validate(neg), std::invalid_argument);
}

TEST(Sequence, DurationsAndGateTime) {
    const auto d = ProtocolSpec::from_mhz(ProtocolKind::kDipolar, 200.9);
    EXPECT_NEAR(gate_time(d), 4 * kPi / mhz_to_angular(200.9), 1e-15);
    EXPECT_NEAR(1e3 * gate_time(d), 9.96, 0.01 * 9.96);
    const auto seq = build_sequence(ProtocolSpec::vdw(1.0, 2.0, -0.5));
    ASSERT_EQ(seq.size(), 5u);
    EXPECT_DOUBLE_EQ(seq[0].duration, kPi);
    EXPECT_DOUBLE_EQ(seq[1].duration, kPi);
    EXPECT_DOUBLE_EQ(seq[2].duration, kPi);
    EXPECT_DOUBLE_EQ(seq[3].rabi, -seq[2].rabi);
    EXPECT_EQ(seq[3].rydberg, "r2");
    EXPECT_EQ(seq[4].qubit, Qubit::kControl);
    const auto v = ProtocolSpec::from_mhz(ProtocolKind::kVdw, 24.23);
    EXPECT_NEAR(1e3 * gate_time(v), 125.0, 0.02 * 125.0);
}

TEST(IdealGate, ExactCzForRandomParameters) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mhz(0.5, 400.0), ratio(0.2, 5.0);
    for (int rep = 0; rep < 25; ++rep) {
        const double w0 = mhz_to_angular(mhz(rng)), w = mhz_to_angular(mhz(rng));
        for (const auto& s : {ProtocolSpec::dipolar(w0, w), ProtocolSpec::vdw(w0, w, -ratio(rng))}) {
            const auto r = simulate_ideal(s);
            EXPECT_LE(r.infidelity(), 1e-9) << to_string(s.kind);
            EXPECT_LE((r.gate - cz()).cwiseAbs().maxCoeff(), 1e-9) << to_string(s.kind);
        }
    }
}

TEST(IdealGate, DipolarPulse2Snapshots) {
    const auto r = simulate_ideal(ProtocolSpec::from_mhz(ProtocolKind::kDipolar, 20.0));
    // |11>: Pulse-1 gives -i |r1 1>, Pulse-2 returns it with no added phase.
    const auto& s11 = r.snapshots[3];
    EXPECT_LE(std::abs(s11[0].state.amplitude("r1 1") - Complex(0.0, -1.0)), 1e-9);
    EXPECT_LE(std::abs(s11[1].state.amplitude("r1 1") - Complex(0.0, -1.0)), 1e-9);
    // |01> -> -|01> after the target 2pi pulse.
    EXPECT_LE(std::abs(r.snapshots[1][1].state.amplitude("01") - Complex(-1.0)), 1e-9);
}

TEST(IdealGate, VdwPulse2Snapshot) {
    const auto r = simulate_ideal(ProtocolSpec::from_mhz(ProtocolKind::kVdw, 24.23));
    const Complex want = Complex(0.0, -1.0) * std::polar(1.0, -std::sqrt(3.0) * kPi);
    EXPECT_LE(std::abs(r.snapshots[3][1].state.amplitude("r1 1") - want), 1e-9);
    EXPECT_LE(std::abs(r.snapshots[1][2].state.amplitude("0 r2") - Complex(0.0, 1.0)), 1e-9);
}

TEST(IdealGate, InvariantUnderGlobalRabiSign) {
    for (auto kind : {ProtocolKind::kDipolar, ProtocolKind::kVdw}) {
        const auto s = ProtocolSpec::from_mhz(kind, 17.0);
        auto pulses = build_sequence(s);
        for (auto& p : pulses) p.rabi = -p.rabi;
        EXPECT_LE((gate_from_pulses(s, pulses) - cz()).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(IdealGate, Pulse4SignMatters) {
    const auto s = ProtocolSpec::from_mhz(ProtocolKind::kVdw, 17.0);
    auto pulses = build_sequence(s);
    pulses[3].rabi = -pulses[3].rabi;
    const auto g = gate_from_pulses(s, pulses);
    EXPECT_GT((g - cz()).cwiseAbs().maxCoeff(), 1.0);
}

TEST(IdealGate, DressedBasisMatchesProductSpectrum) {
    const auto s = ProtocolSpec::from_mhz(ProtocolKind::kDipolar, 20.0);
    const Pulse p2 = build_sequence(s)[1];
    const auto prod = ideal_sector_hamiltonian(s, p2, "11", DipolarBasis::kProduct);
    const auto dres = ideal_sector_hamiltonian(s, p2, "11", DipolarBasis::kDressed);
    EXPECT_EQ(prod.size(), 4u);
    EXPECT_EQ(dres.labels(), (Labels{"r1 1", "S+", "S-"}));
    EXPECT_NEAR(std::abs(dres.element("S+", "S+")), s.delta, 1e-9);
    EXPECT_NEAR(dres.element("S+", "S+").real(), -dres.element("S-", "S-").real(), 1e-9);
    EXPECT_NEAR(std::abs(dres.element("r1 1", "S+")), s.omega1 / (2.0 * std::sqrt(2.0)), 1e-9);
    EXPECT_NEAR(std::abs(dres.element("S+", "S-")), 0.0, 1e-12);
    const auto ep = eigen(prod).values, ed = eigen(dres).values;
    for (Eigen::Index k = 0; k < ed.size(); ++k) {
        EXPECT_LE((ep.array() - ed(k)).abs().minCoeff(), 1e-9);
    }
    // Pulse-2 from |r1 1> returns with zero phase in either basis.
    const double t = p2.duration;
    const auto back = propagate(dres, t, StateVector::basis_state(dres.labels(), "r1 1"));
    EXPECT_LE(std::abs(back.amplitude("r1 1") - Complex(1.0)), 1e-9);
}

TEST(Trajectory, DipolarShape) {
    const auto s = ProtocolSpec::from_mhz(ProtocolKind::kDipolar, 20.0);
    const auto tr = pulse2_trajectory(s, 201);
    ASSERT_EQ(tr.times.size(), 201u);
    const auto& l = tr.labels;
    const auto ipf = std::find(l.begin(), l.end(), "pf") - l.begin();
    const auto ifp = std::find(l.begin(), l.end(), "fp") - l.begin();
    double peak = 0.0;
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        double sum = 0.0;
        for (double p : tr.populations[k]) sum += p;
        EXPECT_NEAR(sum, 1.0, 1e-12);
        EXPECT_NEAR(tr.populations[k][ipf], tr.populations[k][ifp], 1e-12);
        peak = std::max(peak, tr.populations[k][ipf]);
    }
    EXPECT_GT(peak, 0.01);
    EXPECT_NEAR(tr.phase.front(), 0.0, 1e-12);
    EXPECT_NEAR(tr.phase.back(), 0.0, 1e-9);
    EXPECT_NEAR(tr.populations.back()[0], 1.0, 1e-9);
    EXPECT_THROW(pulse2_trajectory(s, 1), std::invalid_argument);
}

TEST(Trajectory, VdwEndPhase) {
    const auto tr = pulse2_trajectory(ProtocolSpec::from_mhz(ProtocolKind::kVdw, 20.0), 101);
    const double want = std::arg(std::polar(1.0, -std::sqrt(3.0) * kPi));
    EXPECT_NEAR(tr.phase.back(), want, 1e-9);
}

}  // namespace
}  // namespace rydcz
