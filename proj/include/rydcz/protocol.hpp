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

#pragma once

/// \file protocol.hpp
///
/// The two CZ pulse sequences:
///
///   dipolar: [pi @control Omega0, 2pi @target Omega, pi @control Omega0]
///   vdW:     [pi @control Omega0, 2pi @target Omega1 (r1), pi @target Omega2 (r2),
///             pi @target -Omega2 (r2), pi @control Omega0]
///
/// Level names: qubit levels "0", "1"; Rydberg levels "r1", "r2". In the
/// dipolar model "r1" is the |d> state and "p", "f" are its Foerster partners,
/// so the pair states are "r1 r1" (dd), "pf" and "fp".

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rydcz/constants.hpp"
#include "rydcz/level_model.hpp"
#include "rydcz/units.hpp"

namespace rydcz {

enum class ProtocolKind { kDipolar, kVdw };

inline std::string to_string(ProtocolKind k) { return k == ProtocolKind::kDipolar ? "dipolar" : "vdw"; }

inline ProtocolKind protocol_from_string(const std::string& s) {
    if (s == "dipolar") return ProtocolKind::kDipolar;
    if (s == "vdw") return ProtocolKind::kVdw;
    throw std::invalid_argument("unknown protocol '" + s + "'; expected dipolar or vdw");
}

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

/// Interaction strength satisfying the rational generalized-Rabi condition
/// sqrt(Omega^2 + eta V^2) = 2 Omega.
struct RationalCondition {
    double eta = 0.0;
    double v = 0.0;                 // rad/us
    double generalized_rabi = 0.0;  // rad/us
};

inline RationalCondition rational_condition(double omega, ProtocolKind kind) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("rational_condition: Omega must be positive and finite");
    }
    RationalCondition rc;
    rc.eta = kind == ProtocolKind::kDipolar ? 4.0 : 1.0;
    rc.v = kind == ProtocolKind::kDipolar ? kSqrt3 * omega / 2.0 : kSqrt3 * omega;
    rc.generalized_rabi = std::sqrt(omega * omega + rc.eta * rc.v * rc.v);
    if (std::abs(rc.generalized_rabi - 2.0 * omega) > 1e-12 * omega) {
        throw std::logic_error("rational_condition: generalized Rabi identity violated");
    }
    return rc;
}

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::kVdw;
    double omega0 = 0.0;  // control pulses, rad/us
    double omega1 = 0.0;  // target 2pi pulse (Omega in the dipolar protocol), rad/us
    double omega2 = 0.0;  // vdW target pi pulses on r2, rad/us
    double delta = 0.0;   // dipolar: sqrt(2) V_dd, rad/us
    double v1 = 0.0;      // vdW r1 r1 shift, rad/us
    double v2 = 0.0;      // vdW r1 r2 shift, rad/us

    // Multiplies every interaction strength in the simulated Hamiltonians but
    // not in validation, to model a separation away from the design point.
    double interaction_scale = 1.0;

    double v_dd() const { return delta / kSqrt2; }

    /// Omega0 = Omega, Delta = sqrt(3) Omega / 2.
    static ProtocolSpec dipolar(double omega0, double omega) {
        ProtocolSpec s;
        s.kind = ProtocolKind::kDipolar;
        s.omega0 = omega0;
        s.omega1 = omega;
        s.delta = rational_condition(omega, ProtocolKind::kDipolar).v;
        return s;
    }

    /// Omega2 = Omega1 |V2/V1|, V1 = sqrt(3) Omega1, V2 = -sqrt(3) Omega2.
    static ProtocolSpec vdw(double omega0, double omega1, double v2_over_v1) {
        if (!(v2_over_v1 < 0.0)) throw std::invalid_argument("vdw: V2/V1 must be negative");
        ProtocolSpec s;
        s.kind = ProtocolKind::kVdw;
        s.omega0 = omega0;
        s.omega1 = omega1;
        s.omega2 = omega1 * std::abs(v2_over_v1);
        s.v1 = rational_condition(omega1, ProtocolKind::kVdw).v;
        s.v2 = -rational_condition(s.omega2, ProtocolKind::kVdw).v;
        return s;
    }

    /// Working point with Omega0 equal to the target Rabi frequency, given in MHz.
    static ProtocolSpec from_mhz(ProtocolKind kind, double omega_mhz, const Constants& c = Constants::defaults()) {
        const double w = mhz_to_angular(omega_mhz);
        return kind == ProtocolKind::kDipolar ? dipolar(w, w) : vdw(w, w, c.pair.v2_over_v1);
    }
};

namespace detail {

inline void require_close(double got, double want, const std::string& relation) {
    if (!(std::abs(got - want) <= 1e-9 * std::max(std::abs(want), 1e-300))) {
        std::ostringstream os;
        os.precision(12);
        os << "protocol spec violates " << relation << " (got " << got << ", expected " << want << ")";
        throw std::invalid_argument(os.str());
    }
}

inline void require_rabi(double w, const char* name) {
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument(std::string("protocol spec: ") + name + " must be positive and finite");
    }
}

}  // namespace detail

/// Throws std::invalid_argument naming the broken relation.
inline void validate(const ProtocolSpec& s) {
    detail::require_rabi(s.omega0, "Omega0");
    detail::require_rabi(s.omega1, s.kind == ProtocolKind::kDipolar ? "Omega" : "Omega1");
    if (!(s.interaction_scale >= 0.0) || !std::isfinite(s.interaction_scale)) {
        throw std::invalid_argument("protocol spec: interaction_scale must be finite and non-negative");
    }
    if (s.kind == ProtocolKind::kDipolar) {
        detail::require_close(s.delta, kSqrt3 * s.omega1 / 2.0, "Delta = sqrt(3) Omega / 2");
        detail::require_close(std::sqrt(s.omega1 * s.omega1 + 4.0 * s.delta * s.delta), 2.0 * s.omega1,
                              "sqrt(Omega^2 + 4 Delta^2) = 2 Omega");
    } else {
        detail::require_rabi(s.omega2, "Omega2");
        detail::require_close(s.v1, kSqrt3 * s.omega1, "V1 = sqrt(3) Omega1");
        detail::require_close(s.v2, -kSqrt3 * s.omega2, "V2 = -sqrt(3) Omega2");
        detail::require_close(std::hypot(s.omega1, s.v1), 2.0 * s.omega1, "sqrt(Omega1^2 + V1^2) = 2 Omega1");
        detail::require_close(std::hypot(s.omega2, s.v2), 2.0 * s.omega2, "sqrt(Omega2^2 + V2^2) = 2 Omega2");
    }
}

inline std::vector<Pulse> build_sequence(const ProtocolSpec& s) {
    validate(s);
    auto make = [](int index, Qubit q, const char* level, double rabi, int area) {
        Pulse p;
        p.index = index;
        p.qubit = q;
        p.rydberg = level;
        p.rabi = rabi;
        p.area_pi = area;
        p.duration = area * std::numbers::pi / std::abs(rabi);
        return p;
    };
    if (s.kind == ProtocolKind::kDipolar) {
        return {make(1, Qubit::kControl, "r1", s.omega0, 1), make(2, Qubit::kTarget, "r1", s.omega1, 2),
                make(3, Qubit::kControl, "r1", s.omega0, 1)};
    }
    return {make(1, Qubit::kControl, "r1", s.omega0, 1), make(2, Qubit::kTarget, "r1", s.omega1, 2),
            make(3, Qubit::kTarget, "r2", s.omega2, 1), make(4, Qubit::kTarget, "r2", -s.omega2, 1),
            make(5, Qubit::kControl, "r1", s.omega0, 1)};
}

inline double gate_time(const ProtocolSpec& s) {
    double t = 0.0;
    for (const auto& p : build_sequence(s)) t += p.duration;
    return t;
}

/// Off-resonant channels and the frame in which they are simulated.
struct LeakageSettings {
    double omega_g = 0.0;                     // hyperfine splitting, rad/us
    std::map<std::string, double> detunings;  // rad/us
    int n1 = 80;
    int n2 = 90;
    int n_dipolar = 59;
    double vdw_unit_ratio = 1.0;        // |Omega^(lea) / Omega|
    double dipolar_ratio = 0.0;         // Pulse-1 / Pulse-3 |0> -> |d0>
    double dipolar_ratio_pulse2 = 0.0;  // Pulse-2 |0> -> |d0>
    double scale = 1.0;                 // multiplies every leak Rabi frequency
};

namespace detail {

inline double detuning_of(const LeakageSettings& l, const std::string& level) {
    auto it = l.detunings.find(level);
    if (it == l.detunings.end()) throw std::invalid_argument("missing detuning for leak level '" + level + "'");
    return it->second;
}

}  // namespace detail

/// Level scheme of a protocol. Without `leak` this is the ideal model: only
/// the resonant transitions and omega_g = 0.
inline LevelScheme make_scheme(const ProtocolSpec& s, const LeakageSettings* leak = nullptr) {
    LevelScheme sc;
    const double g = leak ? leak->omega_g : 0.0;
    sc.energy = {{"0", -g}, {"1", 0.0}, {"r1", 0.0}};
    const double k = s.interaction_scale;

    if (s.kind == ProtocolKind::kVdw) {
        sc.energy["r2"] = 0.0;
        sc.transitions["r1"] = {{"1", "r1", 1.0}};
        sc.transitions["r2"] = {{"1", "r2", 1.0}};
        sc.pair_shift[{"r1", "r1"}] = k * s.v1;
        sc.pair_shift[{"r1", "r2"}] = k * s.v2;
        sc.pair_shift[{"r2", "r1"}] = k * s.v2;
        if (leak) {
            for (const char* lvl : {"p3", "p1", "p2", "p3'", "p1'", "p2'"}) {
                sc.energy[lvl] = detail::detuning_of(*leak, lvl);
            }
            sc.energy["p0"] = 0.0;
            sc.energy["p0'"] = 0.0;
            const double a = leak->scale;
            const double s1 = std::pow(1.0 + 1.0 / leak->n1, 1.5);
            const double s2 = std::pow(1.0 + 1.0 / leak->n2, 1.5);
            const double u = leak->vdw_unit_ratio;
            auto& t1 = sc.transitions["r1"];
            t1.push_back({"1", "p1", a * s1});
            t1.push_back({"1", "p2", a / s1});
            t1.push_back({"0", "p0", a * u});
            t1.push_back({"0", "p3", a * s1 * u});
            auto& t2 = sc.transitions["r2"];
            t2.push_back({"1", "p1'", a * s2});
            t2.push_back({"1", "p2'", a / s2});
            t2.push_back({"0", "p0'", a * u});
            t2.push_back({"0", "p3'", a * s2 * u});
        }
        return sc;
    }

    sc.energy["p"] = 0.0;
    sc.energy["f"] = 0.0;
    sc.transitions["r1"] = {{"1", "r1", 1.0}};
    const double vdd = k * s.v_dd();
    sc.exchange = {{{"r1", "r1"}, {"p", "f"}, vdd}, {{"r1", "r1"}, {"f", "p"}, vdd}};
    if (leak) {
        sc.energy["d0"] = 0.0;
        sc.energy["d1"] = detail::detuning_of(*leak, "d1");
        sc.energy["d2"] = detail::detuning_of(*leak, "d2");
        const double a = leak->scale;
        const double sn = std::pow(1.0 + 1.0 / leak->n_dipolar, 1.5);
        sc.transitions["r1"].push_back({"1", "d1", a * sn});
        sc.transitions["r1"].push_back({"1", "d2", a / sn});
        sc.transitions["r1@target"] = sc.transitions["r1"];
        sc.transitions["r1"].push_back({"0", "d0", a * leak->dipolar_ratio});
        sc.transitions["r1@target"].push_back({"0", "d0", a * leak->dipolar_ratio_pulse2});
    }
    return sc;
}

enum class DipolarBasis { kProduct, kDressed };

/// Minimal ideal Hamiltonian for `input` during `pulse`: the closure, under
/// that pulse alone, of the product states populated when it starts.
///
/// With DipolarBasis::kDressed the dipolar pair block {r1 r1, pf, fp} is
/// rewritten in the H_dd eigenbasis S+ = (pf + sqrt2 dd + fp)/2,
/// S- = (pf - sqrt2 dd + fp)/2; the uncoupled S0 is dropped.
inline HermitianOperator ideal_sector_hamiltonian(const ProtocolSpec& s, const Pulse& pulse, const std::string& input,
                                                  DipolarBasis basis = DipolarBasis::kProduct) {
    const auto sc = make_scheme(s);
    const auto pulses = build_sequence(s);
    if (pulse.index < 1 || pulse.index > static_cast<int>(pulses.size())) {
        throw std::invalid_argument("ideal_sector_hamiltonian: pulse index out of range");
    }
    const Sector full = build_sector(sc, pulses, input);
    StateVector psi = full.initial_state();
    for (int k = 0; k + 1 < pulse.index; ++k) {
        psi = Propagator(full.hamiltonians[static_cast<std::size_t>(k)])
                  .apply(pulses[static_cast<std::size_t>(k)].duration, psi);
    }
    std::vector<ProductState> seeds;
    for (std::size_t i = 0; i < full.states.size(); ++i) {
        if (std::norm(psi.amplitudes()(static_cast<Eigen::Index>(i))) > 1e-12) seeds.push_back(full.states[i]);
    }
    const auto states = reachable_states(sc, {pulse}, seeds);
    HermitianOperator h = pulse_hamiltonian(sc, pulse, states);

    if (basis == DipolarBasis::kProduct || s.kind != ProtocolKind::kDipolar) return h;
    const auto& lab = h.labels();
    auto find = [&](const std::string& l) -> std::optional<Eigen::Index> {
        auto it = std::find(lab.begin(), lab.end(), l);
        if (it == lab.end()) return std::nullopt;
        return static_cast<Eigen::Index>(it - lab.begin());
    };
    const auto dd = find("r1 r1"), pf = find("pf"), fp = find("fp");
    if (!dd || !pf || !fp) return h;

    Labels out_labels;
    std::vector<Eigen::VectorXcd> cols;
    const auto n = static_cast<Eigen::Index>(lab.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i == *dd || i == *pf || i == *fp) continue;
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e(i) = 1.0;
        out_labels.push_back(lab[static_cast<std::size_t>(i)]);
        cols.push_back(e);
    }
    for (double sign : {1.0, -1.0}) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
        e(*pf) = 0.5;
        e(*fp) = 0.5;
        e(*dd) = sign * kSqrt2 / 2.0;
        out_labels.push_back(sign > 0 ? "S+" : "S-");
        cols.push_back(e);
    }
    Eigen::MatrixXcd u(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) u.col(static_cast<Eigen::Index>(c)) = cols[c];
    Eigen::MatrixXcd hd = u.adjoint() * h.matrix() * u;
    hd = 0.5 * (hd + hd.adjoint()).eval();
    return {std::move(out_labels), std::move(hd)};
}

struct PulseSnapshot {
    int pulse = 0;
    StateVector state;
};

struct IdealGateResult {
    Eigen::Matrix4cd gate;  // rows/cols ordered 00, 01, 10, 11
    std::array<StateVector, 4> final_states;
    std::array<std::vector<PulseSnapshot>, 4> snapshots;
    double gate_time = 0.0;  // us

    /// 1 - |tr(G^dagger U)/4|^2 against G = diag(1, -1, -1, -1).
    double infidelity() const {
        const Eigen::Vector4cd target(1.0, -1.0, -1.0, -1.0);
        const Complex tr = (target.conjugate().asDiagonal() * gate).trace() / 4.0;
        return std::max(0.0, 1.0 - std::norm(tr));
    }
};

inline IdealGateResult simulate_ideal(const ProtocolSpec& s) {
    const auto sc = make_scheme(s);
    const auto pulses = build_sequence(s);
    IdealGateResult res;
    res.gate.setZero();
    for (const auto& p : pulses) res.gate_time += p.duration;
    const auto& inputs = computational_inputs();
    for (std::size_t col = 0; col < 4; ++col) {
        const Sector sec = build_sector(sc, pulses, inputs[col]);
        const auto states = run_sector(sec);
        for (std::size_t k = 0; k < states.size(); ++k) {
            res.snapshots[col].push_back({pulses[k].index, states[k]});
        }
        res.final_states[col] = states.back();
        for (std::size_t row = 0; row < 4; ++row) {
            const auto it = std::find(sec.labels.begin(), sec.labels.end(), inputs[row]);
            if (it == sec.labels.end()) continue;
            res.gate(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                states.back().amplitudes()(static_cast<Eigen::Index>(it - sec.labels.begin()));
        }
    }
    return res;
}

/// Pulse-2 evolution of the 11 sector started from |r1 1>.
struct Trajectory {
    Labels labels;
    std::vector<double> times;                     // us
    std::vector<std::vector<double>> populations;  // [time][label]
    std::vector<double> phase;                     // arg <r1 1|psi(t)> in (-pi, pi]
};

inline Trajectory pulse2_trajectory(const ProtocolSpec& s, int samples) {
    if (samples < 2) throw std::invalid_argument("pulse2_trajectory: need at least 2 samples");
    const auto pulses = build_sequence(s);
    const Pulse& p2 = pulses[1];
    const auto sc = make_scheme(s);
    const auto states = reachable_states(sc, {p2}, {{"r1", "1"}});
    const HermitianOperator h = pulse_hamiltonian(sc, p2, states);
    const Propagator prop(h);
    const StateVector psi0 = StateVector::basis_state(h.labels(), "r1 1");

    Trajectory tr;
    tr.labels = h.labels();
    for (int k = 0; k < samples; ++k) {
        const double t = p2.duration * k / (samples - 1);
        const StateVector psi = prop.apply(t, psi0);
        std::vector<double> pop;
        for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) pop.push_back(std::norm(psi.amplitudes()(i)));
        const double ph = std::arg(psi.amplitude("r1 1"));
        tr.times.push_back(t);
        tr.populations.push_back(std::move(pop));
        tr.phase.push_back(ph);
    }
    return tr;
}

}  // namespace rydcz
