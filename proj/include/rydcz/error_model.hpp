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

/// \file error_model.hpp
///
/// Gate error budget: Rydberg decay from residence times, leakage through
/// off-resonant channels, the heating estimate and the rotation error of a
/// detuned two-level channel.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "rydcz/angular.hpp"
#include "rydcz/constants.hpp"
#include "rydcz/protocol.hpp"

namespace rydcz {

// ---------------------------------------------------------------- decay

/// Per input state, per Rydberg level, accumulated atom-time in us. A pair
/// state with both atoms in the same level counts twice.
struct ResidenceTable {
    std::vector<std::string> levels;  // lifetime keys: r1, r2 (vdW) or d, p, f (dipolar)
    std::map<std::string, std::map<std::string, double>> time;  // [input][level]

    double at(const std::string& input, const std::string& level) const {
        auto row = time.find(input);
        if (row == time.end()) throw std::invalid_argument("residence table has no input '" + input + "'");
        auto it = row->second.find(level);
        return it == row->second.end() ? 0.0 : it->second;
    }
};

namespace detail {

inline std::vector<std::string> residence_levels(ProtocolKind k) {
    return k == ProtocolKind::kVdw ? std::vector<std::string>{"r1", "r2"}
                                   : std::vector<std::string>{"d", "p", "f"};
}

/// Model level name -> lifetime key.
inline std::string lifetime_key(ProtocolKind k, const std::string& level) {
    if (k == ProtocolKind::kDipolar && level == "r1") return "d";
    return level;
}

}  // namespace detail

/// Table I / Table II entries as closed forms in the pulse Rabi frequencies.
inline ResidenceTable residence_table_closed_form(const ProtocolSpec& s) {
    validate(s);
    constexpr double pi = std::numbers::pi;
    ResidenceTable t;
    t.levels = detail::residence_levels(s.kind);
    for (const auto& in : computational_inputs())
        for (const auto& l : t.levels) t.time[in][l] = 0.0;
    const double w0 = s.omega0, w1 = s.omega1, w2 = s.omega2;
    if (s.kind == ProtocolKind::kVdw) {
        t.time["01"]["r1"] = pi / w1;
        t.time["01"]["r2"] = pi / w2;
        t.time["10"]["r1"] = pi / w0 + 2 * pi / w1 + 2 * pi / w2;
        t.time["11"]["r1"] = pi / w0 + 2 * pi / w1 + 9.0 / 8.0 * 2 * pi / w2;
        t.time["11"]["r2"] = 1.0 / 8.0 * 2 * pi / w2;
    } else {
        t.time["01"]["d"] = pi / w1;
        t.time["10"]["d"] = pi / w0 + 2 * pi / w1;
        t.time["11"]["d"] = pi / w0 + 0.84 * 2 * pi / w1;
        t.time["11"]["p"] = 0.28 * 2 * pi / w1;
        t.time["11"]["f"] = 0.28 * 2 * pi / w1;
    }
    return t;
}

/// Residence times from population integrals of the ideal sequence.
/// `steps_per_pulse` sets the Simpson step to duration / steps_per_pulse.
inline ResidenceTable residence_table_numeric(const ProtocolSpec& s, int steps_per_pulse = 4096) {
    if (steps_per_pulse < 1000) throw std::invalid_argument("residence_table_numeric: need >= 1000 steps per pulse");
    const auto sc = make_scheme(s);
    const auto pulses = build_sequence(s);
    ResidenceTable t;
    t.levels = detail::residence_levels(s.kind);
    for (const auto& in : computational_inputs()) {
        for (const auto& l : t.levels) t.time[in][l] = 0.0;
        const Sector sec = build_sector(sc, pulses, in);
        StateVector psi = sec.initial_state();
        for (std::size_t k = 0; k < pulses.size(); ++k) {
            const Propagator prop(sec.hamiltonians[k]);
            const double T = pulses[k].duration;
            const Eigen::VectorXd pop = prop.population_integrals(T, psi, T / steps_per_pulse);
            for (std::size_t i = 0; i < sec.states.size(); ++i) {
                for (const auto& lvl : {sec.states[i].first, sec.states[i].second}) {
                    const std::string key = detail::lifetime_key(s.kind, lvl);
                    if (t.time[in].count(key)) t.time[in][key] += pop(static_cast<Eigen::Index>(i));
                }
            }
            psi = prop.apply(T, psi);
        }
    }
    return t;
}

/// (1/4) sum over inputs and levels of T / tau.
inline double decay_from_table(const ResidenceTable& t, const std::map<std::string, double>& lifetimes) {
    double e = 0.0;
    for (const auto& [in, row] : t.time) {
        for (const auto& [lvl, time] : row) {
            if (time == 0.0) continue;
            auto it = lifetimes.find(lvl);
            if (it == lifetimes.end()) throw std::invalid_argument("no lifetime for Rydberg level '" + lvl + "'");
            e += time / it->second;
        }
    }
    return e / 4.0;
}

struct DecayResult {
    double closed_form = 0.0;  // printed formula
    double numeric = 0.0;      // from residence_table_numeric
    std::array<double, 4> per_input{};  // numeric, sum over levels of T / tau
    ResidenceTable table_closed_form;
    ResidenceTable table_numeric;
    bool design_interaction = true;  // closed form applies only at the design shifts

    double value() const { return design_interaction ? closed_form : numeric; }
};

inline void require_lifetimes(ProtocolKind k, const std::map<std::string, double>& lifetimes) {
    for (const auto& key : detail::residence_levels(k)) {
        auto it = lifetimes.find(key);
        if (it == lifetimes.end()) throw std::invalid_argument("no lifetime for Rydberg level '" + key + "'");
        if (!(it->second > 0.0)) throw std::invalid_argument("lifetime of '" + key + "' must be positive");
    }
}

/// Closed-form decay error with a numerical cross-check that must agree
/// within 2%. Off the design interaction only the numerical value is used.
inline DecayResult decay_error(const ProtocolSpec& s, const std::map<std::string, double>& lifetimes) {
    validate(s);
    require_lifetimes(s.kind, lifetimes);
    constexpr double pi = std::numbers::pi;
    DecayResult r;
    if (s.kind == ProtocolKind::kVdw) {
        const double t1 = lifetimes.at("r1"), t2 = lifetimes.at("r2");
        r.closed_form = pi / t1 * (1.0 / (2 * s.omega0) + 5.0 / (4 * s.omega1) + 17.0 / (16 * s.omega2)) +
                        pi / t2 * 5.0 / (16 * s.omega2);
    } else {
        const double td = lifetimes.at("d"), tp = lifetimes.at("p"), tf = lifetimes.at("f");
        r.closed_form = pi / td * (1.0 / (2 * s.omega0) + 1.17 / s.omega1) + pi / tp * 0.14 / s.omega1 +
                        pi / tf * 0.14 / s.omega1;
    }
    r.table_closed_form = residence_table_closed_form(s);
    r.table_numeric = residence_table_numeric(s);
    r.numeric = decay_from_table(r.table_numeric, lifetimes);
    const auto& inputs = computational_inputs();
    for (std::size_t i = 0; i < 4; ++i) {
        for (const auto& lvl : r.table_numeric.levels) {
            r.per_input[i] += r.table_numeric.at(inputs[i], lvl) / lifetimes.at(lvl);
        }
    }
    r.design_interaction = s.interaction_scale == 1.0;
    if (r.design_interaction && r.closed_form > 0.0 && std::abs(r.numeric - r.closed_form) > 0.02 * r.closed_form) {
        throw std::runtime_error("decay_error: numerical residence times disagree with the closed form by more than 2%");
    }
    return r;
}

// -------------------------------------------------------------- leakage

/// Leak settings for a protocol from the constants table. Ratios come from
/// the angular-momentum expressions.
inline LeakageSettings leakage_settings(const Constants& c, double scale = 1.0) {
    LeakageSettings l;
    l.omega_g = c.species.hyperfine_splitting;
    l.detunings = c.pair.detunings;
    l.n1 = c.pair.n1;
    l.n2 = c.pair.n2;
    l.n_dipolar = c.pair.n_dipolar;
    l.vdw_unit_ratio = leakage_ratios_vdw(c.pair.n1).unit();
    l.dipolar_ratio = leakage_ratio_dipolar().value();
    l.dipolar_ratio_pulse2 = leakage_ratio_dipolar_pulse2();
    l.scale = scale;
    return l;
}

struct LeakageChannel {
    std::string input;
    int pulse = 0;
    Qubit qubit = Qubit::kControl;
    std::string lower;
    std::string level;
    double rabi = 0.0;      // rad/us
    double detuning = 0.0;  // rad/us, energy(level) - energy(lower)
};

/// Every off-resonant single-atom channel open to each input during each pulse.
inline std::vector<LeakageChannel> leakage_channels(const ProtocolSpec& s, const LeakageSettings& leak) {
    const auto sc = make_scheme(s, &leak);
    const auto pulses = build_sequence(s);
    std::vector<LeakageChannel> out;
    for (const auto& in : computational_inputs()) {
        const ProductState ps = computational_state(in);
        for (const auto& p : pulses) {
            const std::string& bit = p.qubit == Qubit::kControl ? ps.first : ps.second;
            for (const auto& tr : sc.driven(p)) {
                if (tr.lower != bit || tr.upper == p.rydberg || tr.scale == 0.0) continue;
                LeakageChannel ch;
                ch.input = in;
                ch.pulse = p.index;
                ch.qubit = p.qubit;
                ch.lower = tr.lower;
                ch.level = tr.upper;
                ch.rabi = tr.scale * p.rabi;
                ch.detuning = sc.level_energy(tr.upper) - sc.level_energy(tr.lower);
                if (ch.detuning == 0.0) {
                    throw std::invalid_argument("leak channel to '" + ch.level + "' has zero detuning");
                }
                out.push_back(ch);
            }
        }
    }
    return out;
}

inline Sector leakage_sector(const ProtocolSpec& s, const LeakageSettings& leak, const std::string& input) {
    return build_sector(make_scheme(s, &leak), build_sequence(s), input);
}

/// Rotating-frame Hamiltonian of `input` during pulse `pulse_index` (1-based)
/// with every leak channel, over the sector basis shared by all pulses.
inline HermitianOperator build_leakage_hamiltonian(const ProtocolSpec& s, const std::string& input, int pulse_index,
                                                   const LeakageSettings& leak) {
    const Sector sec = leakage_sector(s, leak, input);
    if (pulse_index < 1 || pulse_index > static_cast<int>(sec.pulses.size())) {
        throw std::invalid_argument("build_leakage_hamiltonian: pulse index out of range");
    }
    return sec.hamiltonians[static_cast<std::size_t>(pulse_index - 1)];
}

struct LeakageResult {
    std::array<double, 4> per_input{};  // E_s for 00, 01, 10, 11
    double mean = 0.0;                  // E_leak
};

/// Rotating-frame CZ target amplitudes for 00, 01, 10, 11:
/// {e^{2i w_g t_g}, -e^{i w_g t_g}, -e^{i w_g t_g}, -1}.
inline std::array<Complex, 4> target_phases(double omega_g, double tg) {
    return {std::polar(1.0, 2 * omega_g * tg), -std::polar(1.0, omega_g * tg), -std::polar(1.0, omega_g * tg),
            Complex(-1.0)};
}

/// E_s = 1 - |conj(target) <s|psi>|^2.
inline double state_error(const StateVector& psi, const std::string& input, Complex target) {
    const Complex overlap = std::conj(target) * psi.amplitude(input);
    return std::clamp(1.0 - std::norm(overlap), 0.0, 1.0);
}

inline LeakageResult leakage_error(const ProtocolSpec& s, const LeakageSettings& leak) {
    const auto target = target_phases(leak.omega_g, gate_time(s));
    LeakageResult r;
    const auto& inputs = computational_inputs();
    for (std::size_t i = 0; i < 4; ++i) {
        const Sector sec = leakage_sector(s, leak, inputs[i]);
        r.per_input[i] = state_error(run_sector(sec).back(), inputs[i], target[i]);
        r.mean += r.per_input[i] / 4.0;
    }
    return r;
}

// --------------------------------------------------------------- budget

struct ErrorBudget {
    ProtocolKind kind = ProtocolKind::kVdw;
    double omega_mhz = 0.0;
    double gate_time = 0.0;  // us
    double e_decay = 0.0;
    double e_decay_numeric = 0.0;
    double e_leak = 0.0;
    std::array<double, 4> e_s{};
    double total = 0.0;
    std::vector<std::string> flags;
};

inline ErrorBudget total_error(const ProtocolSpec& s, const Constants& c, const LeakageSettings& leak) {
    ErrorBudget b;
    b.kind = s.kind;
    b.omega_mhz = angular_to_mhz(s.omega1);
    b.gate_time = gate_time(s);
    const DecayResult d = decay_error(s, c.pair.lifetimes);
    b.e_decay = d.value();
    b.e_decay_numeric = d.numeric;
    const LeakageResult l = leakage_error(s, leak);
    b.e_leak = l.mean;
    b.e_s = l.per_input;
    b.total = b.e_decay + b.e_leak;
    if (s.kind == ProtocolKind::kVdw) {
        for (const char* lvl : {"p1", "p2", "p3", "p1'", "p2'", "p3'"}) {
            if (c.pair.placeholder_detunings.count(lvl)) {
                b.flags.push_back("config-dependent");
                break;
            }
        }
    }
    if (s.interaction_scale != 1.0) b.flags.push_back("off-design-interaction");
    return b;
}

inline ErrorBudget total_error(const ProtocolSpec& s, const Constants& c = Constants::defaults()) {
    return total_error(s, c, leakage_settings(c));
}

// -------------------------------------------------------------- heating

inline constexpr double kPaperHeatingSpeed = 0.23e-3;  // um/us, as quoted

struct HeatingEstimate {
    double t_r1r1 = 0.0;                 // us, pi / (4 Omega1)
    double dv_formula = 0.0;             // um/us, 6 C6 T / (mu l^7)
    double dv_paper = kPaperHeatingSpeed;
    double gate_time = 0.0;              // us
    double displacement_formula = 0.0;   // um, dv t_g / 2
    double displacement_paper = 0.0;     // um
    double ratio() const { return dv_paper > 0.0 ? dv_formula / dv_paper : 0.0; }
};

/// Velocity kick from the r1 r1 force. `l` must exceed `crossover_um`.
inline HeatingEstimate heating_speed(double c6, double l, double omega1, const SpeciesConstants& species,
                                     double gate_time_us, double crossover_um = 1.3) {
    if (!(l > 0.0)) throw std::invalid_argument("heating_speed: separation must be positive");
    if (!(l > crossover_um)) {
        throw std::invalid_argument("heating_speed: separation " + std::to_string(l) +
                                    " um is not above the van der Waals crossover " + std::to_string(crossover_um) +
                                    " um");
    }
    if (!(omega1 > 0.0)) throw std::invalid_argument("heating_speed: Omega1 must be positive");
    HeatingEstimate h;
    h.t_r1r1 = std::numbers::pi / (4.0 * omega1);
    h.dv_formula = 6.0 * c6 * h.t_r1r1 * species.hbar_over_mass / std::pow(l, 7);
    h.gate_time = gate_time_us;
    h.displacement_formula = std::abs(h.dv_formula) * gate_time_us / 2.0;
    h.displacement_paper = h.dv_paper * gate_time_us / 2.0;
    if (c6 == 0.0) {
        h.dv_paper = 0.0;
        h.displacement_paper = 0.0;
    }
    return h;
}

// ------------------------------------------------------ rotation error

/// 1 - |<0| exp(-i H t) |0>|^2 for H = -w_g |0><0| + (Omega' |d0><0| / 2 + h.c.)
/// over a 2pi pulse of the main transition, t = 2 pi / Omega.
inline double rotation_error(double omega_g, double omega, double omega_leak) {
    if (!(omega > 0.0)) throw std::invalid_argument("rotation_error: Omega must be positive");
    Eigen::Matrix2cd m;
    m << -omega_g, omega_leak / 2.0, omega_leak / 2.0, 0.0;
    const HermitianOperator h({"0", "d0"}, m);
    const StateVector psi = propagate(h, kTwoPi / omega, StateVector::basis_state(h.labels(), "0"));
    return psi.probability("d0");
}

struct ScalingFit {
    double exponent = 0.0;
    double prefactor = 0.0;  // E = prefactor (Omega / w_g)^exponent
    std::vector<double> ratio;  // Omega / w_g
    std::vector<double> error;
};

/// Log-log fit of rotation_error over Omega in [omega_min, omega_max] with
/// Omega' = mismatch * Omega. Sample points are Omega = w_g / (k + offset)
/// for integers k; offset 0 puts the 2pi pulse commensurate with the
/// hyperfine precession.
inline ScalingFit rotation_error_scaling(double omega_g, double omega_min, double omega_max, int points = 12,
                                         double mismatch = 1.0, double offset = 0.0) {
    if (!(omega_g > 0.0) || !(omega_min > 0.0) || !(omega_max > omega_min)) {
        throw std::invalid_argument("rotation_error_scaling: need 0 < omega_min < omega_max and omega_g > 0");
    }
    if (omega_max / omega_g > 0.1 + 1e-12) {
        throw std::invalid_argument("rotation_error_scaling: omega_max / omega_g must be <= 0.1");
    }
    if (omega_max / omega_min < 10.0 * (1.0 - 1e-12)) {
        throw std::invalid_argument("rotation_error_scaling: range must span at least one decade");
    }
    if (points < 2) throw std::invalid_argument("rotation_error_scaling: need at least 2 points");
    const double kmin = omega_g / omega_max, kmax = omega_g / omega_min;
    std::vector<long> ks;
    for (int i = 0; i < points; ++i) {
        const double k = kmin * std::pow(kmax / kmin, static_cast<double>(i) / (points - 1));
        long kk = std::lround(k);
        kk = std::clamp(kk, static_cast<long>(std::ceil(kmin - 1e-9)), static_cast<long>(std::floor(kmax + 1e-9)));
        if (ks.empty() || ks.back() != kk) ks.push_back(kk);
    }
    ScalingFit f;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (long k : ks) {
        const double omega = omega_g / (static_cast<double>(k) + offset);
        const double e = rotation_error(omega_g, omega, mismatch * omega);
        const double x = std::log(omega / omega_g), y = std::log(e);
        f.ratio.push_back(omega / omega_g);
        f.error.push_back(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(f.ratio.size());
    f.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.prefactor = std::exp((sy - f.exponent * sx) / n);
    return f;
}

}  // namespace rydcz
