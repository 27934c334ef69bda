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

/// \file level_model.hpp
///
/// Two-atom product-state model. Each atom carries a level from a single-atom
/// scheme with rotating-frame energies; a pulse drives a set of single-atom
/// transitions on the addressed atom; pair states pick up interaction shifts
/// and exchange couplings. A sector is the set of product states reachable
/// from one input state.

#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rydcz/linalg.hpp"

namespace rydcz {

enum class Qubit { kControl = 0, kTarget = 1 };

inline std::string to_string(Qubit q) { return q == Qubit::kControl ? "control" : "target"; }

struct Pulse {
    int index = 0;          // 1-based position in the sequence
    Qubit qubit = Qubit::kControl;
    std::string rydberg;    // addressed Rydberg level, "r1" or "r2"
    double rabi = 0.0;      // signed, rad/us
    double duration = 0.0;  // us
    int area_pi = 1;        // nominal area in units of pi
};

/// (control level, target level)
using ProductState = std::pair<std::string, std::string>;

/// "01", "pf", "r1 1", "r1 r1", "p0 0": single-character levels are
/// concatenated, anything longer is space separated.
inline std::string product_label(const ProductState& s) {
    if (s.first.size() == 1 && s.second.size() == 1) return s.first + s.second;
    return s.first + " " + s.second;
}

inline ProductState computational_state(const std::string& input) {
    if (input == "00" || input == "01" || input == "10" || input == "11") {
        return {input.substr(0, 1), input.substr(1, 1)};
    }
    throw std::invalid_argument("unknown input state '" + input + "'; expected 00, 01, 10 or 11");
}

inline const std::vector<std::string>& computational_inputs() {
    static const std::vector<std::string> inputs = {"00", "01", "10", "11"};
    return inputs;
}

/// Single-atom transition lower <-> upper with Rabi frequency scale * Omega_pulse.
struct Transition {
    std::string lower;
    std::string upper;
    double scale = 1.0;
};

struct Exchange {
    ProductState a;
    ProductState b;
    double strength = 0.0;
};

struct LevelScheme {
    std::map<std::string, double> energy;                         // rad/us
    std::map<std::string, std::vector<Transition>> transitions;  // keyed by addressed Rydberg level
    std::map<ProductState, double> pair_shift;                    // rad/us
    std::vector<Exchange> exchange;

    double level_energy(const std::string& level) const {
        auto it = energy.find(level);
        if (it == energy.end()) throw std::invalid_argument("level scheme has no level '" + level + "'");
        return it->second;
    }

    /// Transitions keyed "<level>@<qubit>" take precedence over "<level>".
    const std::vector<Transition>& driven(const Pulse& p) const {
        auto it = transitions.find(p.rydberg + "@" + to_string(p.qubit));
        if (it != transitions.end()) return it->second;
        it = transitions.find(p.rydberg);
        if (it == transitions.end()) {
            throw std::invalid_argument("level scheme has no transitions for '" + p.rydberg + "'");
        }
        return it->second;
    }

    double diagonal(const ProductState& s) const {
        double e = level_energy(s.first) + level_energy(s.second);
        auto it = pair_shift.find(s);
        if (it != pair_shift.end()) e += it->second;
        return e;
    }
};

namespace detail {

inline std::string& addressed(ProductState& s, Qubit q) {
    return q == Qubit::kControl ? s.first : s.second;
}

inline const std::string& addressed(const ProductState& s, Qubit q) {
    return q == Qubit::kControl ? s.first : s.second;
}

template <typename F>
void for_each_neighbour(const LevelScheme& scheme, const std::vector<Pulse>& pulses, const ProductState& s,
                        F&& f) {
    for (const auto& p : pulses) {
        for (const auto& tr : scheme.driven(p)) {
            if (tr.scale == 0.0) continue;
            const std::string& cur = addressed(s, p.qubit);
            for (const auto& [from, to] : {std::pair{tr.lower, tr.upper}, std::pair{tr.upper, tr.lower}}) {
                if (cur == from) {
                    ProductState n = s;
                    addressed(n, p.qubit) = to;
                    f(n);
                }
            }
        }
    }
    for (const auto& ex : scheme.exchange) {
        if (ex.strength == 0.0) continue;
        if (s == ex.a) f(ex.b);
        if (s == ex.b) f(ex.a);
    }
}

}  // namespace detail

/// Product states reachable from `seeds` under the given pulses, in
/// breadth-first order starting with the seeds.
inline std::vector<ProductState> reachable_states(const LevelScheme& scheme, const std::vector<Pulse>& pulses,
                                                  const std::vector<ProductState>& seeds) {
    std::vector<ProductState> order;
    std::set<ProductState> seen;
    std::deque<ProductState> queue;
    for (const auto& s : seeds) {
        if (seen.insert(s).second) {
            order.push_back(s);
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const ProductState s = queue.front();
        queue.pop_front();
        detail::for_each_neighbour(scheme, pulses, s, [&](const ProductState& n) {
            if (seen.insert(n).second) {
                order.push_back(n);
                queue.push_back(n);
            }
        });
    }
    return order;
}

/// Hamiltonian of one pulse over a fixed list of product states.
inline HermitianOperator pulse_hamiltonian(const LevelScheme& scheme, const Pulse& pulse,
                                           const std::vector<ProductState>& states) {
    const auto n = static_cast<Eigen::Index>(states.size());
    std::map<ProductState, Eigen::Index> idx;
    Labels labels;
    for (Eigen::Index i = 0; i < n; ++i) {
        idx[states[static_cast<std::size_t>(i)]] = i;
        labels.push_back(product_label(states[static_cast<std::size_t>(i)]));
    }
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const ProductState& s = states[static_cast<std::size_t>(i)];
        h(i, i) = scheme.diagonal(s);
        for (const auto& tr : scheme.driven(pulse)) {
            if (tr.scale == 0.0) continue;
            if (detail::addressed(s, pulse.qubit) != tr.lower) continue;
            ProductState up = s;
            detail::addressed(up, pulse.qubit) = tr.upper;
            auto it = idx.find(up);
            if (it == idx.end()) continue;
            const double c = 0.5 * tr.scale * pulse.rabi;
            h(it->second, i) += c;
            h(i, it->second) += c;
        }
    }
    for (const auto& ex : scheme.exchange) {
        auto ia = idx.find(ex.a);
        auto ib = idx.find(ex.b);
        if (ia == idx.end() || ib == idx.end()) continue;
        h(ia->second, ib->second) += ex.strength;
        h(ib->second, ia->second) += ex.strength;
    }
    return {std::move(labels), std::move(h)};
}

/// One input sector: a common basis and the Hamiltonian of every pulse over it.
struct Sector {
    std::string input;
    std::vector<ProductState> states;
    Labels labels;
    std::vector<Pulse> pulses;
    std::vector<HermitianOperator> hamiltonians;

    StateVector initial_state() const { return StateVector::basis_state(labels, product_label(states.front())); }
};

inline Sector build_sector(const LevelScheme& scheme, const std::vector<Pulse>& pulses, const std::string& input) {
    Sector sec;
    sec.input = input;
    sec.states = reachable_states(scheme, pulses, {computational_state(input)});
    for (const auto& s : sec.states) sec.labels.push_back(product_label(s));
    sec.pulses = pulses;
    for (const auto& p : pulses) sec.hamiltonians.push_back(pulse_hamiltonian(scheme, p, sec.states));
    return sec;
}

/// State after every pulse of the sector, starting from the input.
inline std::vector<StateVector> run_sector(const Sector& sec) {
    std::vector<StateVector> out;
    StateVector psi = sec.initial_state();
    for (std::size_t k = 0; k < sec.pulses.size(); ++k) {
        psi = Propagator(sec.hamiltonians[k]).apply(sec.pulses[k].duration, psi);
        out.push_back(psi);
    }
    return out;
}

}  // namespace rydcz
