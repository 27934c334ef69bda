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

/// \file interactions.hpp
///
/// Dipole-dipole channel bookkeeping for a pair |n_A p3/2; n_B p3/2> and
/// validity checks of the van der Waals picture.
///
/// Level energies are keyed "na d5/2", "nb d3/2", "na s1/2", ... for the
/// intermediate pair and "nA p3/2", "nB p3/2" for the initial pair.

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rydcz/constants.hpp"

namespace rydcz {

struct DefectChannel {
    int index = 0;  // 1..9
    std::string orbital_a;
    std::string orbital_b;
    double defect = 0.0;  // rad/us
    bool relevant = true;

    std::string label() const { return "n_a " + orbital_a + " + n_b " + orbital_b; }
};

using LevelEnergies = std::map<std::string, double>;

inline const std::array<std::pair<const char*, const char*>, 9>& channel_orbitals() {
    static const std::array<std::pair<const char*, const char*>, 9> table = {{
        {"d5/2", "d5/2"},
        {"d5/2", "d3/2"},
        {"d3/2", "d5/2"},
        {"d5/2", "s1/2"},
        {"s1/2", "d5/2"},
        {"d3/2", "d3/2"},
        {"d3/2", "s1/2"},
        {"s1/2", "d3/2"},
        {"s1/2", "s1/2"},
    }};
    return table;
}

/// delta_k = E(n_a x) + E(n_b y) - E(n_A p3/2) - E(n_B p3/2), k = 1..9.
/// Channels 7-9 are marked not relevant for the |r_A r_B> initial state.
inline std::vector<DefectChannel> enumerate_channels(const LevelEnergies& e) {
    auto get = [&](const std::string& key) {
        auto it = e.find(key);
        if (it == e.end()) throw std::invalid_argument("missing level energy '" + key + "'");
        return it->second;
    };
    const double initial = get("nA p3/2") + get("nB p3/2");
    std::vector<DefectChannel> out;
    int k = 1;
    for (const auto& [a, b] : channel_orbitals()) {
        DefectChannel ch;
        ch.index = k;
        ch.orbital_a = a;
        ch.orbital_b = b;
        ch.defect = get(std::string("na ") + a) + get(std::string("nb ") + b) - initial;
        ch.relevant = k <= 6;
        out.push_back(ch);
        ++k;
    }
    return out;
}

/// Relabels atom a <-> b and A <-> B.
inline LevelEnergies swap_atoms(const LevelEnergies& e) {
    LevelEnergies out;
    for (const auto& [k, v] : e) {
        std::string key = k;
        if (key.rfind("na ", 0) == 0) key[1] = 'b';
        else if (key.rfind("nb ", 0) == 0) key[1] = 'a';
        else if (key.rfind("nA ", 0) == 0) key[1] = 'B';
        else if (key.rfind("nB ", 0) == 0) key[1] = 'A';
        out[key] = v;
    }
    return out;
}

/// Parses {"na d5/2": GHz, ...}.
inline LevelEnergies level_energies_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("level energy file must be a JSON object");
    LevelEnergies e;
    for (auto it = j.begin(); it != j.end(); ++it) {
        e[it.key()] = ghz_to_angular(detail::finite_number(it.value(), it.key()));
    }
    return e;
}

struct PairInteraction {
    std::string pair;  // "r1r1" or "r1r2"
    double c6 = 0.0;   // rad/us um^6
    double crossover_um = 0.0;

    double shift(double l_um) const { return vdw_shift(c6, l_um); }
};

inline std::vector<PairInteraction> pair_interactions(const Constants& c = Constants::defaults()) {
    auto cross = [&](const std::string& key) {
        auto it = c.pair.crossover_um.find(key);
        if (it == c.pair.crossover_um.end()) throw std::invalid_argument("no crossover distance for " + key);
        return it->second;
    };
    return {{"r1r1", c.pair.c6_r1r1, cross("r1r1")}, {"r1r2", c.pair.c6_r1r2, cross("r1r2")}};
}

struct SeparationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// ok iff l is strictly above the crossover of every pair.
inline SeparationReport validate_separation(double l_um, const std::vector<PairInteraction>& pairs) {
    if (!(l_um > 0.0)) throw std::invalid_argument("validate_separation: separation must be positive");
    SeparationReport r;
    for (const auto& p : pairs) {
        if (!(l_um > p.crossover_um)) {
            std::ostringstream os;
            os << p.pair << ": l = " << l_um << " um is not above the crossover " << p.crossover_um << " um";
            r.violations.push_back(os.str());
            r.ok = false;
        }
    }
    return r;
}

inline SeparationReport validate_separation(double l_um, const Constants& c = Constants::defaults()) {
    return validate_separation(l_um, pair_interactions(c));
}

}  // namespace rydcz
