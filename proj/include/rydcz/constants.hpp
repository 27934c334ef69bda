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

/// \file constants.hpp
///
/// Versioned table of physical constants for the two gate protocols, with
/// JSON overrides. All stored values are in internal units (rad/us, us, um);
/// the JSON file uses the human units named in its keys.

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "json.hpp"
#include "rydcz/error.hpp"
#include "rydcz/units.hpp"

namespace rydcz {

inline constexpr const char* kConstantsVersion = "rydcz-constants/1";

struct RydbergPairConstants {
    double c6_r1r1 = 0.0;  // rad/us um^6
    double c6_r1r2 = 0.0;  // rad/us um^6
    double temperature_k = 4.0;

    // Lifetimes in us. vdW protocol: "r1", "r2". Dipolar protocol: "d", "p", "f".
    std::map<std::string, double> lifetimes;

    // Leak-level detunings relative to the addressed Rydberg manifold, rad/us.
    // vdW: p1, p2, p3 (n1 neighbours) and p1', p2', p3' (n2 neighbours).
    // Dipolar: d1, d2.
    std::map<std::string, double> detunings;

    // Detunings that are placeholders rather than published values; results
    // that depend on them are flagged as config-dependent.
    std::set<std::string> placeholder_detunings;

    std::map<std::string, double> crossover_um;  // "r1r1", "r1r2"

    int n1 = 80;         // vdW |r1> = n1 p3/2
    int n2 = 90;         // vdW |r2> = n2 p3/2
    int n_dipolar = 59;  // dipolar |r1> = n d5/2

    // Ratio V2/V1 of the two vdW shifts at the working separation.
    double v2_over_v1 = -41.81 / 41.97;

    double separation_um = 4.36;  // vdW working separation l

    static std::map<std::string, double> lifetimes_at(double temperature_k) {
        if (std::abs(temperature_k - 4.0) < 1e-9) {
            return {{"r1", 1290.0}, {"r2", 1860.0}, {"p", 557.0}, {"d", 196.0}, {"f", 97.0}};
        }
        if (std::abs(temperature_k - 300.0) < 1e-9) {
            return {{"r1", 249.0}, {"r2", 331.0}};
        }
        throw ConfigError("no lifetime table for temperature " + std::to_string(temperature_k) +
                          " K; supply tau_us explicitly");
    }

    static RydbergPairConstants defaults(double temperature_k = 4.0) {
        RydbergPairConstants c;
        c.c6_r1r1 = ghz_to_angular(289.0);
        c.c6_r1r2 = ghz_to_angular(-281.0);
        c.temperature_k = temperature_k;
        c.lifetimes = lifetimes_at(temperature_k);
        // p3 and p1 are the same (n1-1)p3/2 manifold.
        c.detunings = {
            {"p3", ghz_to_angular(-15.0)},  {"p1", ghz_to_angular(-15.0)},
            {"p2", ghz_to_angular(13.94)},  {"p3'", ghz_to_angular(-10.04)},
            {"p1'", ghz_to_angular(-10.04)}, {"p2'", ghz_to_angular(9.69)},
            {"d1", ghz_to_angular(-35.2)},  {"d2", ghz_to_angular(33.5)},
        };
        // Quantum-defect estimates (delta_p3/2 = 2.6416), not published values.
        c.placeholder_detunings = {"p2", "p3'", "p1'", "p2'"};
        c.crossover_um = {{"r1r1", 0.74}, {"r1r2", 1.3}};
        return c;
    }

    double lifetime(const std::string& level) const {
        auto it = lifetimes.find(level);
        if (it == lifetimes.end()) {
            throw std::invalid_argument("no lifetime for Rydberg level '" + level + "'");
        }
        return it->second;
    }

    double detuning(const std::string& level) const {
        auto it = detunings.find(level);
        if (it == detunings.end()) {
            throw std::invalid_argument("missing detuning for leak level '" + level + "'");
        }
        return it->second;
    }
};

struct Constants {
    SpeciesConstants species = SpeciesConstants::rb87();
    RydbergPairConstants pair = RydbergPairConstants::defaults();

    static Constants defaults() { return {}; }
};

namespace detail {

inline double finite_number(const nlohmann::json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError("config key '" + key + "' is not finite");
    return v;
}

}  // namespace detail

/// Applies overrides from a parsed config object on top of `base`.
///
/// Recognised keys: species, c6_r1r1_ghz_um6, c6_r1r2_ghz_um6, tau_us,
/// detunings_ghz, temperature_k, crossover_um, n1, n2, n_dipolar, v2_over_v1,
/// separation_um.
/// Setting temperature_k reloads the lifetime table before tau_us is applied.
inline Constants apply_overrides(Constants base, const nlohmann::json& cfg) {
    if (!cfg.is_object()) throw ConfigError("config root must be a JSON object");
    static const std::set<std::string> known = {
        "species",     "c6_r1r1_ghz_um6", "c6_r1r2_ghz_um6", "tau_us",
        "detunings_ghz", "temperature_k", "crossover_um",   "n1",
        "n2",          "n_dipolar",       "v2_over_v1",      "separation_um",
        "version"};
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        if (!known.count(it.key())) throw ConfigError("unknown config key '" + it.key() + "'");
    }
    Constants c = std::move(base);
    try {
        if (cfg.contains("species")) {
            c.species = SpeciesConstants::of(species_from_string(cfg["species"].get<std::string>()));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("species: ") + e.what());
    }
    if (cfg.contains("temperature_k")) {
        c.pair.temperature_k = detail::finite_number(cfg["temperature_k"], "temperature_k");
        c.pair.lifetimes = RydbergPairConstants::lifetimes_at(c.pair.temperature_k);
    }
    if (cfg.contains("c6_r1r1_ghz_um6")) {
        c.pair.c6_r1r1 = ghz_to_angular(detail::finite_number(cfg["c6_r1r1_ghz_um6"], "c6_r1r1_ghz_um6"));
    }
    if (cfg.contains("c6_r1r2_ghz_um6")) {
        c.pair.c6_r1r2 = ghz_to_angular(detail::finite_number(cfg["c6_r1r2_ghz_um6"], "c6_r1r2_ghz_um6"));
    }
    auto read_map = [](const nlohmann::json& j, const std::string& key) {
        if (!j.is_object()) throw ConfigError("config key '" + key + "' must be an object");
        std::map<std::string, double> out;
        for (auto it = j.begin(); it != j.end(); ++it) {
            out[it.key()] = detail::finite_number(it.value(), key + "." + it.key());
        }
        return out;
    };
    if (cfg.contains("tau_us")) {
        for (const auto& [k, v] : read_map(cfg["tau_us"], "tau_us")) {
            if (!(v > 0.0)) throw ConfigError("tau_us." + k + " must be positive");
            c.pair.lifetimes[k] = v;
        }
    }
    if (cfg.contains("detunings_ghz")) {
        for (const auto& [k, v] : read_map(cfg["detunings_ghz"], "detunings_ghz")) {
            if (v == 0.0) throw ConfigError("detunings_ghz." + k + " must be nonzero");
            c.pair.detunings[k] = ghz_to_angular(v);
            c.pair.placeholder_detunings.erase(k);
        }
    }
    if (cfg.contains("crossover_um")) {
        for (const auto& [k, v] : read_map(cfg["crossover_um"], "crossover_um")) {
            c.pair.crossover_um[k] = v;
        }
    }
    auto read_n = [&](const char* key, int& dst) {
        if (!cfg.contains(key)) return;
        if (!cfg[key].is_number_integer() || cfg[key].get<int>() < 2) {
            throw ConfigError(std::string("config key '") + key + "' must be an integer >= 2");
        }
        dst = cfg[key].get<int>();
    };
    read_n("n1", c.pair.n1);
    read_n("n2", c.pair.n2);
    read_n("n_dipolar", c.pair.n_dipolar);
    if (cfg.contains("v2_over_v1")) {
        c.pair.v2_over_v1 = detail::finite_number(cfg["v2_over_v1"], "v2_over_v1");
        if (!(c.pair.v2_over_v1 < 0.0)) throw ConfigError("v2_over_v1 must be negative");
    }
    if (cfg.contains("separation_um")) {
        c.pair.separation_um = detail::finite_number(cfg["separation_um"], "separation_um");
        if (!(c.pair.separation_um > 0.0)) throw ConfigError("separation_um must be positive");
    }
    return c;
}

inline Constants load_constants(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    nlohmann::json cfg;
    try {
        in >> cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed config '" + path + "': " + e.what());
    }
    return apply_overrides(Constants::defaults(), cfg);
}

/// Resolved constants as JSON, in the same human units the config file uses.
inline nlohmann::json to_json(const Constants& c) {
    nlohmann::json j;
    j["version"] = kConstantsVersion;
    j["species"] = to_string(c.species.species);
    j["c6_r1r1_ghz_um6"] = angular_to_mhz(c.pair.c6_r1r1) / 1e3;
    j["c6_r1r2_ghz_um6"] = angular_to_mhz(c.pair.c6_r1r2) / 1e3;
    j["temperature_k"] = c.pair.temperature_k;
    j["tau_us"] = c.pair.lifetimes;
    nlohmann::json det = nlohmann::json::object();
    for (const auto& [k, v] : c.pair.detunings) det[k] = angular_to_mhz(v) / 1e3;
    j["detunings_ghz"] = det;
    j["crossover_um"] = c.pair.crossover_um;
    j["n1"] = c.pair.n1;
    j["n2"] = c.pair.n2;
    j["n_dipolar"] = c.pair.n_dipolar;
    j["v2_over_v1"] = c.pair.v2_over_v1;
    j["separation_um"] = c.pair.separation_um;
    return j;
}

}  // namespace rydcz
