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

/// \file units.hpp
///
/// Unit system used throughout rydcz:
///
///   * hbar = 1, so energies are angular frequencies in rad/us;
///   * time in us, length in um;
///   * user-facing frequencies are ordinary frequencies in MHz (or GHz where
///     named so) and are converted with `mhz_to_angular` exactly once, at the
///     input boundary.
///
/// The atomic mass never appears on its own, only as hbar/mu in um^2/us.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rydcz {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace si {
inline constexpr double kHbar = 1.054571817e-34;         // J s
inline constexpr double kBoltzmann = 1.380649e-23;       // J / K
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
}  // namespace si

/// Ordinary frequency in MHz to angular frequency in rad/us.
inline double mhz_to_angular(double nu_mhz) {
    if (!std::isfinite(nu_mhz)) {
        throw std::invalid_argument("mhz_to_angular: non-finite frequency");
    }
    return kTwoPi * nu_mhz;
}

/// Inverse of `mhz_to_angular`.
inline double angular_to_mhz(double omega) {
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("angular_to_mhz: non-finite frequency");
    }
    return omega / kTwoPi;
}

inline double ghz_to_angular(double nu_ghz) { return mhz_to_angular(1e3 * nu_ghz); }

/// van der Waals pair shift C6 / l^6. C6 in rad/us um^6, l in um.
inline double vdw_shift(double c6, double l_um) {
    if (!(l_um > 0.0) || !std::isfinite(l_um)) {
        throw std::invalid_argument("vdw_shift: separation must be positive, got " +
                                    std::to_string(l_um));
    }
    const double l3 = l_um * l_um * l_um;
    return c6 / (l3 * l3);
}

enum class Species { kRb87, kCs133 };

inline std::string to_string(Species s) { return s == Species::kRb87 ? "Rb87" : "Cs133"; }

inline Species species_from_string(const std::string& name) {
    if (name == "Rb87" || name == "rb87" || name == "Rb") return Species::kRb87;
    if (name == "Cs133" || name == "cs133" || name == "Cs") return Species::kCs133;
    throw std::invalid_argument("unknown species '" + name + "'");
}

struct SpeciesConstants {
    Species species = Species::kRb87;
    double hyperfine_splitting = 0.0;  // omega_g, rad/us
    double hbar_over_mass = 0.0;       // um^2/us
    double mass_u = 0.0;               // atomic mass units, informational

    static SpeciesConstants rb87() {
        return make(Species::kRb87, 6.8, 87.0);
    }

    static SpeciesConstants cs133() {
        return make(Species::kCs133, 9.2, 133.0);
    }

    static SpeciesConstants of(Species s) { return s == Species::kRb87 ? rb87() : cs133(); }

  private:
    static SpeciesConstants make(Species s, double splitting_ghz, double mass_u) {
        SpeciesConstants c;
        c.species = s;
        c.hyperfine_splitting = ghz_to_angular(splitting_ghz);
        // m^2/s -> um^2/us is a factor 1e12 * 1e-6.
        c.hbar_over_mass = si::kHbar / (mass_u * si::kAtomicMassUnit) * 1e6;
        c.mass_u = mass_u;
        return c;
    }
};

/// Thermal energy k_B * T expressed as an angular frequency (rad/us), T in mK.
inline double millikelvin_to_angular(double t_mk) {
    return si::kBoltzmann * t_mk * 1e-3 / si::kHbar * 1e-6;
}

}  // namespace rydcz
