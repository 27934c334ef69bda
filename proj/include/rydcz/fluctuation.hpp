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

/// \file fluctuation.hpp
///
/// Optical-trap position spread and the Monte Carlo average of the
/// separation-dependent gate error.
///
/// Geometry: the control atom sits at the origin and the target at (l, 0, 0);
/// x and y are the radial trap axes, z the axial one.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <vector>

// Boost 1.74 pchip.hpp calls isnan unqualified.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>

#include "rydcz/error_model.hpp"
#include "rydcz/interactions.hpp"

namespace rydcz {

struct TrapConfig {
    double depth_mk = 1.0;
    double waist_um = 0.76;
    int n_vib = 0;
    SpeciesConstants species = SpeciesConstants::rb87();

    void validate() const {
        if (!(depth_mk > 0.0) || !std::isfinite(depth_mk)) throw std::invalid_argument("trap depth must be positive");
        if (!(waist_um > 0.0) || !std::isfinite(waist_um)) throw std::invalid_argument("beam waist must be positive");
        if (n_vib < 0) throw std::invalid_argument("vibrational quantum number must be >= 0");
    }
};

/// (w_x, w_y, w_z) in rad/us: w_x = w_y = (2 / w) sqrt(U / mu), w_z = w_x / 5.
inline std::array<double, 3> trap_frequencies(const TrapConfig& cfg) {
    cfg.validate();
    const double u_over_mu = millikelvin_to_angular(cfg.depth_mk) * cfg.species.hbar_over_mass;  // um^2/us^2
    const double wx = 2.0 / cfg.waist_um * std::sqrt(u_over_mu);
    return {wx, wx, wx / 5.0};
}

/// sqrt((N + 1/2) (hbar/mu) / w) in um.
inline double position_sigma(int n_vib, double omega, const SpeciesConstants& species) {
    if (!(omega > 0.0)) throw std::invalid_argument("position_sigma: trap frequency must be positive");
    if (n_vib < 0) throw std::invalid_argument("position_sigma: vibrational quantum number must be >= 0");
    return std::sqrt((n_vib + 0.5) * species.hbar_over_mass / omega);
}

struct AtomDistribution {
    std::array<double, 3> center{};
    double sigma_xy = 0.0;  // um
    double sigma_z = 0.0;   // um
};

inline AtomDistribution atom_distribution(const TrapConfig& cfg, std::array<double, 3> center) {
    const auto w = trap_frequencies(cfg);
    return {center, position_sigma(cfg.n_vib, w[0], cfg.species), position_sigma(cfg.n_vib, w[2], cfg.species)};
}

/// E_L on a separation grid: gate error at separation L with the pulse Rabi
/// frequencies fixed at the design separation, minus the design value.
struct SeparationTable {
    double l_nominal = 0.0;
    std::vector<double> separation;  // um, ascending
    std::vector<double> excess;      // E_L >= 0
    double nominal_error = 0.0;
    int negative_points = 0;  // raw excess below zero, clamped

    /// Monotone-cubic (PCHIP) interpolation; needs L inside the grid.
    double operator()(double l) const {
        if (!interp_) build();
        return std::max(0.0, (*interp_)(l));
    }
    double lo() const { return separation.front(); }
    double hi() const { return separation.back(); }

    void build() const {
        if (separation.size() < 4) throw std::invalid_argument("separation table needs at least 4 points");
        auto x = separation;
        auto y = excess;
        interp_ = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(std::move(x), std::move(y));
    }

  private:
    mutable std::shared_ptr<boost::math::interpolators::pchip<std::vector<double>>> interp_;
};

/// `points` separations spanning l +- half_width.
inline std::vector<double> separation_grid(double l, double half_width, int points) {
    if (points < 4) throw std::invalid_argument("separation_grid: need at least 4 points");
    if (!(half_width > 0.0) || !(l - half_width > 0.0)) {
        throw std::invalid_argument("separation_grid: half width must be positive and smaller than l");
    }
    std::vector<double> g;
    for (int i = 0; i < points; ++i) g.push_back(l - half_width + 2.0 * half_width * i / (points - 1));
    return g;
}

/// Shift scale (l / L)^6 applied to V1 and V2 at each grid point. The decay
/// term depends on the Rabi frequencies only and cancels in the excess.
/// `sigma_x` > 0 enforces a grid span of at least +- 6 sigma_x around l.
inline SeparationTable error_vs_separation(const ProtocolSpec& spec, const Constants& c, const LeakageSettings& leak,
                                           double l, const std::vector<double>& grid, double sigma_x = 0.0) {
    if (grid.size() < 4) throw std::invalid_argument("error_vs_separation: need at least 4 grid points");
    if (!std::is_sorted(grid.begin(), grid.end()) || std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
        throw std::invalid_argument("error_vs_separation: grid must be strictly increasing");
    }
    if (sigma_x > 0.0 && (grid.front() > l - 6.0 * sigma_x || grid.back() < l + 6.0 * sigma_x)) {
        throw std::invalid_argument("error_vs_separation: grid does not span +- 6 sigma_x around l");
    }
    const auto report = validate_separation(grid.front(), c);
    if (!report.ok) throw std::invalid_argument("error_vs_separation: " + report.violations.front());

    SeparationTable t;
    t.l_nominal = l;
    ProtocolSpec base = spec;
    base.interaction_scale = 1.0;
    t.nominal_error = leakage_error(base, leak).mean;
    for (double L : grid) {
        ProtocolSpec s = spec;
        s.interaction_scale = std::pow(l / L, 6);
        double e = leakage_error(s, leak).mean - t.nominal_error;
        if (e < 0.0) {
            ++t.negative_points;
            e = 0.0;
        }
        t.separation.push_back(L);
        t.excess.push_back(e);
    }
    return t;
}

struct MCResult {
    double mean = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    long clamped = 0;  // samples outside the integrand span
};

namespace detail {

inline MCResult mc_run(const std::function<double(double)>& f, double lo, double hi, const AtomDistribution& c,
                       const AtomDistribution& t, long samples, std::uint64_t seed) {
    if (samples < 1000) throw std::invalid_argument("mc_average: need at least 1000 samples");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    MCResult r;
    r.samples = samples;
    r.seed = seed;
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < samples; ++i) {
        std::array<double, 3> pc, pt;
        for (int k = 0; k < 3; ++k) pc[k] = c.center[k] + (k < 2 ? c.sigma_xy : c.sigma_z) * normal(rng);
        for (int k = 0; k < 3; ++k) pt[k] = t.center[k] + (k < 2 ? t.sigma_xy : t.sigma_z) * normal(rng);
        double L = std::sqrt((pc[0] - pt[0]) * (pc[0] - pt[0]) + (pc[1] - pt[1]) * (pc[1] - pt[1]) +
                             (pc[2] - pt[2]) * (pc[2] - pt[2]));
        if (L < lo || L > hi) {
            ++r.clamped;
            L = std::clamp(L, lo, hi);
        }
        const double v = f(L);
        sum += v;
        sum2 += v * v;
    }
    const double n = static_cast<double>(samples);
    r.mean = sum / n;
    const double var = std::max(0.0, (sum2 - n * r.mean * r.mean) / (n - 1.0));
    r.std_error = std::sqrt(var / n);
    return r;
}

}  // namespace detail

/// Monte Carlo average of the tabulated E_L over both atoms' Gaussian
/// position distributions.
inline MCResult mc_average(const SeparationTable& table, const TrapConfig& control, const TrapConfig& target,
                           double l, long samples, std::uint64_t seed) {
    const auto c = atom_distribution(control, {0.0, 0.0, 0.0});
    const auto t = atom_distribution(target, {l, 0.0, 0.0});
    return detail::mc_run([&](double L) { return table(L); }, table.lo(), table.hi(), c, t, samples, seed);
}

/// Same estimator for an arbitrary integrand of the separation; with f = 1
/// the result is 1.
inline MCResult mc_average(const std::function<double(double)>& f, const TrapConfig& control,
                           const TrapConfig& target, double l, long samples, std::uint64_t seed,
                           double lo = 0.0, double hi = std::numeric_limits<double>::infinity()) {
    const auto c = atom_distribution(control, {0.0, 0.0, 0.0});
    const auto t = atom_distribution(target, {l, 0.0, 0.0});
    return detail::mc_run(f, lo, hi, c, t, samples, seed);
}

}  // namespace rydcz
