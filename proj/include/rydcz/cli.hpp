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

/// \file cli.hpp
///
/// The `rydcz` command line: simulate, error-budget, sweep, mc-fluctuation,
/// channels and coeff. `run` never throws; failures are reported as a JSON
/// object on `err` and a nonzero exit code.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rydcz/angular.hpp"
#include "rydcz/constants.hpp"
#include "rydcz/error.hpp"
#include "rydcz/error_model.hpp"
#include "rydcz/fluctuation.hpp"
#include "rydcz/interactions.hpp"
#include "rydcz/io.hpp"
#include "rydcz/protocol.hpp"

namespace rydcz::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kConfig = 3,
    kValidation = 4,
    kIo = 5,
};

inline constexpr const char* kConfigEnv = "RYDCZ_CONFIG";

/// Unreadable input or unwritable output file.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;

    std::vector<double> values() const {
        std::vector<double> v;
        for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
        return v;
    }
};

/// "a:b:n" with a < b and n >= 2.
inline Range parse_range(const std::string& s, const std::string& flag) {
    const auto c1 = s.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos) {
        throw UsageError(flag + " expects a:b:n, got '" + s + "'");
    }
    Range r;
    try {
        std::size_t p1 = 0, p2 = 0, p3 = 0;
        const std::string a = s.substr(0, c1), b = s.substr(c1 + 1, c2 - c1 - 1), n = s.substr(c2 + 1);
        r.lo = std::stod(a, &p1);
        r.hi = std::stod(b, &p2);
        r.n = std::stoi(n, &p3);
        if (p1 != a.size() || p2 != b.size() || p3 != n.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
        throw UsageError(flag + " expects a:b:n, got '" + s + "'");
    }
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.n < 2 || !(r.hi > r.lo)) {
        throw UsageError(flag + " is empty: need a < b and n >= 2, got '" + s + "'");
    }
    return r;
}

struct ResolvedConfig {
    Constants constants = Constants::defaults();
    std::string source = "defaults";
};

/// --config wins over $RYDCZ_CONFIG; neither means built-in defaults.
inline ResolvedConfig resolve_config(const std::string& flag) {
    ResolvedConfig r;
    std::string path = flag;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
    }
    if (!path.empty()) {
        r.constants = load_constants(path);
        r.source = path;
    }
    return r;
}

namespace detail {

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

inline nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline nlohmann::json pulses_json(const ProtocolSpec& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : build_sequence(s)) {
        arr.push_back({{"index", p.index},
                       {"qubit", to_string(p.qubit)},
                       {"rydberg", p.rydberg},
                       {"rabi_mhz", angular_to_mhz(p.rabi)},
                       {"duration_ns", 1e3 * p.duration},
                       {"area_pi", p.area_pi}});
    }
    return arr;
}

inline nlohmann::json spec_json(const ProtocolSpec& s) {
    nlohmann::json j = {{"protocol", to_string(s.kind)},
                        {"omega0_mhz", angular_to_mhz(s.omega0)},
                        {"omega1_mhz", angular_to_mhz(s.omega1)}};
    if (s.kind == ProtocolKind::kVdw) {
        j["omega2_mhz"] = angular_to_mhz(s.omega2);
        j["v1_mhz"] = angular_to_mhz(s.v1);
        j["v2_mhz"] = angular_to_mhz(s.v2);
    } else {
        j["delta_mhz"] = angular_to_mhz(s.delta);
        j["v_dd_mhz"] = angular_to_mhz(s.v_dd());
    }
    return j;
}

inline nlohmann::json budget_json(const ErrorBudget& b) {
    return {{"protocol", to_string(b.kind)},
            {"omega_mhz", b.omega_mhz},
            {"t_g_ns", 1e3 * b.gate_time},
            {"E_decay", b.e_decay},
            {"E_decay_numeric", b.e_decay_numeric},
            {"E_leak", b.e_leak},
            {"E_s", {{"00", b.e_s[0]}, {"01", b.e_s[1]}, {"10", b.e_s[2]}, {"11", b.e_s[3]}}},
            {"total_error", b.total},
            {"flags", b.flags}};
}

inline std::string flags_cell(const std::vector<std::string>& flags) {
    return flags.empty() ? "none" : join(flags, ";");
}

inline nlohmann::json heating_json(const Constants& c, const ProtocolSpec& s) {
    const auto cross = c.pair.crossover_um.at("r1r1");
    const HeatingEstimate h =
        heating_speed(c.pair.c6_r1r1, c.pair.separation_um, s.omega1, c.species, gate_time(s), cross);
    return {{"separation_um", c.pair.separation_um},
            {"dv_formula_nm_per_us", 1e3 * h.dv_formula},
            {"dv_paper_nm_per_us", 1e3 * h.dv_paper},
            {"formula_over_paper", h.ratio()},
            {"displacement_formula_nm", 1e3 * h.displacement_formula},
            {"displacement_paper_nm", 1e3 * h.displacement_paper},
            {"note",
             "6 C6 T hbar / (mu l^7) with T = pi / (4 Omega1) differs from the quoted 0.23 nm/us by the "
             "factor formula_over_paper; both displacements are reported"}};
}

/// Evaluates f(i) for i in [0, n) on `jobs` threads; results keep index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int t = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    std::vector<std::thread> pool;
    for (int k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

inline int default_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hc, 1u, 8u));
}

}  // namespace detail

/// Fig. 3 style table: one row per Omega, rows in sweep order.
inline Table sweep_table(ProtocolKind kind, const Range& range, const Constants& c, int jobs) {
    const auto omegas = range.values();
    const auto leak = leakage_settings(c);
    const auto budgets = detail::parallel_map<ErrorBudget>(omegas.size(), jobs, [&](std::size_t i) {
        return total_error(ProtocolSpec::from_mhz(kind, omegas[i], c), c, leak);
    });
    Table t;
    t.columns = {"omega_mhz", "t_g_ns", "E_decay", "E_leak", "total_error", "flags"};
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        const auto& b = budgets[i];
        t.add_row(std::vector<std::string>{format_number(omegas[i]), format_number(1e3 * b.gate_time),
                                           format_number(b.e_decay), format_number(b.e_leak),
                                           format_number(b.total), detail::flags_cell(b.flags)});
    }
    return t;
}

struct FluctuationSetup {
    double omega_mhz = 24.23;
    double waist_um = 0.76;
    int n_vib = 0;
    int grid_points = 81;
    double half_width_um = 0.4;
};

inline SeparationTable fluctuation_table(const Constants& c, const FluctuationSetup& f) {
    const ProtocolSpec s = ProtocolSpec::from_mhz(ProtocolKind::kVdw, f.omega_mhz, c);
    const double l = c.pair.separation_um;
    return error_vs_separation(s, c, leakage_settings(c), l, separation_grid(l, f.half_width_um, f.grid_points));
}

inline nlohmann::json mc_json(const MCResult& r, const TrapConfig& trap, const SeparationTable& table) {
    const auto d = atom_distribution(trap, {0.0, 0.0, 0.0});
    const auto w = trap_frequencies(trap);
    return {{"mean", r.mean},
            {"std_error", r.std_error},
            {"samples", r.samples},
            {"seed", r.seed},
            {"clamped", r.clamped},
            {"depth_mk", trap.depth_mk},
            {"waist_um", trap.waist_um},
            {"n_vib", trap.n_vib},
            {"omega_x_khz", w[0] / kTwoPi * 1e3},
            {"sigma_xy_nm", 1e3 * d.sigma_xy},
            {"sigma_z_nm", 1e3 * d.sigma_z},
            {"separation_um", table.l_nominal},
            {"nominal_error", table.nominal_error},
            {"table_points", table.separation.size()},
            {"table_negative_points", table.negative_points}};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blockade-error-free Rydberg CZ gates: propagation and error budgets", "rydcz"};
    app.require_subcommand(1);

    std::string config_path;
    std::string protocol = "vdw";
    double omega_mhz = 0.0;
    std::string out_path = "-";

    auto add_common = [&](CLI::App* sub, bool with_protocol) {
        sub->add_option("--config", config_path, "constants override JSON (default: $RYDCZ_CONFIG)");
        sub->add_option("--out", out_path, "output file, '-' for stdout");
        if (with_protocol) {
            sub->add_option("--protocol", protocol, "dipolar or vdw")
                ->check(CLI::IsMember({"dipolar", "vdw"}))
                ->required();
        }
    };

    auto* simulate = app.add_subcommand("simulate", "ideal pulse sequence: final map, phases, t_g");
    add_common(simulate, true);
    simulate->add_option("--omega-mhz", omega_mhz, "target Rabi frequency Omega/2pi in MHz")->required();
    bool trace = false;
    std::string trace_out = "pulse2_trajectory.csv";
    int trace_samples = 401;
    simulate->add_flag("--trace", trace, "write the Pulse-2 trajectory CSV");
    simulate->add_option("--trace-out", trace_out, "trajectory CSV path");
    simulate->add_option("--trace-samples", trace_samples, "trajectory sample count")->check(CLI::Range(2, 1000000));

    auto* budget = app.add_subcommand("error-budget", "decay + leakage error budget at one Omega");
    add_common(budget, true);
    budget->add_option("--omega-mhz", omega_mhz, "target Rabi frequency Omega/2pi in MHz")->required();

    auto* sweep = app.add_subcommand("sweep", "error budget over a range of Omega (CSV)");
    add_common(sweep, true);
    std::string range_text;
    std::string plot_path;
    double plot_scale = 1e5;
    int jobs = detail::default_jobs();
    sweep->add_option("--omega-mhz-range", range_text, "a:b:n in MHz")->required();
    sweep->add_option("--plot", plot_path, "also write an SVG plot");
    sweep->add_option("--plot-scale", plot_scale, "display factor for the plot");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* mc = app.add_subcommand("mc-fluctuation", "Monte Carlo average of the separation error (vdW)");
    add_common(mc, false);
    double depth_mk = 1.0;
    long samples = 100000;
    std::uint64_t seed = 7;
    std::string depth_sweep;
    FluctuationSetup fs;
    mc->add_option("--depth-mk", depth_mk, "trap depth U in mK");
    mc->add_option("--waist-um", fs.waist_um, "beam waist w in um");
    mc->add_option("--n-vib", fs.n_vib, "vibrational quantum number")->check(CLI::NonNegativeNumber);
    mc->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::Range(1000L, 100000000L));
    mc->add_option("--seed", seed, "RNG seed");
    mc->add_option("--omega-mhz", fs.omega_mhz, "Omega1/2pi in MHz");
    mc->add_option("--grid-points", fs.grid_points, "separation table points")->check(CLI::Range(4, 100000));
    mc->add_option("--half-width-um", fs.half_width_um, "separation table half width in um");
    mc->add_option("--depth-sweep", depth_sweep, "a:b:n in mK; emits CSV instead of JSON");
    mc->add_option("--plot", plot_path, "with --depth-sweep, also write an SVG plot");
    mc->add_option("--plot-scale", plot_scale, "display factor for the plot");

    auto* channels = app.add_subcommand("channels", "dipole-dipole channel defects (CSV)");
    add_common(channels, false);
    std::string energies_path;
    channels->add_option("--energies", energies_path, "level energies JSON, GHz")->required();

    auto* coeff = app.add_subcommand("coeff", "exact Clebsch-Gordan / 6-j value");
    add_common(coeff, false);
    std::string coeff_kind;
    std::vector<std::string> coeff_args;
    coeff->add_option("kind", coeff_kind, "cg or sixj")->check(CLI::IsMember({"cg", "sixj"}))->required();
    coeff->add_option("args", coeff_args, "cg: j1 j2 J m1 m2 M; sixj: j1 j2 j3 j4 j5 j6")->expected(6)->required();

    auto fail = [&](int code, const char* kind, const std::string& msg) {
        err << nlohmann::json{{"error", {{"code", code}, {"kind", kind}, {"message", msg}}}}.dump() << "\n";
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(kUsage, "usage", e.what());
    }

    try {
        if (simulate->parsed()) {
            const auto cfg = resolve_config(config_path);
            const auto spec = ProtocolSpec::from_mhz(protocol_from_string(protocol), omega_mhz, cfg.constants);
            const auto res = simulate_ideal(spec);
            nlohmann::json j;
            j["command"] = "simulate";
            j["spec"] = detail::spec_json(spec);
            j["t_g_ns"] = 1e3 * res.gate_time;
            j["infidelity"] = res.infidelity();
            nlohmann::json map = nlohmann::json::object(), phases = nlohmann::json::object();
            const auto& inputs = computational_inputs();
            for (int col = 0; col < 4; ++col) {
                nlohmann::json column = nlohmann::json::object();
                for (int row = 0; row < 4; ++row) column[inputs[row]] = detail::complex_json(res.gate(row, col));
                map[inputs[col]] = column;
                phases[inputs[col]] = std::arg(res.gate(col, col)) / std::numbers::pi;
            }
            j["final_map"] = map;
            j["phase_over_pi"] = phases;
            j["pulses"] = detail::pulses_json(spec);
            j["config_source"] = cfg.source;
            if (trace) {
                const auto tr = pulse2_trajectory(spec, trace_samples);
                Table t;
                t.columns = {"t_us"};
                for (const auto& l : tr.labels) t.columns.push_back("P[" + l + "]");
                t.columns.push_back("phase_r1_1_over_pi");
                for (std::size_t k = 0; k < tr.times.size(); ++k) {
                    std::vector<double> row{tr.times[k]};
                    row.insert(row.end(), tr.populations[k].begin(), tr.populations[k].end());
                    row.push_back(tr.phase[k] / std::numbers::pi);
                    t.add_row(row);
                }
                std::ostringstream csv;
                write_csv(csv, t,
                          {{"command", "simulate --trace"},
                           {"spec", detail::spec_json(spec)},
                           {"initial_state", "r1 1"},
                           {"pulse", 2},
                           {"config", to_json(cfg.constants)}});
                detail::write_text(trace_out, csv.str(), out);
                j["trace_file"] = trace_out;
            }
            detail::write_text(out_path, j.dump(2) + "\n", out);
            return kOk;
        }

        if (budget->parsed()) {
            const auto cfg = resolve_config(config_path);
            const auto spec = ProtocolSpec::from_mhz(protocol_from_string(protocol), omega_mhz, cfg.constants);
            const auto b = total_error(spec, cfg.constants);
            nlohmann::json j = detail::budget_json(b);
            j["command"] = "error-budget";
            j["spec"] = detail::spec_json(spec);
            const auto table = residence_table_closed_form(spec);
            nlohmann::json res = nlohmann::json::object();
            for (const auto& [in, row] : table.time) res[in] = row;
            j["residence_us"] = res;
            if (spec.kind == ProtocolKind::kVdw) {
                const auto rep = validate_separation(cfg.constants.pair.separation_um, cfg.constants);
                j["separation_check"] = {{"separation_um", cfg.constants.pair.separation_um},
                                         {"ok", rep.ok},
                                         {"violations", rep.violations}};
                if (rep.ok) j["heating"] = detail::heating_json(cfg.constants, spec);
            }
            j["config"] = to_json(cfg.constants);
            j["config_source"] = cfg.source;
            detail::write_text(out_path, j.dump(2) + "\n", out);
            return kOk;
        }

        if (sweep->parsed()) {
            const Range range = parse_range(range_text, "--omega-mhz-range");
            const auto cfg = resolve_config(config_path);
            const auto kind = protocol_from_string(protocol);
            const Table t = sweep_table(kind, range, cfg.constants, jobs);
            std::ostringstream csv;
            write_csv(csv, t,
                      {{"command", "sweep"},
                       {"protocol", protocol},
                       {"omega_mhz_range", {range.lo, range.hi, range.n}},
                       {"config", to_json(cfg.constants)}});
            detail::write_text(out_path, csv.str(), out);
            if (!plot_path.empty()) {
                PlotSpec ps;
                ps.title = protocol + " gate error vs Omega";
                ps.x_column = "omega_mhz";
                ps.x_label = "Omega/2pi (MHz)";
                ps.y_columns = {"E_decay", "E_leak", "total_error"};
                ps.y_scale = plot_scale;
                ps.y_label = "error x " + format_number(plot_scale);
                detail::write_text(plot_path, emit_plot(t, ps), out);
            }
            return kOk;
        }

        if (mc->parsed()) {
            const auto cfg = resolve_config(config_path);
            const SeparationTable table = fluctuation_table(cfg.constants, fs);
            auto trap_at = [&](double u) {
                TrapConfig tc;
                tc.depth_mk = u;
                tc.waist_um = fs.waist_um;
                tc.n_vib = fs.n_vib;
                tc.species = cfg.constants.species;
                return tc;
            };
            const double l = cfg.constants.pair.separation_um;
            if (depth_sweep.empty()) {
                const TrapConfig tc = trap_at(depth_mk);
                const MCResult r = mc_average(table, tc, tc, l, samples, seed);
                nlohmann::json j = mc_json(r, tc, table);
                j["command"] = "mc-fluctuation";
                j["omega_mhz"] = fs.omega_mhz;
                j["config_source"] = cfg.source;
                detail::write_text(out_path, j.dump(2) + "\n", out);
                return kOk;
            }
            const Range range = parse_range(depth_sweep, "--depth-sweep");
            Table t;
            t.columns = {"depth_mk", "sigma_xy_nm", "sigma_z_nm", "mean_error", "std_error", "clamped"};
            for (double u : range.values()) {
                const TrapConfig tc = trap_at(u);
                const MCResult r = mc_average(table, tc, tc, l, samples, seed);
                const auto d = atom_distribution(tc, {0.0, 0.0, 0.0});
                t.add_row(std::vector<double>{u, 1e3 * d.sigma_xy, 1e3 * d.sigma_z, r.mean, r.std_error,
                                              static_cast<double>(r.clamped)});
            }
            std::ostringstream csv;
            write_csv(csv, t,
                      {{"command", "mc-fluctuation --depth-sweep"},
                       {"depth_mk_range", {range.lo, range.hi, range.n}},
                       {"waist_um", fs.waist_um},
                       {"n_vib", fs.n_vib},
                       {"samples", samples},
                       {"seed", seed},
                       {"omega_mhz", fs.omega_mhz},
                       {"grid_points", fs.grid_points},
                       {"half_width_um", fs.half_width_um},
                       {"config", to_json(cfg.constants)}});
            detail::write_text(out_path, csv.str(), out);
            if (!plot_path.empty()) {
                PlotSpec ps;
                ps.title = "averaged separation error vs trap depth";
                ps.x_column = "depth_mk";
                ps.x_label = "U (mK)";
                ps.y_columns = {"mean_error"};
                ps.y_scale = plot_scale;
                ps.y_label = "error x " + format_number(plot_scale);
                detail::write_text(plot_path, emit_plot(t, ps), out);
            }
            return kOk;
        }

        if (channels->parsed()) {
            std::ifstream in(energies_path);
            if (!in) throw IoError("cannot open energies file '" + energies_path + "'");
            nlohmann::json ej;
            try {
                in >> ej;
            } catch (const nlohmann::json::exception& e) {
                throw ConfigError("malformed energies file '" + energies_path + "': " + e.what());
            }
            LevelEnergies energies;
            try {
                energies = level_energies_from_json(ej);
                Table t;
                t.columns = {"index", "orbital_a", "orbital_b", "defect_ghz", "relevant"};
                for (const auto& ch : enumerate_channels(energies)) {
                    t.add_row(std::vector<std::string>{std::to_string(ch.index), ch.orbital_a, ch.orbital_b,
                                                       format_number(angular_to_mhz(ch.defect) / 1e3),
                                                       ch.relevant ? "yes" : "no"});
                }
                std::ostringstream csv;
                write_csv(csv, t, {{"command", "channels"}, {"energies_ghz", ej}});
                detail::write_text(out_path, csv.str(), out);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
            return kOk;
        }

        if (coeff->parsed()) {
            std::vector<HalfInt> a;
            for (const auto& s : coeff_args) {
                try {
                    a.push_back(HalfInt::parse(s));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }
            const ExactCoefficient c = coeff_kind == "cg" ? clebsch_gordan(a[0], a[1], a[2], a[3], a[4], a[5])
                                                          : wigner_6j(a[0], a[1], a[2], a[3], a[4], a[5]);
            nlohmann::json j = {{"command", "coeff"},
                                {"kind", coeff_kind},
                                {"args", coeff_args},
                                {"sign", c.sign()},
                                {"num", c.num().str()},
                                {"den", c.den().str()},
                                {"exact", c.str()},
                                {"value", c.value()}};
            detail::write_text(out_path, j.dump(2) + "\n", out);
            return kOk;
        }
        return fail(kUsage, "usage", "no subcommand");
    } catch (const UsageError& e) {
        return fail(kUsage, "usage", e.what());
    } catch (const ConfigError& e) {
        return fail(kConfig, "config", e.what());
    } catch (const IoError& e) {
        return fail(kIo, "io", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kValidation, "validation", e.what());
    } catch (const std::domain_error& e) {
        return fail(kValidation, "validation", e.what());
    } catch (const std::exception& e) {
        return fail(kInternal, "internal", e.what());
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace rydcz::cli
