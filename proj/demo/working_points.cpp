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


// Usage example: ideal gate check and error budget at the two working points,
// plus a small Monte Carlo estimate of the separation-fluctuation error.

#include <cstdio>

#include "rydcz/error_model.hpp"
#include "rydcz/fluctuation.hpp"

int main() {
    using namespace rydcz;
    const Constants c = Constants::defaults();

    for (auto [kind, mhz] : {std::pair{ProtocolKind::kVdw, 24.23}, std::pair{ProtocolKind::kDipolar, 200.9}}) {
        const ProtocolSpec s = ProtocolSpec::from_mhz(kind, mhz, c);
        const auto ideal = simulate_ideal(s);
        const auto b = total_error(s, c);
        std::printf("%-7s Omega/2pi = %6.2f MHz  t_g = %7.2f ns  ideal 1-F = %.1e\n", to_string(kind).c_str(), mhz,
                    1e3 * b.gate_time, ideal.infidelity());
        std::printf("        E_decay = %.3e  E_leak = %.3e  total = %.3e\n", b.e_decay, b.e_leak, b.total);
    }

    const ProtocolSpec s = ProtocolSpec::from_mhz(ProtocolKind::kVdw, 24.23, c);
    const double l = c.pair.separation_um;
    const auto table = error_vs_separation(s, c, leakage_settings(c), l, separation_grid(l, 0.4, 41));
    for (double depth : {1.0, 21.0}) {
        TrapConfig trap;
        trap.depth_mk = depth;
        const auto r = mc_average(table, trap, trap, l, 20000, 7);
        std::printf("U = %4.1f mK  mean E_L = %.3e +- %.1e\n", depth, r.mean, r.std_error);
    }
    return 0;
}
