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

/// \file angular.hpp
///
/// Exact Clebsch-Gordan coefficients and Wigner 6-j symbols, and the leakage
/// Rabi-frequency ratios assembled from them.
///
/// NOTATION. `clebsch_gordan(j1, j2, J, m1, m2, M)` is
///
///       C^{j1, j2, J}_{m1, m2, M} = <j1 m1; j2 m2 | J M>
///
/// i.e. the three j's (superscripts) come first, then the three projections
/// (subscripts), in the same order. Condon-Shortley phases.
///
/// All sums are evaluated in exact big-integer rational arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rydcz/exact.hpp"

namespace rydcz {

namespace detail {

inline const BigInt& factorial(int n) {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(512);
        t[0] = 1;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<unsigned>(i);
        return t;
    }();
    if (n < 0 || static_cast<std::size_t>(n) >= table.size()) {
        throw std::out_of_range("factorial argument out of range: " + std::to_string(n));
    }
    return table[static_cast<std::size_t>(n)];
}

inline void require_j(HalfInt j, const char* what) {
    if (j.twice < 0) throw std::invalid_argument(std::string(what) + ": negative angular momentum " + j.str());
}

inline void require_jm(HalfInt j, HalfInt m, const char* what) {
    require_j(j, what);
    if (std::abs(m.twice) > j.twice || (j.twice - m.twice) % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": projection " + m.str() +
                                    " incompatible with j = " + j.str());
    }
}

/// Triangle rule including integrality of a + b + c.
inline bool triangle(HalfInt a, HalfInt b, HalfInt c) {
    const int s = a.twice + b.twice + c.twice;
    if (s % 2 != 0) return false;
    return c.twice <= a.twice + b.twice && c.twice >= std::abs(a.twice - b.twice);
}

/// Delta(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!, arguments already triangle-valid.
inline Rational triangle_coefficient(HalfInt a, HalfInt b, HalfInt c) {
    const int x = (a.twice + b.twice - c.twice) / 2;
    const int y = (a.twice - b.twice + c.twice) / 2;
    const int z = (-a.twice + b.twice + c.twice) / 2;
    const int w = (a.twice + b.twice + c.twice) / 2 + 1;
    return Rational(factorial(x) * factorial(y) * factorial(z), factorial(w));
}

/// h(3, 2) == 3/2, h(1) == 1.
constexpr HalfInt h(int num, int den = 1) {
    return den == 1 ? HalfInt(num) : HalfInt::from_twice(num);
}

}  // namespace detail

/// C^{j1,j2,J}_{m1,m2,M}. Zero when M != m1 + m2 or the triangle rule fails.
inline ExactCoefficient clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt J, HalfInt m1, HalfInt m2,
                                       HalfInt M) {
    detail::require_jm(j1, m1, "clebsch_gordan");
    detail::require_jm(j2, m2, "clebsch_gordan");
    detail::require_jm(J, M, "clebsch_gordan");
    if (M.twice != m1.twice + m2.twice) return ExactCoefficient::zero();
    if (!detail::triangle(j1, j2, J)) return ExactCoefficient::zero();

    auto half = [](int twice) { return twice / 2; };
    const int a = half(j1.twice + j2.twice - J.twice);
    const int b = half(j1.twice - m1.twice);
    const int c = half(j2.twice + m2.twice);
    const int d = half(J.twice - j2.twice + m1.twice);
    const int e = half(J.twice - j1.twice - m2.twice);

    using detail::factorial;
    Rational pref = Rational(BigInt(J.twice + 1)) * detail::triangle_coefficient(j1, j2, J);
    pref = pref * Rational(factorial(half(j1.twice + m1.twice)) * factorial(b) * factorial(c) *
                           factorial(half(j2.twice - m2.twice)) * factorial(half(J.twice + M.twice)) *
                           factorial(half(J.twice - M.twice)));

    Rational sum;
    const int kmin = std::max({0, -d, -e});
    const int kmax = std::min({a, b, c});
    for (int k = kmin; k <= kmax; ++k) {
        BigInt den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                     factorial(d + k) * factorial(e + k);
        sum = sum + Rational(BigInt(k % 2 == 0 ? 1 : -1), den);
    }
    return ExactCoefficient(sum.sign(), pref * sum * sum);
}

/// { j1 j2 j3 }
/// { j4 j5 j6 }   Zero when any of the four triads violates the triangle rule.
inline ExactCoefficient wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5,
                                  HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6}) detail::require_j(j, "wigner_6j");
    if (!detail::triangle(j1, j2, j3) || !detail::triangle(j1, j5, j6) ||
        !detail::triangle(j4, j2, j6) || !detail::triangle(j4, j5, j3)) {
        return ExactCoefficient::zero();
    }
    const Rational deltas = detail::triangle_coefficient(j1, j2, j3) *
                            detail::triangle_coefficient(j1, j5, j6) *
                            detail::triangle_coefficient(j4, j2, j6) *
                            detail::triangle_coefficient(j4, j5, j3);

    const std::array<int, 4> lower = {
        (j1.twice + j2.twice + j3.twice) / 2, (j1.twice + j5.twice + j6.twice) / 2,
        (j4.twice + j2.twice + j6.twice) / 2, (j4.twice + j5.twice + j3.twice) / 2};
    const std::array<int, 3> upper = {(j1.twice + j2.twice + j4.twice + j5.twice) / 2,
                                      (j2.twice + j3.twice + j5.twice + j6.twice) / 2,
                                      (j3.twice + j1.twice + j6.twice + j4.twice) / 2};
    const int tmin = *std::max_element(lower.begin(), lower.end());
    const int tmax = *std::min_element(upper.begin(), upper.end());

    using detail::factorial;
    Rational sum;
    for (int t = tmin; t <= tmax; ++t) {
        BigInt den = 1;
        for (int a : lower) den *= factorial(t - a);
        for (int b : upper) den *= factorial(b - t);
        sum = sum + Rational(BigInt(t % 2 == 0 ? 1 : -1) * factorial(t + 1), den);
    }
    return ExactCoefficient(sum.sign(), deltas * sum * sum);
}


/// Exact sum over the intermediate projection m of C^{ja,1,jb}_{ma,q,m} C^{jb,jc,F}_{m,mc,MF},
/// the two-step coupling pattern that appears in every leakage Rabi frequency.
inline ExactCoefficient coupled_projection_sum(HalfInt ja, HalfInt ma, int q, HalfInt jb, HalfInt jc,
                                               HalfInt mc, HalfInt F, HalfInt MF) {
    ExactCoefficient total;
    for (int tm = -jb.twice; tm <= jb.twice; tm += 2) {
        const HalfInt m = HalfInt::from_twice(tm);
        total = total + clebsch_gordan(ja, 1, jb, ma, q, m) * clebsch_gordan(jb, jc, F, m, mc, MF);
    }
    return total;
}

/// Rabi-frequency ratios of the leak channels in the vdW protocol.
struct VdwLeakageRatios {
    // |Omega_0^(lea) / Omega_0| from the angular factors, exactly 1.
    ExactCoefficient unit_ratio;
    ExactCoefficient drive;  // angular part of Omega_0
    std::array<ExactCoefficient, 3> components;  // lea1, lea2, lea3

    double lea3_over_lea = 0.0;  // (1 + 1/n)^{3/2}
    double p1_over_drive = 0.0;  // (1 + 1/n)^{3/2}
    double p2_over_drive = 0.0;  // (1 + 1/n)^{-3/2}

    double unit() const { return unit_ratio.value(); }
};

/// Radial matrix elements (5S||r||nP) scale as n^{-3/2}; neighbouring manifolds
/// therefore carry the factor (1 + 1/n)^{+-3/2}. The unit ratio is evaluated from
/// the Clebsch-Gordan / 6-j expressions for right-hand polarised excitation of
/// |1> = |5S1/2 F=2 m=2> -> |n p3/2 mJ=3/2 mI=3/2>, and of |0> = |F=1 m=1> into
/// the three components of |p0>.
inline VdwLeakageRatios leakage_ratios_vdw(int n1) {
    using detail::h;
    if (n1 < 2) throw std::invalid_argument("leakage_ratios_vdw: n1 must be >= 2");
    const int qbar = -1;
    const HalfInt i_nuc = h(3, 2);
    const auto six = wigner_6j(0, 1, 1, h(3, 2), h(1, 2), h(1, 2));
    const auto six_p12 = wigner_6j(0, 1, 1, h(1, 2), h(1, 2), h(1, 2));
    const auto two = ExactCoefficient::from_rational(Rational(2));
    const auto root2 = ExactCoefficient::sqrt_of(Rational(2));

    VdwLeakageRatios r;
    r.drive = coupled_projection_sum(h(3, 2), h(3, 2), qbar, h(1, 2), i_nuc, h(3, 2), 2, 2) * two * six;
    r.components[0] = coupled_projection_sum(h(3, 2), h(1, 2), qbar, h(1, 2), i_nuc, h(3, 2), 1, 1) * two * six;
    r.components[1] = coupled_projection_sum(h(3, 2), h(3, 2), qbar, h(1, 2), i_nuc, h(1, 2), 1, 1) * two * six;
    r.components[2] = -(coupled_projection_sum(h(1, 2), h(1, 2), qbar, h(1, 2), i_nuc, h(3, 2), 1, 1) *
                        root2 * six_p12);
    const ExactCoefficient lea = root_sum_of_squares(r.components);
    r.unit_ratio = ExactCoefficient(1, (lea / r.drive).square());

    const double scale = std::pow(1.0 + 1.0 / n1, 1.5);
    r.lea3_over_lea = scale;
    r.p1_over_drive = scale;
    r.p2_over_drive = 1.0 / scale;
    return r;
}

/// Two-photon leakage ratio of the dipolar protocol, |0> leaking to |d0> via
/// |5P3/2 F=2 m=2>, relative to the drive |1> -> |5P3/2 F=3 m=3> -> |nD5/2 mJ=5/2 mI=3/2>.
struct DipolarLeakageRatio {
    ExactCoefficient lower;        // Omega_low (angular part, sign included)
    ExactCoefficient upper;        // Omega_upp
    ExactCoefficient lower_leak;   // Omega_low'
    std::array<ExactCoefficient, 3> upper_leak_components;  // Omega_upp1..3
    ExactCoefficient upper_leak;   // sqrt(sum of squares)
    ExactCoefficient blocked_intermediate;  // C^{1,1,3}_{1,1,2}: |0> -> |F=3 m=2> is forbidden
    ExactCoefficient ratio;        // |Omega_low' Omega_upp' / (Omega_low Omega_upp)|

    double value() const { return ratio.value(); }
};

inline DipolarLeakageRatio leakage_ratio_dipolar() {
    using detail::h;
    const int q = 1;
    const int qbar = -1;
    const HalfInt i_nuc = h(3, 2);
    DipolarLeakageRatio r;

    const auto sqrt_of = [](long n) { return ExactCoefficient::sqrt_of(Rational(BigInt(n))); };

    r.lower = -(clebsch_gordan(2, 1, 3, 2, q, 3) * sqrt_of(20) *
                wigner_6j(h(3, 2), h(1, 2), 1, 2, 3, h(3, 2)));
    const auto six_d52 = wigner_6j(1, 2, 1, h(5, 2), h(3, 2), h(1, 2));
    const auto six_d32 = wigner_6j(1, 2, 1, h(3, 2), h(3, 2), h(1, 2));
    r.upper = coupled_projection_sum(h(5, 2), h(5, 2), qbar, h(3, 2), i_nuc, h(3, 2), 3, 3) *
              sqrt_of(18) * six_d52;

    r.blocked_intermediate = clebsch_gordan(1, 1, 3, 1, q, 2);
    r.lower_leak = clebsch_gordan(1, 1, 2, 1, q, 2) * sqrt_of(12) *
                   wigner_6j(h(3, 2), h(1, 2), 1, 1, 2, h(3, 2));
    r.upper_leak_components[0] =
        coupled_projection_sum(h(5, 2), h(3, 2), qbar, h(3, 2), i_nuc, h(3, 2), 2, 2) * sqrt_of(18) * six_d52;
    r.upper_leak_components[1] =
        coupled_projection_sum(h(5, 2), h(5, 2), qbar, h(3, 2), i_nuc, h(1, 2), 2, 2) * sqrt_of(18) * six_d52;
    r.upper_leak_components[2] =
        -(coupled_projection_sum(h(3, 2), h(3, 2), qbar, h(3, 2), i_nuc, h(3, 2), 2, 2) * sqrt_of(12) *
          six_d32);
    r.upper_leak = root_sum_of_squares(r.upper_leak_components);

    const auto q_ratio = (r.lower_leak * r.upper_leak) / (r.lower * r.upper);
    r.ratio = ExactCoefficient(1, q_ratio.square());
    return r;
}

/// Leak ratio of the dipolar Pulse-2 channel |0> -> |d0> on the target atom.
///
/// Reconstructed: Pulse-2 addresses the target with the same two beams and
/// polarisations as Pulse-1 does the control, so the angular factors, and with
/// them the ratio, are those of `leakage_ratio_dipolar()`.
inline double leakage_ratio_dipolar_pulse2() { return leakage_ratio_dipolar().value(); }

}  // namespace rydcz
