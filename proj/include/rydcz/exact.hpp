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

/// \file exact.hpp
///
/// Exact carriers for angular-momentum coefficients: half-integers, big
/// rationals and signed square roots of rationals.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

namespace rydcz {

using BigInt = boost::multiprecision::cpp_int;

/// j = twice / 2. Arithmetic is done on `twice` so that j +/- m stays integral.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr HalfInt(int j) : twice(2 * j) {}  // NOLINT: integers convert implicitly

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    /// Parses "3/2", "-1/2", "2".
    static HalfInt parse(const std::string& s) {
        try {
            std::size_t pos = 0;
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                const int v = std::stoi(s, &pos);
                if (pos != s.size()) throw std::invalid_argument(s);
                return HalfInt(v);
            }
            const int num = std::stoi(s.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument(s);
            if (s.substr(slash + 1) != "2") throw std::invalid_argument(s);
            if (num % 2 == 0) throw std::invalid_argument(s);
            return from_twice(num);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed half-integer '" + s + "'");
        }
    }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr double value() const { return 0.5 * twice; }

    std::string str() const {
        return is_integer() ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

/// Non-negative-denominator rational in lowest terms.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(BigInt n, BigInt d = 1) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

namespace detail {

/// Ratio of two big positive integers as a double without overflowing.
inline double big_ratio(const BigInt& num, const BigInt& den) {
    if (num == 0) return 0.0;
    const auto nbits = static_cast<long>(boost::multiprecision::msb(num));
    const auto dbits = static_cast<long>(boost::multiprecision::msb(den));
    constexpr long kKeep = 60;
    const long nshift = nbits > kKeep ? nbits - kKeep : 0;
    const long dshift = dbits > kKeep ? dbits - kKeep : 0;
    const double n = static_cast<double>(BigInt(num >> nshift));
    const double d = static_cast<double>(BigInt(den >> dshift));
    return std::ldexp(n / d, static_cast<int>(nshift - dshift));
}

inline bool is_perfect_square(const BigInt& x, BigInt& root) {
    if (x < 0) return false;
    root = boost::multiprecision::sqrt(x);
    return root * root == x;
}

}  // namespace detail

inline double to_double(const Rational& r) {
    const double mag = detail::big_ratio(r.num < 0 ? BigInt(-r.num) : r.num, r.den);
    return r.num < 0 ? -mag : mag;
}

/// value = sign * sqrt(num / den), with num/den in lowest terms.
class ExactCoefficient {
  public:
    ExactCoefficient() = default;

    /// sign * sqrt(magnitude); magnitude must be non-negative.
    ExactCoefficient(int sign, Rational magnitude) : square_(std::move(magnitude)) {
        if (square_.sign() < 0) throw std::domain_error("ExactCoefficient: negative radicand");
        sign_ = square_.sign() == 0 ? 0 : (sign > 0 ? 1 : (sign < 0 ? -1 : 0));
        if (sign_ == 0) square_ = Rational();
    }

    static ExactCoefficient zero() { return {}; }
    static ExactCoefficient one() { return {1, Rational(1)}; }
    static ExactCoefficient from_rational(const Rational& r) {
        return {r.sign(), r * r};
    }
    /// sqrt(r) for r >= 0.
    static ExactCoefficient sqrt_of(const Rational& r) { return {1, r}; }

    int sign() const { return sign_; }
    const BigInt& num() const { return square_.num; }
    const BigInt& den() const { return square_.den; }
    /// value^2 as an exact rational.
    const Rational& square() const { return square_; }
    bool is_zero() const { return sign_ == 0; }

    double value() const { return sign_ * std::sqrt(to_double(square_)); }

    ExactCoefficient operator-() const { return {-sign_, square_}; }

    friend ExactCoefficient operator*(const ExactCoefficient& a, const ExactCoefficient& b) {
        return {a.sign_ * b.sign_, a.square_ * b.square_};
    }
    friend ExactCoefficient operator/(const ExactCoefficient& a, const ExactCoefficient& b) {
        if (b.is_zero()) throw std::domain_error("ExactCoefficient: division by zero");
        return {a.sign_ * b.sign_, a.square_ / b.square_};
    }

    /// Exact sum; defined only when the two radicands differ by a rational
    /// square factor (always true when either term is zero).
    friend ExactCoefficient operator+(const ExactCoefficient& a, const ExactCoefficient& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // sqrt(a) = sqrt(b) * sqrt(a/b); need a/b to be a rational square.
        const Rational q = a.square_ / b.square_;
        BigInt rn, rd;
        if (!detail::is_perfect_square(q.num, rn) || !detail::is_perfect_square(q.den, rd)) {
            throw std::domain_error("ExactCoefficient: sum of incommensurate surds");
        }
        const Rational coeff = Rational(a.sign_ * rn, rd) + Rational(b.sign_);
        return from_rational(coeff) * ExactCoefficient(b.sign_ == 0 ? 0 : 1, b.square_);
    }

    friend bool operator==(const ExactCoefficient& a, const ExactCoefficient& b) {
        return a.sign_ == b.sign_ && a.square_ == b.square_;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        return s + "sqrt(" + square_.num.str() + "/" + square_.den.str() + ")";
    }

  private:
    int sign_ = 0;
    Rational square_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactCoefficient& c) {
    return os << c.str();
}

/// sqrt(sum of squares) of exact coefficients; always exact.
inline ExactCoefficient root_sum_of_squares(std::span<const ExactCoefficient> terms) {
    Rational acc;
    for (const auto& t : terms) acc = acc + t.square();
    return ExactCoefficient::sqrt_of(acc);
}

}  // namespace rydcz
