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

// Exact sums of signed surds, for orthogonality checks on exact coefficients.

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rydcz/exact.hpp"

namespace rydcz::testing_support {

/// Groups sign * sqrt(n/d) terms by squarefree radicand; each group is a
/// rational multiple of one surd, so the total is exact. Radicands may only
/// carry prime factors below 200 outside a perfect square.
class SurdSum {
  public:
    void add(const ExactCoefficient& c) {
        if (c.is_zero()) return;
        // sqrt(n/d) = sqrt(n d) / d = (s / d) sqrt(f)
        BigInt nd = c.num() * c.den();
        BigInt s = 1;
        BigInt f = 1;
        for (int p = 2; p < 200; ++p) {
            const BigInt pp = p;
            int e = 0;
            while (nd % pp == 0) {
                nd /= pp;
                ++e;
            }
            for (int k = 0; k < e / 2; ++k) s *= pp;
            if (e % 2) f *= pp;
        }
        BigInt root;
        if (!detail::is_perfect_square(nd, root)) throw std::domain_error("SurdSum: radicand has a large prime");
        s *= root;
        terms_[f] = terms_[f] + Rational(c.sign() * s, c.den());
    }

    bool is_zero() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.sign() == 0; });
    }

    bool is_one() const {
        for (const auto& [f, r] : terms_) {
            if (f == 1 ? !(r == Rational(BigInt(1))) : r.sign() != 0) return false;
        }
        return terms_.count(1) == 1;
    }

  private:
    std::map<BigInt, Rational> terms_;
};

}  // namespace rydcz::testing_support
