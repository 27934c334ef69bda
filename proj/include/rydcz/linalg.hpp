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

/// \file linalg.hpp
///
/// Labelled state vectors and Hermitian operators, a cyclic Jacobi
/// eigensolver, and exact propagation under piecewise-constant Hamiltonians.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rydcz {

using Complex = std::complex<double>;
using Labels = std::vector<std::string>;

namespace detail {

inline void require_unique(const Labels& labels, const char* what) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw std::invalid_argument(std::string(what) + ": duplicate basis label '" + l + "'");
        }
    }
}

inline std::size_t index_of(const Labels& labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

class StateVector {
  public:
    StateVector() = default;

    StateVector(Labels labels, Eigen::VectorXcd amplitudes)
        : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
        if (static_cast<std::size_t>(amps_.size()) != labels_.size()) {
            throw std::invalid_argument("StateVector: label count does not match amplitude count");
        }
        detail::require_unique(labels_, "StateVector");
        if (amps_.norm() > 1.0 + 1e-12) throw std::invalid_argument("StateVector: norm exceeds 1");
    }

    /// |label> in the given basis.
    static StateVector basis_state(Labels labels, const std::string& label) {
        Eigen::VectorXcd a = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(labels.size()));
        a(static_cast<Eigen::Index>(detail::index_of(labels, label))) = 1.0;
        return {std::move(labels), std::move(a)};
    }

    const Labels& labels() const { return labels_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::size_t size() const { return labels_.size(); }
    double norm() const { return amps_.norm(); }

    std::size_t index_of(const std::string& label) const { return detail::index_of(labels_, label); }
    Complex amplitude(const std::string& label) const {
        return amps_(static_cast<Eigen::Index>(index_of(label)));
    }
    double probability(const std::string& label) const { return std::norm(amplitude(label)); }

  private:
    Labels labels_;
    Eigen::VectorXcd amps_;
};

class HermitianOperator {
  public:
    static constexpr double kHermitianTolerance = 1e-12;

    HermitianOperator() = default;

    HermitianOperator(Labels labels, Eigen::MatrixXcd matrix)
        : labels_(std::move(labels)), m_(std::move(matrix)) {
        const auto n = static_cast<Eigen::Index>(labels_.size());
        if (m_.rows() != n || m_.cols() != n) {
            throw std::invalid_argument("HermitianOperator: matrix shape does not match basis");
        }
        detail::require_unique(labels_, "HermitianOperator");
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) {
                if (!std::isfinite(m_(i, j).real()) || !std::isfinite(m_(i, j).imag())) {
                    throw std::invalid_argument("HermitianOperator: non-finite entry");
                }
                if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kHermitianTolerance) {
                    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian at (" +
                                                labels_[static_cast<std::size_t>(i)] + ", " +
                                                labels_[static_cast<std::size_t>(j)] + ")");
                }
            }
        }
    }

    static HermitianOperator zero(Labels labels) {
        const auto n = static_cast<Eigen::Index>(labels.size());
        return {std::move(labels), Eigen::MatrixXcd::Zero(n, n)};
    }

    const Labels& labels() const { return labels_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    std::size_t size() const { return labels_.size(); }

    Complex element(const std::string& row, const std::string& col) const {
        return m_(static_cast<Eigen::Index>(detail::index_of(labels_, row)),
                  static_cast<Eigen::Index>(detail::index_of(labels_, col)));
    }

    double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

  private:
    Labels labels_;
    Eigen::MatrixXcd m_;
};

struct EigenSystem {
    Labels labels;
    Eigen::VectorXd values;    // ascending
    Eigen::MatrixXcd vectors;  // columns
};

/// Cyclic complex Jacobi. Sweeps pairs (p, q) in row order until the
/// off-diagonal Frobenius norm drops below 1e-13 of the total norm.
inline EigenSystem eigen(const HermitianOperator& h) {
    constexpr double kTol = 1e-13;
    constexpr int kMaxSweeps = 100;
    const Eigen::Index n = static_cast<Eigen::Index>(h.size());
    Eigen::MatrixXcd a = h.matrix();
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);

    const double total = a.norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    int sweep = 0;
    while (total > 0.0 && off_norm() > kTol * total) {
        if (++sweep > kMaxSweeps) throw std::runtime_error("eigen: Jacobi iteration did not converge");
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                const Complex phase = a(p, q) / mag;  // e^{i phi}
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 0.5 / tau;
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex eph = std::conj(phase);  // e^{-i phi}
                // J restricted to (p, q): column p = (c, -s e^{-i phi}), column q = (s, c e^{-i phi}).
                const Complex jpp = c, jqp = -s * eph, jpq = s, jqq = c * eph;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem es;
    es.labels = h.labels();
    es.values.resize(n);
    es.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        es.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        es.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return es;
}

/// Caches the eigensystem of one Hamiltonian for repeated propagation.
class Propagator {
  public:
    explicit Propagator(const HermitianOperator& h) : es_(eigen(h)) {}

    const EigenSystem& eigensystem() const { return es_; }
    const Labels& labels() const { return es_.labels; }

    /// V exp(-i Lambda t) V^dagger.
    Eigen::MatrixXcd unitary(double t) const {
        const Eigen::VectorXcd ph = phases(t);
        return es_.vectors * ph.asDiagonal() * es_.vectors.adjoint();
    }

    StateVector apply(double t, const StateVector& psi) const {
        check_basis(psi);
        const Eigen::VectorXcd c = es_.vectors.adjoint() * psi.amplitudes();
        return {es_.labels, es_.vectors * phases(t).cwiseProduct(c)};
    }

    /// Integral over [0, T] of |<k|psi(t)>|^2 for every basis state k,
    /// composite Simpson with an even number of steps no larger than dt.
    Eigen::VectorXd population_integrals(double duration, const StateVector& psi, double dt) const {
        check_basis(psi);
        if (!(duration >= 0.0)) throw std::invalid_argument("population_integral: negative duration");
        const Eigen::Index n = static_cast<Eigen::Index>(es_.labels.size());
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
        if (duration == 0.0) return acc;
        if (!(dt > 0.0) || dt > duration / 1000.0 * (1.0 + 1e-12)) {
            throw std::invalid_argument("population_integral: dt must satisfy 0 < dt <= T/1000");
        }
        long steps = static_cast<long>(std::ceil(duration / dt - 1e-9));
        if (steps % 2) ++steps;
        const double hstep = duration / static_cast<double>(steps);
        const Eigen::VectorXcd c = es_.vectors.adjoint() * psi.amplitudes();
        for (long k = 0; k <= steps; ++k) {
            const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
            const Eigen::VectorXcd amp = es_.vectors * phases(hstep * static_cast<double>(k)).cwiseProduct(c);
            acc += w * amp.cwiseAbs2();
        }
        return acc * (hstep / 3.0);
    }

  private:
    Eigen::VectorXcd phases(double t) const {
        Eigen::VectorXcd ph(es_.values.size());
        for (Eigen::Index k = 0; k < ph.size(); ++k) ph(k) = std::polar(1.0, -es_.values(k) * t);
        return ph;
    }

    void check_basis(const StateVector& psi) const {
        if (psi.labels() != es_.labels) {
            throw std::invalid_argument("propagate: state basis does not match operator basis");
        }
    }

    EigenSystem es_;
};

/// exp(-i H t) psi0.
inline StateVector propagate(const HermitianOperator& h, double t, const StateVector& psi0) {
    if (psi0.labels() != h.labels()) {
        throw std::invalid_argument("propagate: state basis does not match operator basis");
    }
    return Propagator(h).apply(t, psi0);
}

/// Integral over [0, T] of the total population in `subset`. dt defaults to T/4096.
inline double population_integral(const HermitianOperator& h, double duration, const StateVector& psi0,
                                  const Labels& subset, double dt = 0.0) {
    if (subset.empty()) throw std::invalid_argument("population_integral: empty subset");
    if (psi0.labels() != h.labels()) {
        throw std::invalid_argument("population_integral: state basis does not match operator basis");
    }
    std::vector<std::size_t> idx;
    for (const auto& l : subset) idx.push_back(detail::index_of(h.labels(), l));
    if (dt == 0.0) dt = duration / 4096.0;
    const Eigen::VectorXd all = Propagator(h).population_integrals(duration, psi0, dt);
    double s = 0.0;
    for (auto i : idx) s += all(static_cast<Eigen::Index>(i));
    return s;
}

}  // namespace rydcz
