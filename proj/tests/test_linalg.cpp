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


#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "rydcz/linalg.hpp"

namespace rydcz {
namespace {

Labels make_labels(int n) {
    Labels l;
    for (int i = 0; i < n; ++i) l.push_back("s" + std::to_string(i));
    return l;
}

HermitianOperator random_hermitian(int n, std::mt19937_64& rng, double scale = 100.0) {
    std::normal_distribution<double> g(0.0, scale);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    return {make_labels(n), h};
}

StateVector random_state(const Labels& labels, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(labels.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(g(rng), g(rng));
    return {labels, v.normalized()};
}

// i dpsi/dt = H psi integrated by Dormand-Prince 5(4) on the real/imag split.
Eigen::VectorXcd ode_oracle(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0, double t) {
    using State = std::vector<double>;
    const Eigen::Index n = psi0.size();
    State x(2 * static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        x[2 * i] = psi0(i).real();
        x[2 * i + 1] = psi0(i).imag();
    }
    auto rhs = [&](const State& s, State& ds, double) {
        Eigen::VectorXcd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(s[2 * i], s[2 * i + 1]);
        const Eigen::VectorXcd dv = Complex(0.0, -1.0) * (h * v);
        for (Eigen::Index i = 0; i < n; ++i) {
            ds[2 * i] = dv(i).real();
            ds[2 * i + 1] = dv(i).imag();
        }
    };
    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_dense_output(1e-13, 1e-13, ode::runge_kutta_dopri5<State>());
    ode::integrate_const(stepper, rhs, x, 0.0, t, t / 64.0);
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out(i) = Complex(x[2 * i], x[2 * i + 1]);
    return out;
}

TEST(StateVector, Validation) {
    EXPECT_THROW(StateVector({"a", "a"}, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
    EXPECT_THROW(StateVector({"a"}, Eigen::VectorXcd::Zero(2)), std::invalid_argument);
    EXPECT_THROW(StateVector({"a"}, Eigen::VectorXcd::Constant(1, 1.1)), std::invalid_argument);
    const auto s = StateVector::basis_state({"a", "b"}, "b");
    EXPECT_DOUBLE_EQ(s.probability("b"), 1.0);
    EXPECT_THROW(s.amplitude("c"), std::invalid_argument);
}

TEST(HermitianOperator, Validation) {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 2.0;
    EXPECT_THROW(HermitianOperator({"a", "b"}, m), std::invalid_argument);
    EXPECT_THROW(HermitianOperator({"a"}, Eigen::MatrixXcd::Zero(2, 2)), std::invalid_argument);
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(2, 2);
    n(0, 0) = NAN;
    EXPECT_THROW(HermitianOperator({"a", "b"}, n), std::invalid_argument);
}

TEST(Eigen, ReconstructionAndSpectrum) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 14; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto h = random_hermitian(n, rng);
            const auto es = eigen(h);
            const Eigen::MatrixXcd rec = es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
            EXPECT_LE((rec - h.matrix()).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, h.max_abs()));
            EXPECT_LE((es.vectors.adjoint() * es.vectors - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(),
                      1e-12);
            for (Eigen::Index k = 1; k < es.values.size(); ++k) EXPECT_LE(es.values(k - 1), es.values(k));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(h.matrix());
            EXPECT_LE((es.values - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, h.max_abs()));
        }
    }
}

TEST(Eigen, DegenerateAndDiagonal) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 0) = 3.0;
    m(1, 1) = -1.0;
    m(2, 2) = 3.0;
    m(3, 3) = 0.0;
    const auto es = eigen(HermitianOperator(make_labels(4), m));
    EXPECT_DOUBLE_EQ(es.values(0), -1.0);
    EXPECT_DOUBLE_EQ(es.values(1), 0.0);
    EXPECT_DOUBLE_EQ(es.values(2), 3.0);
    EXPECT_DOUBLE_EQ(es.values(3), 3.0);
    const auto z = eigen(HermitianOperator::zero(make_labels(3)));
    EXPECT_EQ(z.values, Eigen::VectorXd::Zero(3));
}

TEST(Eigen, Deterministic) {
    std::mt19937_64 rng(5);
    const auto h = random_hermitian(9, rng);
    const auto a = eigen(h), b = eigen(h);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.vectors, b.vectors);
}

TEST(Propagator, UnitarityAndComposition) {
    std::mt19937_64 rng(3);
    for (int n : {2, 3, 6, 10}) {
        const auto h = random_hermitian(n, rng);
        const Propagator p(h);
        for (double t : {0.0, 1e-3, 0.37, 2.5}) {
            const Eigen::MatrixXcd u = p.unitary(t);
            EXPECT_LE((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
        }
        const double t1 = 0.013, t2 = 0.029;
        EXPECT_LE((p.unitary(t1) * p.unitary(t2) - p.unitary(t1 + t2)).cwiseAbs().maxCoeff(), 1e-12);
        const auto psi = random_state(h.labels(), rng);
        EXPECT_NEAR(p.apply(0.7, psi).norm(), 1.0, 1e-12);
        EXPECT_LE((p.apply(0.0, psi).amplitudes() - psi.amplitudes()).norm(), 1e-14);
    }
}

TEST(Propagator, MatchesOdeOracle) {
    std::mt19937_64 rng(17);
    for (int n : {2, 4, 7}) {
        const auto h = random_hermitian(n, rng, 10.0);
        const auto psi = random_state(h.labels(), rng);
        for (double t : {0.05, 0.3}) {
            const Eigen::VectorXcd want = ode_oracle(h.matrix(), psi.amplitudes(), t);
            const Eigen::VectorXcd got = propagate(h, t, psi).amplitudes();
            EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-8) << "n=" << n << " t=" << t;
        }
    }
}

TEST(Propagator, RejectsForeignBasis) {
    const auto h = HermitianOperator::zero({"a", "b"});
    EXPECT_THROW(propagate(h, 1.0, StateVector::basis_state({"b", "a"}, "a")), std::invalid_argument);
}

// Resonant Rabi: |c_e|^2 = sin^2(Omega t / 2); over a 2pi pulse the integral is pi / Omega.
TEST(PopulationIntegral, ResonantRabi) {
    for (double omega : {1.0, 12.5, 150.0}) {
        Eigen::MatrixXcd m(2, 2);
        m << 0.0, omega / 2.0, omega / 2.0, 0.0;
        const HermitianOperator h({"g", "e"}, m);
        const double t = 2.0 * std::numbers::pi / omega;
        const auto psi = StateVector::basis_state(h.labels(), "g");
        EXPECT_NEAR(population_integral(h, t, psi, {"e"}), std::numbers::pi / omega, 1e-12 / omega);
        EXPECT_NEAR(population_integral(h, t, psi, {"g", "e"}), t, 1e-12 * t);
    }
}

TEST(PopulationIntegral, Validation) {
    const auto h = HermitianOperator::zero({"a", "b"});
    const auto psi = StateVector::basis_state(h.labels(), "a");
    EXPECT_THROW(population_integral(h, 1.0, psi, {}), std::invalid_argument);
    EXPECT_THROW(population_integral(h, 1.0, psi, {"a"}, 0.01), std::invalid_argument);
    EXPECT_THROW(population_integral(h, -1.0, psi, {"a"}), std::invalid_argument);
    EXPECT_DOUBLE_EQ(population_integral(h, 0.0, psi, {"a"}), 0.0);
}

}  // namespace
}  // namespace rydcz
