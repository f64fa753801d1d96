// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "belltet/errors.hpp"
#include "belltet/state.hpp"

using namespace belltet;

namespace {
double max_abs_delta(const BellDiagonalState& a, const BellDiagonalState& b) {
    return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2),
                     std::abs(a.c3 - b.c3)});
}
}  // namespace

TEST_CASE("spectrum of the maximally mixed state is flat") {
    const Spectrum sp = spectrum(new_state(0.0, 0.0, 0.0));
    CHECK(sp.lambda00 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sp.lambda01 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sp.lambda10 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sp.lambda11 == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("spectrum at (0.5,0,0)") {
    const Spectrum sp = spectrum(new_state(0.5, 0.0, 0.0));
    CHECK(std::abs(sp.lambda00 - 0.375) < 1e-15);
    CHECK(std::abs(sp.lambda01 - 0.375) < 1e-15);
    CHECK(std::abs(sp.lambda10 - 0.125) < 1e-15);
    CHECK(std::abs(sp.lambda11 - 0.125) < 1e-15);
}

TEST_CASE("spectrum at (0.5,0.3,0.1)") {
    const Spectrum sp = spectrum(new_state(0.5, 0.3, 0.1));
    CHECK(std::abs(sp.lambda00 - 0.325) < 1e-15);
    CHECK(std::abs(sp.lambda01 - 0.425) < 1e-15);
    CHECK(std::abs(sp.lambda10 - 0.225) < 1e-15);
    CHECK(std::abs(sp.lambda11 - 0.025) < 1e-15);
}

TEST_CASE("points outside the tetrahedron are rejected") {
    CHECK_THROWS_AS(new_state(1.0, 1.0, 1.0), OutsideTetrahedron);
    CHECK_THROWS_AS(new_state(0.8, 0.4, 0.6), OutsideTetrahedron);
    CHECK_THROWS_AS(new_state(1.5, 0.0, 0.0), OutsideTetrahedron);
    CHECK_THROWS_AS(new_state(std::nan(""), 0.0, 0.0), OutsideTetrahedron);
    // Vertices and faces are inside (closed set).
    CHECK_NOTHROW(new_state(1.0, 1.0, -1.0));
    CHECK_NOTHROW(new_state(0.5, 0.5, 0.0));
}

TEST_CASE("inside_tetrahedron tolerance") {
    CHECK(inside_tetrahedron(1.0, 1.0, -1.0));
    CHECK(inside_tetrahedron(1.0 + 1e-13, 1.0, -1.0));
    CHECK_FALSE(inside_tetrahedron(1.0 + 1e-10, 1.0, -1.0));
    CHECK_FALSE(inside_tetrahedron(0.0, 0.0, 1.5));
}

TEST_CASE("density matrix of the (1,1,-1) vertex") {
    const DensityMatrix rho = density_matrix(new_state(1.0, 1.0, -1.0));
    CHECK(std::abs(rho(0, 0)) < 1e-15);
    CHECK(std::abs(rho(3, 3)) < 1e-15);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rho(2, 2) - 0.5) < 1e-15);
    CHECK(std::abs(rho(1, 2) - 0.5) < 1e-15);
    CHECK(std::abs(rho(2, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rho(0, 3)) < 1e-15);
}

TEST_CASE("density matrix at (0.5,0.3,0.1)") {
    const DensityMatrix rho = density_matrix(new_state(0.5, 0.3, 0.1));
    CHECK(std::abs(rho(0, 0) - 0.275) < 1e-15);
    CHECK(std::abs(rho(1, 1) - 0.225) < 1e-15);
    CHECK(std::abs(rho(2, 2) - 0.225) < 1e-15);
    CHECK(std::abs(rho(3, 3) - 0.275) < 1e-15);
    CHECK(std::abs(rho(0, 3) - 0.05) < 1e-15);
    CHECK(std::abs(rho(3, 0) - 0.05) < 1e-15);
    CHECK(std::abs(rho(1, 2) - 0.2) < 1e-15);
    CHECK(std::abs(rho(2, 1) - 0.2) < 1e-15);
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-15);
}

TEST_CASE("density matrix round trip") {
    const BellDiagonalState s = new_state(0.8, -0.4, 0.2);
    const BellDiagonalState back = from_density_matrix(density_matrix(s));
    CHECK(max_abs_delta(s, back) < 1e-14);
}

TEST_CASE("round trip over random states") {
    double worst = 0.0;
    for (const BellDiagonalState& s : random_states(11, 500)) {
        worst = std::max(worst, max_abs_delta(s, from_density_matrix(density_matrix(s))));
    }
    CHECK(worst < 1e-13);
}

TEST_CASE("from_density_matrix rejects off-pattern matrices") {
    DensityMatrix rho = DensityMatrix::Identity() * 0.25;
    rho(0, 1) = 0.1;
    rho(1, 0) = 0.1;
    CHECK_THROWS_AS(from_density_matrix(rho), NotBellDiagonal);

    // Complex corner breaks the real Bell-diagonal pattern.
    rho = density_matrix(new_state(0.5, 0.3, 0.1));
    rho(0, 3) = std::complex<double>(0.05, 0.02);
    rho(3, 0) = std::conj(rho(0, 3));
    CHECK_THROWS_AS(from_density_matrix(rho), NotBellDiagonal);

    // Asymmetric diagonal (rho11 != rho22) is not Bell diagonal.
    rho = density_matrix(new_state(0.5, 0.3, 0.1));
    rho(1, 1) = 0.25;
    rho(2, 2) = 0.2;
    CHECK_THROWS_AS(from_density_matrix(rho), NotBellDiagonal);

    // Wrong trace.
    rho = density_matrix(new_state(0.5, 0.3, 0.1)) * 1.01;
    CHECK_THROWS_AS(from_density_matrix(rho), NotBellDiagonal);
}

TEST_CASE("spectrum agrees with dense eigenvalues") {
    for (const BellDiagonalState& s : random_states(23, 100)) {
        Eigen::SelfAdjointEigenSolver<DensityMatrix> es(density_matrix(s));
        auto eig = es.eigenvalues();
        std::array<double, 4> dense{eig(0), eig(1), eig(2), eig(3)};
        std::array<double, 4> closed = spectrum(s).as_array();
        std::sort(dense.begin(), dense.end());
        std::sort(closed.begin(), closed.end());
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(dense[i] - closed[i]) < 1e-12);
        }
    }
}

TEST_CASE("separability is the unit octahedron") {
    CHECK(is_separable(new_state(0.5, 0.3, 0.1)));
    CHECK(is_separable(new_state(0.0, 0.0, 0.0)));
    CHECK(is_separable(new_state(0.3, -0.3, 0.4)));
    CHECK_FALSE(is_separable(new_state(0.8, -0.4, 0.2)));
    CHECK_FALSE(is_separable(new_state(1.0, 1.0, -1.0)));
    // Octahedron face |c1|+|c2|+|c3| = 1 counts as separable.
    CHECK(is_separable(new_state(0.5, 0.25, 0.25)));
}

TEST_CASE("incoherent states live on the c3 axis") {
    CHECK(is_incoherent_state(new_state(0.0, 0.0, 0.7)));
    CHECK(is_incoherent_state(new_state(0.0, 0.0, -0.2)));
    CHECK_FALSE(is_incoherent_state(new_state(0.1, 0.0, 0.7)));
    CHECK_FALSE(is_incoherent_state(new_state(0.0, -0.1, 0.0)));
}

TEST_CASE("sampler is deterministic and uniform over the tetrahedron") {
    const auto a = random_states(7, 200);
    const auto b = random_states(7, 200);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].c1 == b[i].c1);
        CHECK(a[i].c2 == b[i].c2);
        CHECK(a[i].c3 == b[i].c3);
    }

    // Different seeds decorrelate.
    const auto c = random_states(8, 1);
    CHECK(c[0].c1 != a[0].c1);

    // Uniform over T: coordinate means vanish, eigenvalue mean is 1/4.
    const auto many = random_states(42, 10000);
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
    double lam = 0.0;
    double min_lambda = 1.0;
    for (const BellDiagonalState& s : many) {
        m1 += s.c1;
        m2 += s.c2;
        m3 += s.c3;
        const Spectrum sp = spectrum(s);
        lam += sp.lambda00;
        min_lambda = std::min(min_lambda, sp.min_value());
    }
    const double n = static_cast<double>(many.size());
    CHECK(std::abs(m1 / n) < 0.05);
    CHECK(std::abs(m2 / n) < 0.05);
    CHECK(std::abs(m3 / n) < 0.05);
    CHECK(std::abs(lam / n - 0.25) < 0.02);
    CHECK(min_lambda >= 0.0);
}
