// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace belltet {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

std::string point_str(double c1, double c2, double c3) {
    std::ostringstream os;
    os << "(" << c1 << ", " << c2 << ", " << c3 << ")";
    return os.str();
}

}  // namespace

double Spectrum::min_value() const {
    return std::min(std::min(lambda00, lambda01), std::min(lambda10, lambda11));
}

Spectrum raw_spectrum(double c1, double c2, double c3) {
    Spectrum s;
    s.lambda00 = (1.0 + c1 - c2 + c3) / 4.0;
    s.lambda01 = (1.0 + c1 + c2 - c3) / 4.0;
    s.lambda10 = (1.0 - c1 + c2 + c3) / 4.0;
    s.lambda11 = (1.0 - c1 - c2 - c3) / 4.0;
    return s;
}

bool inside_tetrahedron(double c1, double c2, double c3, double tol) {
    return raw_spectrum(c1, c2, c3).min_value() >= -tol;
}

BellDiagonalState new_state(double c1, double c2, double c3) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
        throw OutsideTetrahedron("non-finite correlation vector " + point_str(c1, c2, c3));
    }
    if (!inside_tetrahedron(c1, c2, c3)) {
        const Spectrum raw = raw_spectrum(c1, c2, c3);
        throw OutsideTetrahedron("point " + point_str(c1, c2, c3) +
                                 " has negative eigenvalue " + std::to_string(raw.min_value()));
    }
    return BellDiagonalState{c1, c2, c3};
}

Spectrum spectrum(const BellDiagonalState& s) {
    Spectrum sp = raw_spectrum(s.c1, s.c2, s.c3);
    sp.lambda00 = clamp01(sp.lambda00);
    sp.lambda01 = clamp01(sp.lambda01);
    sp.lambda10 = clamp01(sp.lambda10);
    sp.lambda11 = clamp01(sp.lambda11);
    return sp;
}

DensityMatrix density_matrix(const BellDiagonalState& s) {
    // rho = (1/4)(I + sum_i c_i sigma_i x sigma_i) expanded in the computational basis:
    // diagonal carries c3, the inner 2x2 block carries c1+c2, the outer corners c1-c2.
    const double dp = (1.0 + s.c3) / 4.0;
    const double dm = (1.0 - s.c3) / 4.0;
    const double outer = (s.c1 - s.c2) / 4.0;
    const double inner = (s.c1 + s.c2) / 4.0;
    DensityMatrix rho = DensityMatrix::Zero();
    rho(0, 0) = dp;
    rho(1, 1) = dm;
    rho(2, 2) = dm;
    rho(3, 3) = dp;
    rho(0, 3) = outer;
    rho(3, 0) = outer;
    rho(1, 2) = inner;
    rho(2, 1) = inner;
    return rho;
}

BellDiagonalState from_density_matrix(const DensityMatrix& rho) {
    // Accepted pattern: real diagonal with rho00=rho33, rho11=rho22, real symmetric
    // antidiagonal with rho03=rho30, rho12=rho21, zero elsewhere.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const bool on_pattern = (i == j) || (i + j == 3);
            if (!on_pattern && std::abs(rho(i, j)) > kPatternTol) {
                throw NotBellDiagonal("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") = " + std::to_string(std::abs(rho(i, j))) +
                                      " off the Bell-diagonal pattern");
            }
            if (on_pattern && std::abs(rho(i, j).imag()) > kPatternTol) {
                throw NotBellDiagonal("complex entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") off the Bell-diagonal pattern");
            }
        }
    }
    const double d0 = rho(0, 0).real();
    const double d1 = rho(1, 1).real();
    const double d2 = rho(2, 2).real();
    const double d3 = rho(3, 3).real();
    const double outer = rho(0, 3).real();
    const double inner = rho(1, 2).real();
    if (std::abs(d0 - d3) > kPatternTol || std::abs(d1 - d2) > kPatternTol ||
        std::abs(rho(0, 3).real() - rho(3, 0).real()) > kPatternTol ||
        std::abs(rho(1, 2).real() - rho(2, 1).real()) > kPatternTol) {
        throw NotBellDiagonal("pattern symmetry broken");
    }
    if (std::abs(d0 + d1 + d2 + d3 - 1.0) > kPatternTol) {
        throw NotBellDiagonal("trace " + std::to_string(d0 + d1 + d2 + d3) + " != 1");
    }
    const double c3 = (d0 + d3) - (d1 + d2);
    const double c1 = 2.0 * (inner + outer);
    const double c2 = 2.0 * (inner - outer);
    return new_state(c1, c2, c3);
}

bool is_separable(const BellDiagonalState& s) {
    return std::abs(s.c1) + std::abs(s.c2) + std::abs(s.c3) <= 1.0 + kValidityTol;
}

bool is_incoherent_state(const BellDiagonalState& s) {
    return std::abs(s.c1) < kValidityTol && std::abs(s.c2) < kValidityTol;
}

double StateSampler::next_unit() {
    // (r >> 11) has 53 random bits; +0.5 centers the value in (0,1), never 0 or 1.
    const std::uint64_t r = engine_();
    return (static_cast<double>(r >> 11) + 0.5) * 0x1.0p-53;
}

BellDiagonalState StateSampler::next() {
    // Dirichlet(1,1,1,1) via normalized exponentials: uniform on the lambda simplex,
    // which is the uniform distribution on T in (c1,c2,c3) coordinates.
    double e[4];
    double sum = 0.0;
    for (double& v : e) {
        v = -std::log(next_unit());
        sum += v;
    }
    const double l00 = e[0] / sum;
    const double l01 = e[1] / sum;
    const double l10 = e[2] / sum;
    const double l11 = e[3] / sum;
    BellDiagonalState s;
    s.c1 = (l00 + l01) - (l10 + l11);
    s.c2 = (l01 + l10) - (l00 + l11);
    s.c3 = (l00 + l10) - (l01 + l11);
    return s;
}

BellDiagonalState random_state(std::uint64_t seed) { return StateSampler(seed).next(); }

std::vector<BellDiagonalState> random_states(std::uint64_t seed, std::size_t n) {
    StateSampler sampler(seed);
    std::vector<BellDiagonalState> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(sampler.next());
    }
    return out;
}

}  // namespace belltet
