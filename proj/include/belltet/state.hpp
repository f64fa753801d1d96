// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "belltet/errors.hpp"

namespace belltet {

using DensityMatrix = Eigen::Matrix4cd;

// Eigenvalue clamp threshold: lambda >= -kValidityTol is accepted and clamped to 0.
inline constexpr double kValidityTol = 1e-12;
// Off-pattern matrix entries below this are treated as zero.
inline constexpr double kPatternTol = 1e-10;

// Two-qubit state diag-representable in the Bell basis: rho = sum_j lambda_j |B_j><B_j|,
// equivalently rho = (1/4)(I + sum_i c_i sigma_i x sigma_i). Valid iff all lambda >= 0,
// i.e. (c1,c2,c3) lies in the tetrahedron spanned by (1,1,-1),(1,-1,1),(-1,1,1),(-1,-1,-1).
struct BellDiagonalState {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// Bell-basis eigenvalues, index (a,b): lambda_ab = (1 + (-1)^a c1 - (-1)^(a+b) c2 + (-1)^b c3)/4.
struct Spectrum {
    double lambda00 = 0.0;
    double lambda01 = 0.0;
    double lambda10 = 0.0;
    double lambda11 = 0.0;

    std::array<double, 4> as_array() const { return {lambda00, lambda01, lambda10, lambda11}; }
    double min_value() const;
};

// Spectrum of the point without validity clamping; entries may be negative outside T.
Spectrum raw_spectrum(double c1, double c2, double c3);

bool inside_tetrahedron(double c1, double c2, double c3, double tol = kValidityTol);

// Throws OutsideTetrahedron when any eigenvalue is below -kValidityTol.
BellDiagonalState new_state(double c1, double c2, double c3);

// Spectrum of a valid state; entries clamped to [0,1], sum within 4*kValidityTol of 1.
Spectrum spectrum(const BellDiagonalState& s);

// Computational-basis 4x4 matrix: Hermitian, trace 1, PSD (eigenvalues >= -kValidityTol).
DensityMatrix density_matrix(const BellDiagonalState& s);

// Inverse of density_matrix. Throws NotBellDiagonal when any entry off the
// diag+antidiag pattern exceeds kPatternTol or the pattern symmetry is broken;
// throws OutsideTetrahedron when the recovered point is invalid.
BellDiagonalState from_density_matrix(const DensityMatrix& rho);

// PPT criterion, exact for two qubits: separable iff |c1|+|c2|+|c3| <= 1 (+kValidityTol).
bool is_separable(const BellDiagonalState& s);

// Zero coherence in the computational basis: |c1| < kValidityTol and |c2| < kValidityTol.
bool is_incoherent_state(const BellDiagonalState& s);

// Uniform sample from T: Dirichlet(1,1,1,1) spectrum mapped back to (c1,c2,c3).
// Only the engine comes from <random> (its output sequence is pinned by the
// standard); the uniform and exponential mappings are explicit so the same seed
// gives the same states on every platform and standard library.
class StateSampler {
  public:
    explicit StateSampler(std::uint64_t seed) : engine_(seed) {}
    BellDiagonalState next();

  private:
    std::mt19937_64 engine_;
    double next_unit();
};

BellDiagonalState random_state(std::uint64_t seed);
std::vector<BellDiagonalState> random_states(std::uint64_t seed, std::size_t n);

}  // namespace belltet
