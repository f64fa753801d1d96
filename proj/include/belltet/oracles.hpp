// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include "belltet/state.hpp"

namespace belltet {

// Bloch angles of a projective measurement direction on subsystem A.
struct MeasurementBasis {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// Definition-level reference implementations working on raw 4x4 density matrices.
// They share no code with the closed forms in measures.hpp: entropies come from
// numerical eigensolves, minimizations from explicit measurement sweeps. Slow on
// purpose; the closed forms are checked against these.
namespace oracle {

// -Tr[rho log2 rho] via Hermitian eigensolve; eigenvalues below 0 clamped.
double von_neumann_entropy(const DensityMatrix& rho);

// Sum of |rho_ij| over i != j.
double coherence_l1_oracle(const DensityMatrix& rho);

// S(diag(rho)) - S(rho).
double coherence_rel_entropy_oracle(const DensityMatrix& rho);

// Marginals by explicit partial trace.
Eigen::Matrix2cd trace_out_a(const DensityMatrix& rho);
Eigen::Matrix2cd trace_out_b(const DensityMatrix& rho);

// I(A:B) - J(B|{measurement on A along basis}) for one measurement direction:
// I = S(A)+S(B)-S(AB), J = S(B) - sum_a p_a S(rho_B|a).
double measured_discord_value(const DensityMatrix& rho, const MeasurementBasis& basis);

// Minimum of measured_discord_value over a theta x phi grid (grid_n >= 32; theta
// spans [0,pi] inclusive, phi spans [0,2pi) half-open), then golden-section
// refinement around the best grid point. Deterministic: grid scanned in order,
// strict-less tracking.
double discord_oracle(const DensityMatrix& rho, int grid_n);

// Squared Hilbert-Schmidt distance from rho to the nearest classical-quantum
// state with measurement direction `basis` on A. For a fixed direction the
// optimal chi = sum_a (P_a x I) rho (P_a x I) is the block projection, so this
// is exact given the direction.
double cq_distance_sq(const DensityMatrix& rho, const MeasurementBasis& basis);

// Minimum of cq_distance_sq over directions: 64x64 grid, then golden-section
// coordinate-descent sweeps. `iterations` is the sweep budget; throws
// NoConvergence if the objective still moves more than 1e-9 per sweep when the
// budget runs out.
double geometric_discord_oracle(const DensityMatrix& rho, int iterations);

}  // namespace oracle
}  // namespace belltet
