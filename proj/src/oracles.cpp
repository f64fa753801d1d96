// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace belltet::oracle {

namespace {

double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Entropy of a Hermitian 2x2 matrix from its closed-form eigenvalues.
double entropy2(const Eigen::Matrix2cd& m) {
    const double tr = m(0, 0).real() + m(1, 1).real();
    const double mid = 0.5 * (m(0, 0).real() - m(1, 1).real());
    const double disc = std::sqrt(mid * mid + std::norm(m(0, 1)));
    const double e0 = 0.5 * tr + disc;
    const double e1 = 0.5 * tr - disc;
    return -(plog2p(e0) + plog2p(e1));
}

// Rank-1 projector (I + n.sigma)/2 for the Bloch direction (theta, phi); sign=-1
// gives the antipodal projector.
Eigen::Matrix2cd bloch_projector(const MeasurementBasis& b, double sign) {
    const double nx = sign * std::sin(b.theta) * std::cos(b.phi);
    const double ny = sign * std::sin(b.theta) * std::sin(b.phi);
    const double nz = sign * std::cos(b.theta);
    Eigen::Matrix2cd p;
    p(0, 0) = 0.5 * (1.0 + nz);
    p(1, 1) = 0.5 * (1.0 - nz);
    p(0, 1) = 0.5 * std::complex<double>(nx, -ny);
    p(1, 0) = 0.5 * std::complex<double>(nx, ny);
    return p;
}

struct ConditionalOutcome {
    double probability;
    Eigen::Matrix2cd state;  // unnormalized: p_a * rho_B|a
};

// Tr_A[(P x I) rho (P x I)] = sum_{k,l} P_lk B_kl where B_kl are the 2x2 blocks
// of rho in the A index; probability is its trace.
ConditionalOutcome measure_branch(const DensityMatrix& rho, const Eigen::Matrix2cd& p) {
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            acc += p(l, k) * rho.block<2, 2>(2 * k, 2 * l);
        }
    }
    return {acc.trace().real(), acc};
}

// Golden-section minimization of f on [lo, hi]; returns the best value seen.
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters, double* arg_out) {
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    double best = std::min(f1, f2);
    double best_arg = f1 <= f2 ? x1 : x2;
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
        if (f1 < best) {
            best = f1;
            best_arg = x1;
        }
        if (f2 < best) {
            best = f2;
            best_arg = x2;
        }
    }
    if (arg_out != nullptr) *arg_out = best_arg;
    return best;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(rho, Eigen::EigenvaluesOnly);
    double h = 0.0;
    for (int i = 0; i < 4; ++i) {
        h -= plog2p(std::max(0.0, solver.eigenvalues()[i]));
    }
    return h;
}

double coherence_l1_oracle(const DensityMatrix& rho) {
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) sum += std::abs(rho(i, j));
        }
    }
    return sum;
}

double coherence_rel_entropy_oracle(const DensityMatrix& rho) {
    DensityMatrix diag = DensityMatrix::Zero();
    for (int i = 0; i < 4; ++i) {
        diag(i, i) = rho(i, i).real();
    }
    return von_neumann_entropy(diag) - von_neumann_entropy(rho);
}

Eigen::Matrix2cd trace_out_a(const DensityMatrix& rho) {
    return rho.block<2, 2>(0, 0) + rho.block<2, 2>(2, 2);
}

Eigen::Matrix2cd trace_out_b(const DensityMatrix& rho) {
    Eigen::Matrix2cd m;
    m(0, 0) = rho(0, 0) + rho(1, 1);
    m(0, 1) = rho(0, 2) + rho(1, 3);
    m(1, 0) = rho(2, 0) + rho(3, 1);
    m(1, 1) = rho(2, 2) + rho(3, 3);
    return m;
}

double measured_discord_value(const DensityMatrix& rho, const MeasurementBasis& basis) {
    const double s_ab = von_neumann_entropy(rho);
    const double s_a = entropy2(trace_out_b(rho));
    const double s_b = entropy2(trace_out_a(rho));
    const double mutual = s_a + s_b - s_ab;

    double conditional = 0.0;
    for (double sign : {+1.0, -1.0}) {
        const ConditionalOutcome out = measure_branch(rho, bloch_projector(basis, sign));
        if (out.probability > 1e-15) {
            conditional += out.probability * entropy2(out.state / out.probability);
        }
    }
    const double classical = s_b - conditional;
    return mutual - classical;
}

double discord_oracle(const DensityMatrix& rho, int grid_n) {
    if (grid_n < 32) {
        throw std::invalid_argument("discord_oracle needs grid_n >= 32, got " +
                                    std::to_string(grid_n));
    }
    // Everything except the conditional-entropy term is measurement independent;
    // hoist it so the grid sweep only re-does the measurement branch.
    const double s_ab = von_neumann_entropy(rho);
    const double s_a = entropy2(trace_out_b(rho));

    const auto objective = [&](double theta, double phi) {
        const MeasurementBasis b{theta, phi};
        double conditional = 0.0;
        for (double sign : {+1.0, -1.0}) {
            const ConditionalOutcome out = measure_branch(rho, bloch_projector(b, sign));
            if (out.probability > 1e-15) {
                conditional += out.probability * entropy2(out.state / out.probability);
            }
        }
        // I - J = (S_A + S_B - S_AB) - (S_B - conditional).
        return s_a - s_ab + conditional;
    };

    constexpr double kPi = 3.141592653589793238462643383279502884;
    const double dtheta = kPi / (grid_n - 1);
    const double dphi = 2.0 * kPi / grid_n;

    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double theta = i * dtheta;
        for (int j = 0; j < grid_n; ++j) {
            const double phi = j * dphi;
            const double v = objective(theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Alternating golden-section descent, one grid cell around the best node.
    double theta = best_theta, phi = best_phi;
    for (int sweep = 0; sweep < 3; ++sweep) {
        double arg = theta;
        double v = golden_min([&](double t) { return objective(t, phi); },
                              std::max(0.0, theta - dtheta), std::min(kPi, theta + dtheta), 40,
                              &arg);
        if (v < best) best = v;
        theta = arg;
        arg = phi;
        v = golden_min([&](double t) { return objective(theta, t); }, phi - dphi, phi + dphi, 40,
                       &arg);
        if (v < best) best = v;
        phi = arg;
    }
    return best;
}

double cq_distance_sq(const DensityMatrix& rho, const MeasurementBasis& basis) {
    // chi = sum_a (P_a x I) rho (P_a x I) keeps the A-diagonal blocks in the
    // measurement eigenbasis and zeroes the off-diagonal ones, which is the
    // Hilbert-Schmidt-optimal classical-quantum state for this direction. The
    // distance is therefore the squared norm of the discarded blocks.
    DensityMatrix chi = DensityMatrix::Zero();
    for (double sign : {+1.0, -1.0}) {
        const Eigen::Matrix2cd p2 = bloch_projector(basis, sign);
        DensityMatrix lifted = DensityMatrix::Zero();
        lifted.block<2, 2>(0, 0) = p2(0, 0) * Eigen::Matrix2cd::Identity();
        lifted.block<2, 2>(0, 2) = p2(0, 1) * Eigen::Matrix2cd::Identity();
        lifted.block<2, 2>(2, 0) = p2(1, 0) * Eigen::Matrix2cd::Identity();
        lifted.block<2, 2>(2, 2) = p2(1, 1) * Eigen::Matrix2cd::Identity();
        chi += lifted * rho * lifted;
    }
    return (rho - chi).squaredNorm();
}

double geometric_discord_oracle(const DensityMatrix& rho, int iterations) {
    const auto objective = [&](double theta, double phi) {
        return cq_distance_sq(rho, MeasurementBasis{theta, phi});
    };

    constexpr double kPi = 3.141592653589793238462643383279502884;
    constexpr int kGrid = 64;
    const double dtheta = kPi / (kGrid - 1);
    const double dphi = 2.0 * kPi / kGrid;

    double best = std::numeric_limits<double>::infinity();
    double theta = 0.0, phi = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const double v = objective(i * dtheta, j * dphi);
            if (v < best) {
                best = v;
                theta = i * dtheta;
                phi = j * dphi;
            }
        }
    }

    double previous = best;
    for (int sweep = 0; sweep < iterations; ++sweep) {
        double arg = theta;
        double v = golden_min([&](double t) { return objective(t, phi); },
                              std::max(0.0, theta - dtheta), std::min(kPi, theta + dtheta), 40,
                              &arg);
        if (v < best) best = v;
        theta = arg;
        arg = phi;
        v = golden_min([&](double t) { return objective(theta, t); }, phi - dphi, phi + dphi, 40,
                       &arg);
        if (v < best) best = v;
        phi = arg;
        if (std::abs(previous - best) < 1e-9) {
            return best;
        }
        previous = best;
    }
    throw NoConvergence("geometric discord minimization still moving after " +
                        std::to_string(iterations) + " sweeps");
}

}  // namespace belltet::oracle
