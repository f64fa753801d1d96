// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace belltet {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

Matrix2cd pauli(int j) {
    const std::complex<double> i(0.0, 1.0);
    Matrix2cd m = Matrix2cd::Zero();
    switch (j) {
        case 0:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        default:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
    Matrix4cd out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

void require_strength(double q, double lo, double hi, const char* what) {
    if (!(q >= lo && q <= hi)) {
        throw InvalidStrength(std::string(what) + " needs q in [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "], got " + std::to_string(q));
    }
}

}  // namespace

const char* channel_family_name(ChannelFamily f) {
    switch (f) {
        case ChannelFamily::depolarizing_A: return "depolarizing_A";
        case ChannelFamily::phase_flip_both: return "phase_flip_both";
    }
    return "?";
}

bool is_trace_preserving(const KrausChannel& ch) {
    if (ch.operators.empty()) return false;
    Matrix4cd sum = Matrix4cd::Zero();
    for (const Matrix4cd& k : ch.operators) {
        sum += k.adjoint() * k;
    }
    const Matrix4cd dev = sum - Matrix4cd::Identity();
    return dev.cwiseAbs().maxCoeff() < 1e-10;
}

bool is_incoherent_channel(const KrausChannel& ch) {
    for (const Matrix4cd& k : ch.operators) {
        for (int col = 0; col < 4; ++col) {
            // K |k><k| K^dag = (column k)(column k)^dag; diagonal iff the column
            // has at most one nonzero entry.
            const Eigen::Vector4cd v = k.col(col);
            const Matrix4cd outer = v * v.adjoint();
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    if (i != j && std::abs(outer(i, j)) > 1e-12) return false;
                }
            }
        }
    }
    return true;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch) {
    if (!is_trace_preserving(ch)) {
        throw NotTracePreserving("channel '" + ch.label + "' has sum K^dag K != I");
    }
    Matrix4cd out = Matrix4cd::Zero();
    for (const Matrix4cd& k : ch.operators) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel depolarizing_A(double q) {
    require_strength(q, 0.0, 1.0, "depolarizing_A");
    KrausChannel ch;
    ch.label = "depolarizing_A";
    ch.noise_strength = q;
    const Matrix2cd id = pauli(0);
    ch.operators.push_back(std::sqrt(1.0 - 3.0 * q / 4.0) * kron(id, id));
    for (int j = 1; j <= 3; ++j) {
        ch.operators.push_back(std::sqrt(q / 4.0) * kron(pauli(j), id));
    }
    return ch;
}

KrausChannel depolarizing_A_unnormalized(double q) {
    require_strength(q, 0.0, 1.0 / 3.0, "depolarizing_A_unnormalized");
    KrausChannel ch;
    ch.label = "depolarizing_A_unnormalized";
    ch.noise_strength = q;
    const Matrix2cd id = pauli(0);
    ch.operators.push_back(std::sqrt(1.0 - 3.0 * q) * kron(id, id));
    for (int j = 1; j <= 3; ++j) {
        ch.operators.push_back(std::sqrt(q / 4.0) * kron(pauli(j), id));
    }
    return ch;
}

KrausChannel phase_flip(double q, PhaseFlipTarget target) {
    require_strength(q, 0.0, 1.0, "phase_flip");
    const Matrix2cd id = pauli(0);
    const Matrix2cd z = pauli(3);
    const double w0 = std::sqrt(1.0 - q / 2.0);
    const double w1 = std::sqrt(q / 2.0);

    KrausChannel ch;
    ch.noise_strength = q;
    switch (target) {
        case PhaseFlipTarget::A:
            ch.label = "phase_flip_A";
            ch.operators = {w0 * kron(id, id), w1 * kron(z, id)};
            break;
        case PhaseFlipTarget::B:
            ch.label = "phase_flip_B";
            ch.operators = {w0 * kron(id, id), w1 * kron(id, z)};
            break;
        case PhaseFlipTarget::both:
            // Independent flips on A and B: tensor products of the one-qubit sets.
            ch.label = "phase_flip_both";
            ch.operators = {w0 * w0 * kron(id, id), w0 * w1 * kron(id, z), w1 * w0 * kron(z, id),
                            w1 * w1 * kron(z, z)};
            break;
    }
    return ch;
}

CorrelationShrink channel_shrink(ChannelFamily family, double q) {
    switch (family) {
        case ChannelFamily::depolarizing_A:
            require_strength(q, 0.0, 1.0, "depolarizing_A");
            return {1.0 - q, 1.0 - q};
        case ChannelFamily::phase_flip_both: {
            require_strength(q, 0.0, 1.0, "phase_flip_both");
            const double f = (1.0 - q) * (1.0 - q);
            return {f, 1.0};
        }
    }
    return {};
}

BellDiagonalState apply_shrink(const BellDiagonalState& s, const CorrelationShrink& shrink) {
    // Shrinking toward a point of T (origin or the c3 axis) stays inside T.
    return new_state(shrink.t12 * s.c1, shrink.t12 * s.c2, shrink.t3 * s.c3);
}

double NoiseSchedule::q_of_t(double t) const { return 1.0 - std::exp(-gamma * t); }

NoiseSchedule NoiseSchedule::uniform(double gamma, double t_max, int steps) {
    if (steps < 2) {
        throw std::invalid_argument("schedule needs steps >= 2, got " + std::to_string(steps));
    }
    if (!(t_max > 0.0)) {
        throw std::invalid_argument("schedule needs t_max > 0");
    }
    NoiseSchedule sched;
    sched.gamma = gamma;
    sched.times.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        sched.times.push_back(t_max * static_cast<double>(i) / (steps - 1));
    }
    return sched;
}

Trajectory trajectory(const BellDiagonalState& s0, ChannelFamily family,
                      const NoiseSchedule& schedule) {
    if (!(schedule.gamma > 0.0)) {
        throw std::invalid_argument("schedule gamma must be > 0");
    }
    if (schedule.times.empty()) {
        throw std::invalid_argument("schedule has no time points");
    }
    for (std::size_t i = 0; i + 1 < schedule.times.size(); ++i) {
        if (!(schedule.times[i] < schedule.times[i + 1])) {
            throw std::invalid_argument("schedule times must be strictly increasing");
        }
    }
    if (schedule.times.front() < 0.0) {
        throw std::invalid_argument("schedule times must be nonnegative");
    }

    Trajectory traj;
    traj.family = family;
    traj.gamma = schedule.gamma;
    traj.samples.reserve(schedule.times.size());
    for (double t : schedule.times) {
        TrajectorySample sample;
        sample.t = t;
        sample.state = apply_shrink(s0, channel_shrink(family, schedule.q_of_t(t)));
        sample.measures = measure_all(sample.state);
        traj.samples.push_back(sample);
    }
    return traj;
}

}  // namespace belltet
