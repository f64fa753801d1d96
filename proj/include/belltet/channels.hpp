// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <string>
#include <vector>

#include "belltet/measures.hpp"
#include "belltet/state.hpp"

namespace belltet {

// Two-qubit channel as a list of lifted 4x4 Kraus operators.
struct KrausChannel {
    std::vector<Eigen::Matrix4cd> operators;
    std::string label;
    double noise_strength = 0.0;  // q in [0,1]
};

enum class PhaseFlipTarget { A, B, both };

// Closed-form action on the correlation vector: (c1,c2,c3) -> (t12*c1, t12*c2, t3*c3).
// Every channel here is of this diagonal form.
struct CorrelationShrink {
    double t12 = 1.0;
    double t3 = 1.0;
};

enum class ChannelFamily { depolarizing_A, phase_flip_both };

const char* channel_family_name(ChannelFamily f);

// sum_j K_j rho K_j^dag. Throws NotTracePreserving unless the operator sum is
// the identity within 1e-10.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch);

// ||sum K^dag K - I||_max < 1e-10. An empty operator list is not trace preserving.
bool is_trace_preserving(const KrausChannel& ch);

// Every K_j maps diagonal states to diagonal states: at most one nonzero entry
// per column (checked as K|k><k|K^dag diagonal within 1e-12 for each basis k).
bool is_incoherent_channel(const KrausChannel& ch);

// Depolarizing noise on qubit A: {sqrt(1-3q/4) I, sqrt(q/4) sigma_j (x) I}.
// Uniform shrink c -> (1-q) c. Throws InvalidStrength outside q in [0,1].
KrausChannel depolarizing_A(double q);

// Same channel with the unnormalized weight sqrt(1-3q) on the identity term.
// Deliberately not trace preserving for q > 0 (sum K^dag K = (1 - 9q/4) I);
// kept for the trace-preservation rejection drills. Needs q in [0, 1/3].
KrausChannel depolarizing_A_unnormalized(double q);

// Phase flip {sqrt(1-q/2) I, sqrt(q/2) sigma_3} on one or both qubits.
// A or B: (c1,c2,c3) -> ((1-q)c1, (1-q)c2, c3); both: factor (1-q)^2.
KrausChannel phase_flip(double q, PhaseFlipTarget target);

// The closed-form correlation map matching the lifted Kraus channel.
CorrelationShrink channel_shrink(ChannelFamily family, double q);
BellDiagonalState apply_shrink(const BellDiagonalState& s, const CorrelationShrink& shrink);

// q(t) = 1 - exp(-gamma t) evaluated on an ordered time grid.
struct NoiseSchedule {
    double gamma = 0.0;  // > 0
    std::vector<double> times;

    double q_of_t(double t) const;
    // Evenly spaced [0, t_max] with `steps` samples (steps >= 2).
    static NoiseSchedule uniform(double gamma, double t_max, int steps);
};

struct TrajectorySample {
    double t = 0.0;
    BellDiagonalState state;
    MeasureSet measures;
};

struct Trajectory {
    ChannelFamily family = ChannelFamily::depolarizing_A;
    double gamma = 0.0;
    std::vector<TrajectorySample> samples;
};

// States along the schedule via the closed-form map, with all measures attached.
// Throws std::invalid_argument for an empty or non-increasing schedule or
// gamma <= 0.
Trajectory trajectory(const BellDiagonalState& s0, ChannelFamily family,
                      const NoiseSchedule& schedule);

}  // namespace belltet
