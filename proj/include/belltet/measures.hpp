// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cmath>
#include <span>
#include <string>

#include "belltet/state.hpp"

namespace belltet {

enum class Measure { c_l1, c_re, discord, geo_discord };

inline constexpr Measure kAllMeasures[4] = {Measure::c_l1, Measure::c_re, Measure::discord,
                                            Measure::geo_discord};

const char* measure_name(Measure m);
// Throws std::invalid_argument for unknown names.
Measure measure_from_name(const std::string& name);

// Closed forms shared by the public API and the scalar kernel backend. The SIMD
// backends mirror this exact operation order; change them together or the
// kernel equivalence tests break.
namespace closed_form {

inline double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// Sum of p*log2(p) over the Bell spectrum, paired (00,10)+(01,11). The pairing
// makes h cancel g() bitwise on axis and incoherent states, where the paired
// eigenvalues match (1+-ref)/4 exactly.
inline double spectrum_plog2p_sum(double c1, double c2, double c3) {
    const double l00 = (1.0 + c1 - c2 + c3) / 4.0;
    const double l01 = (1.0 + c1 + c2 - c3) / 4.0;
    const double l10 = (1.0 - c1 + c2 + c3) / 4.0;
    const double l11 = (1.0 - c1 - c2 - c3) / 4.0;
    return (plog2p(l00) + plog2p(l10)) + (plog2p(l01) + plog2p(l11));
}

// Sum of p*log2(p) over the rank-two reference spectrum {(1+ref)/4 x2, (1-ref)/4 x2}.
inline double reference_plog2p_sum(double ref) {
    return 2.0 * plog2p((1.0 + ref) / 4.0) + 2.0 * plog2p((1.0 - ref) / 4.0);
}

// Both entropy-based measures are S(reference spectrum) - S(state spectrum) with
// different reference points; in plog2p form that is h - g(ref).
inline double relative_entropy_to_reference(double c1, double c2, double c3, double ref) {
    return spectrum_plog2p_sum(c1, c2, c3) - reference_plog2p_sum(ref);
}

inline double coherence_l1(double c1, double c2) {
    return 0.5 * (std::abs(c1 - c2) + std::abs(c1 + c2));
}

// Relative entropy of coherence: nearest incoherent state is the diagonal
// projection, which for this family is the point (0,0,c3).
inline double coherence_rel_entropy(double c1, double c2, double c3) {
    return relative_entropy_to_reference(c1, c2, c3, c3);
}

inline double max_abs_c(double c1, double c2, double c3) {
    return std::max(std::max(std::abs(c1), std::abs(c2)), std::abs(c3));
}

// Discord closed form: the optimal measurement direction aligns with the largest
// |c_j|, reducing D to a relative entropy against the rank-two reference at that c.
inline double discord(double c1, double c2, double c3) {
    return relative_entropy_to_reference(c1, c2, c3, max_abs_c(c1, c2, c3));
}

// Geometric discord: quarter of the sum of the two smallest c_j^2. Written as
// "drop the first index attaining the max, add the rest in index order" so the
// axis-anchored piecewise ray formulas reproduce it bitwise, ties included.
inline double geo_discord(double c1, double c2, double c3) {
    const double s1 = c1 * c1;
    const double s2 = c2 * c2;
    const double s3 = c3 * c3;
    if (s1 >= s2 && s1 >= s3) return 0.25 * (s2 + s3);
    if (s2 >= s3) return 0.25 * (s1 + s3);
    return 0.25 * (s1 + s2);
}

}  // namespace closed_form

struct MeasureSet {
    double c_l1 = 0.0;
    double c_re = 0.0;
    double discord = 0.0;
    double geo_discord = 0.0;

    double operator[](Measure m) const;
};

struct DiscordBreakdown {
    double discord = 0.0;
    double mutual_information = 0.0;
    double classical_correlation = 0.0;
    double max_abs_c = 0.0;
    int argmax_index = 0;  // 0,1,2 for c1,c2,c3; lowest index wins ties
};

// -sum p_i log2 p_i with 0 log 0 := 0. Throws InvalidDistribution unless every
// entry is >= 0 and the sum is within 1e-9 of 1.
double shannon_entropy(std::span<const double> p);

double coherence_l1(const BellDiagonalState& s);
double coherence_rel_entropy(const BellDiagonalState& s);
DiscordBreakdown discord(const BellDiagonalState& s);
double geometric_discord(const BellDiagonalState& s);

// All four measures; componentwise equal to the individual operations.
MeasureSet measure_all(const BellDiagonalState& s);

double evaluate_measure(Measure m, const BellDiagonalState& s);

}  // namespace belltet
