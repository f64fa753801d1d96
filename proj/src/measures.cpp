// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace belltet {

namespace {

// MeasureSet fields are >= 0 by definition; tiny negative rounding residue maps to 0.
double clamp_residue(double v) { return v < 0.0 ? 0.0 : v; }

}  // namespace

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::c_l1: return "c_l1";
        case Measure::c_re: return "c_re";
        case Measure::discord: return "discord";
        case Measure::geo_discord: return "geo_discord";
    }
    return "?";
}

Measure measure_from_name(const std::string& name) {
    for (Measure m : kAllMeasures) {
        if (name == measure_name(m)) return m;
    }
    throw std::invalid_argument("unknown measure '" + name + "'");
}

double MeasureSet::operator[](Measure m) const {
    switch (m) {
        case Measure::c_l1: return c_l1;
        case Measure::c_re: return c_re;
        case Measure::discord: return discord;
        case Measure::geo_discord: return geo_discord;
    }
    return 0.0;
}

double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) {
            throw InvalidDistribution("negative probability " + std::to_string(v));
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw InvalidDistribution("probabilities sum to " + std::to_string(sum));
    }
    double h = 0.0;
    for (double v : p) {
        h -= closed_form::plog2p(v);
    }
    return h;
}

double coherence_l1(const BellDiagonalState& s) {
    return clamp_residue(closed_form::coherence_l1(s.c1, s.c2));
}

double coherence_rel_entropy(const BellDiagonalState& s) {
    return clamp_residue(closed_form::coherence_rel_entropy(s.c1, s.c2, s.c3));
}

DiscordBreakdown discord(const BellDiagonalState& s) {
    DiscordBreakdown b;
    const double a1 = std::abs(s.c1);
    const double a2 = std::abs(s.c2);
    const double a3 = std::abs(s.c3);
    if (a1 >= a2 && a1 >= a3) {
        b.max_abs_c = a1;
        b.argmax_index = 0;
    } else if (a2 >= a3) {
        b.max_abs_c = a2;
        b.argmax_index = 1;
    } else {
        b.max_abs_c = a3;
        b.argmax_index = 2;
    }
    b.discord = clamp_residue(closed_form::discord(s.c1, s.c2, s.c3));
    // I(A:B) = S(A) + S(B) - S(AB) = 2 - S(AB): both marginals are maximally mixed.
    const double h = closed_form::spectrum_plog2p_sum(s.c1, s.c2, s.c3);
    b.mutual_information = clamp_residue(2.0 + h);
    b.classical_correlation = clamp_residue(b.mutual_information - b.discord);
    return b;
}

double geometric_discord(const BellDiagonalState& s) {
    return closed_form::geo_discord(s.c1, s.c2, s.c3);
}

MeasureSet measure_all(const BellDiagonalState& s) {
    MeasureSet out;
    out.c_l1 = coherence_l1(s);
    out.c_re = coherence_rel_entropy(s);
    out.discord = discord(s).discord;
    out.geo_discord = geometric_discord(s);
    return out;
}

double evaluate_measure(Measure m, const BellDiagonalState& s) {
    switch (m) {
        case Measure::c_l1: return coherence_l1(s);
        case Measure::c_re: return coherence_rel_entropy(s);
        case Measure::discord: return discord(s).discord;
        case Measure::geo_discord: return geometric_discord(s);
    }
    return 0.0;
}

}  // namespace belltet
