// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// Ordering comparison between two measures: do they agree on which of two
// states is the more resourceful one?  Two strategies: direct pair search for
// a counterexample (equal under A, unequal under B), and sorted-sequence
// scanning for descents of B along the A-sorted order.

#ifndef BELLTET_ORDERING_HPP
#define BELLTET_ORDERING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "belltet/geometry.hpp"
#include "belltet/measures.hpp"
#include "belltet/state.hpp"

namespace belltet {

// |Delta| below this counts as "equal" when comparing measure values.
inline constexpr double kOrderingEqualTol = 1e-9;
// A counterexample must separate the pair under measure B by more than this.
inline constexpr double kOrderingUnequalTol = 1e-6;

enum class OrderingMethod {
    pair_search,
    sequence_scan,
};

const char* ordering_method_name(OrderingMethod method);

struct OrderingVerdict {
    bool same_ordering = true;
    OrderingMethod method = OrderingMethod::pair_search;
    // Present iff same_ordering is false and method is pair_search.
    std::optional<std::pair<BellDiagonalState, BellDiagonalState>> counterexample;
    // A(s1), A(s2), B(s1), B(s2) for the examined pair; zeros otherwise.
    std::array<double, 4> values{0.0, 0.0, 0.0, 0.0};
};

struct SortedSequenceReport {
    std::vector<BellDiagonalState> states;  // sorted by measure A ascending
    std::vector<double> values_a;           // nondecreasing by construction
    std::vector<double> values_b;
    // Left index of every adjacent step where values_b drops by more than
    // kOrderingEqualTol.
    std::vector<std::size_t> violations;
};

// Compares the ordering of one pair.  Signs of A(s1)-A(s2) and B(s1)-B(s2)
// are compared with |Delta| < kOrderingEqualTol treated as zero.
OrderingVerdict pair_check(Measure measure_a, Measure measure_b,
                           const BellDiagonalState& s1,
                           const BellDiagonalState& s2);

// Deterministic search for a pair with equal A but B split by more than
// kOrderingUnequalTol.  Scans a structured family (lines parallel to each
// coordinate axis), then matched pairs built by bisecting one ray to the A
// value attained on another, then random pairs (refined toward equal A when
// their orderings are strictly opposite).  n_samples bounds the number of
// candidate pairs examined; first hit wins.  When restrict_to is non-null the
// whole search runs on that single ray.  Throws std::invalid_argument when
// n_samples < 2.
OrderingVerdict find_counterexample(Measure measure_a, Measure measure_b,
                                    std::size_t n_samples, std::uint64_t seed,
                                    const Ray* restrict_to = nullptr);

// Stable-sorts states by measure A ascending (ties broken by (c1,c2,c3)
// lexicographic), evaluates measure B in that order, and records every
// adjacent descent of B larger than kOrderingEqualTol.  Throws
// std::invalid_argument for fewer than two states.
SortedSequenceReport sequence_scan(Measure measure_a, Measure measure_b,
                                   const std::vector<BellDiagonalState>& states);

// sequence_scan over n evenly spaced samples of the ray, run in both
// directions (A-sorted scanning B, and B-sorted scanning A).  same_ordering
// iff neither direction has a violation.  Throws std::invalid_argument when
// n < 3.
OrderingVerdict ray_ordering_check(const Ray& ray, Measure measure_a,
                                   Measure measure_b, std::size_t n);

}  // namespace belltet

#endif  // BELLTET_ORDERING_HPP
