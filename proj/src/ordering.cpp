// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace belltet {
namespace {

// Sign of a measure difference with |delta| < kOrderingEqualTol as zero.
int tol_sign(double delta) {
    if (std::abs(delta) < kOrderingEqualTol) return 0;
    return delta > 0.0 ? 1 : -1;
}

struct PairValues {
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    // Equal under A, split under B: the counterexample shape.
    bool violation = false;
};

PairValues eval_pair(Measure measure_a, Measure measure_b,
                     const BellDiagonalState& s1, const BellDiagonalState& s2) {
    PairValues r;
    r.a1 = evaluate_measure(measure_a, s1);
    r.a2 = evaluate_measure(measure_a, s2);
    r.b1 = evaluate_measure(measure_b, s1);
    r.b2 = evaluate_measure(measure_b, s2);
    r.violation = std::abs(r.a1 - r.a2) < kOrderingEqualTol &&
                  std::abs(r.b1 - r.b2) > kOrderingUnequalTol;
    return r;
}

OrderingVerdict violation_verdict(const BellDiagonalState& s1,
                                  const BellDiagonalState& s2,
                                  const PairValues& r) {
    OrderingVerdict v;
    v.same_ordering = false;
    v.method = OrderingMethod::pair_search;
    v.counterexample = std::make_pair(s1, s2);
    v.values = {r.a1, r.a2, r.b1, r.b2};
    return v;
}

// Same explicit mapping as StateSampler: top 53 bits, centered in the cell.
double unit_from(std::mt19937_64& engine) {
    return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
}

// Bisects toward measure(t) == target on [t_lo, t_hi].  Relies on the measure
// being nondecreasing in t along rays from the origin; the caller re-checks
// the result, so a non-monotone stretch only wastes the attempt.
double bisect_to_value(Measure measure, const Ray& ray, double t_lo,
                       double t_hi, double target) {
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (evaluate_measure(measure, ray_point(ray, mid)) < target) {
            t_lo = mid;
        } else {
            t_hi = mid;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

}  // namespace

const char* ordering_method_name(OrderingMethod method) {
    switch (method) {
        case OrderingMethod::pair_search:
            return "pair_search";
        case OrderingMethod::sequence_scan:
            return "sequence_scan";
    }
    return "unknown";
}

OrderingVerdict pair_check(Measure measure_a, Measure measure_b,
                           const BellDiagonalState& s1,
                           const BellDiagonalState& s2) {
    const PairValues r = eval_pair(measure_a, measure_b, s1, s2);
    OrderingVerdict v;
    v.method = OrderingMethod::pair_search;
    v.values = {r.a1, r.a2, r.b1, r.b2};
    v.same_ordering = tol_sign(r.a1 - r.a2) == tol_sign(r.b1 - r.b2);
    if (!v.same_ordering) {
        v.counterexample = std::make_pair(s1, s2);
    }
    return v;
}

OrderingVerdict find_counterexample(Measure measure_a, Measure measure_b,
                                    std::size_t n_samples, std::uint64_t seed,
                                    const Ray* restrict_to) {
    if (n_samples < 2) {
        throw std::invalid_argument(
            "find_counterexample: n_samples must be at least 2");
    }
    std::size_t budget = n_samples;
    OrderingVerdict found;

    // One candidate pair per call; first violation wins.
    const auto try_pair = [&](const BellDiagonalState& s1,
                              const BellDiagonalState& s2) -> bool {
        if (budget == 0) {
            return false;
        }
        --budget;
        const PairValues r = eval_pair(measure_a, measure_b, s1, s2);
        if (r.violation) {
            found = violation_verdict(s1, s2, r);
            return true;
        }
        return false;
    };

    // Opposite strict orderings: slide the smaller-A state outward along its
    // own ray until A matches; B keeps growing along the ray, so the split
    // under B survives the slide.
    const auto refine_opposite = [&](const BellDiagonalState& s1,
                                     const BellDiagonalState& s2,
                                     const PairValues& r) -> bool {
        const int sa = tol_sign(r.a1 - r.a2);
        const int sb = tol_sign(r.b1 - r.b2);
        if (sa == 0 || sb == 0 || sa == sb) {
            return false;
        }
        const BellDiagonalState& lo = sa < 0 ? s1 : s2;
        const BellDiagonalState& hi = sa < 0 ? s2 : s1;
        const double target = sa < 0 ? r.a2 : r.a1;
        const double norm =
            std::sqrt(lo.c1 * lo.c1 + lo.c2 * lo.c2 + lo.c3 * lo.c3);
        if (norm < 1e-12) {
            return false;
        }
        const Ray ray = new_ray({lo.c1, lo.c2, lo.c3});
        if (norm >= ray.t_max) {
            return false;
        }
        const double a_end =
            evaluate_measure(measure_a, ray_point(ray, ray.t_max));
        if (a_end < target - kOrderingEqualTol) {
            return false;  // target not reachable along this ray
        }
        const double t = bisect_to_value(measure_a, ray, norm, ray.t_max, target);
        return try_pair(ray_point(ray, t), hi);
    };

    if (restrict_to != nullptr) {
        // Deterministic grid pairs on the single ray, then random t pairs.
        const Ray& ray = *restrict_to;
        constexpr int kGridN = 25;
        std::vector<BellDiagonalState> grid;
        grid.reserve(kGridN);
        for (int i = 0; i < kGridN; ++i) {
            grid.push_back(
                ray_point(ray, ray.t_max * static_cast<double>(i) / (kGridN - 1)));
        }
        for (int i = 0; i < kGridN && budget > 0; ++i) {
            for (int j = i + 1; j < kGridN && budget > 0; ++j) {
                if (try_pair(grid[i], grid[j])) {
                    return found;
                }
            }
        }
        std::mt19937_64 engine(seed);
        while (budget > 0) {
            const BellDiagonalState s1 =
                ray_point(ray, ray.t_max * unit_from(engine));
            const BellDiagonalState s2 =
                ray_point(ray, ray.t_max * unit_from(engine));
            if (try_pair(s1, s2)) {
                return found;
            }
        }
        OrderingVerdict none;
        none.same_ordering = true;
        none.method = OrderingMethod::pair_search;
        return none;
    }

    // Phase 1: lines parallel to one coordinate axis.  Pairs share the two
    // fixed coordinates and differ only in the varied one.
    constexpr std::array<double, 3> kBases{-0.5, 0.0, 0.5};
    constexpr std::array<double, 5> kVaried{0.1, 0.2, 0.3, 0.4, 0.5};
    for (int axis = 0; axis < 3 && budget > 0; ++axis) {
        for (const double base1 : kBases) {
            for (const double base2 : kBases) {
                for (std::size_t i = 0; i < kVaried.size(); ++i) {
                    for (std::size_t j = i + 1; j < kVaried.size(); ++j) {
                        std::array<double, 3> u{};
                        std::array<double, 3> v{};
                        int slot = 0;
                        for (int k = 0; k < 3; ++k) {
                            if (k == axis) {
                                continue;
                            }
                            u[k] = v[k] = slot == 0 ? base1 : base2;
                            ++slot;
                        }
                        u[axis] = kVaried[i];
                        v[axis] = kVaried[j];
                        if (!inside_tetrahedron(u[0], u[1], u[2]) ||
                            !inside_tetrahedron(v[0], v[1], v[2])) {
                            continue;
                        }
                        if (budget == 0) {
                            break;
                        }
                        if (try_pair(new_state(u[0], u[1], u[2]),
                                     new_state(v[0], v[1], v[2]))) {
                            return found;
                        }
                    }
                }
            }
        }
    }

    // Phase 2: matched pairs across distinct rays.  The A value attained at a
    // fixed fraction of one ray is matched on another ray by bisection, then
    // the pair is checked for a B split.
    constexpr std::array<std::array<double, 3>, 12> kDirections{{
        {1.0, 0.0, 0.0},
        {0.0, 1.0, 0.0},
        {0.0, 0.0, 1.0},
        {1.0, 1.0, 0.0},
        {1.0, -1.0, 0.0},
        {1.0, 0.0, 1.0},
        {0.0, 1.0, 1.0},
        {1.0, 1.0, -1.0},
        {1.0, -1.0, 1.0},
        {-1.0, 1.0, 1.0},
        {1.0, 0.7, 0.0},
        {0.4, 0.8, 0.5},
    }};
    constexpr std::array<double, 3> kFractions{0.25, 0.5, 0.75};
    std::vector<Ray> rays;
    rays.reserve(kDirections.size());
    for (const auto& d : kDirections) {
        rays.push_back(new_ray(d));
    }
    for (std::size_t i = 0; i < rays.size() && budget > 0; ++i) {
        for (std::size_t j = 0; j < rays.size() && budget > 0; ++j) {
            if (i == j) {
                continue;
            }
            for (const double f : kFractions) {
                if (budget == 0) {
                    break;
                }
                const BellDiagonalState s1 =
                    ray_point(rays[i], f * rays[i].t_max);
                const double target = evaluate_measure(measure_a, s1);
                const double a_end = evaluate_measure(
                    measure_a, ray_point(rays[j], rays[j].t_max));
                if (a_end < target - kOrderingEqualTol) {
                    continue;  // target not reachable on ray j
                }
                const double t =
                    bisect_to_value(measure_a, rays[j], 0.0, rays[j].t_max, target);
                if (try_pair(s1, ray_point(rays[j], t))) {
                    return found;
                }
            }
        }
    }

    // Phase 3: random pairs, refined toward equal A when strictly opposite.
    StateSampler sampler(seed);
    while (budget > 0) {
        const BellDiagonalState s1 = sampler.next();
        const BellDiagonalState s2 = sampler.next();
        --budget;
        const PairValues r = eval_pair(measure_a, measure_b, s1, s2);
        if (r.violation) {
            return violation_verdict(s1, s2, r);
        }
        if (refine_opposite(s1, s2, r)) {
            return found;
        }
    }

    OrderingVerdict none;
    none.same_ordering = true;
    none.method = OrderingMethod::pair_search;
    return none;
}

SortedSequenceReport sequence_scan(Measure measure_a, Measure measure_b,
                                   const std::vector<BellDiagonalState>& states) {
    if (states.size() < 2) {
        throw std::invalid_argument("sequence_scan: need at least two states");
    }
    std::vector<double> a_vals(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        a_vals[i] = evaluate_measure(measure_a, states[i]);
    }
    std::vector<std::size_t> order(states.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                         if (a_vals[x] != a_vals[y]) {
                             return a_vals[x] < a_vals[y];
                         }
                         const BellDiagonalState& sx = states[x];
                         const BellDiagonalState& sy = states[y];
                         if (sx.c1 != sy.c1) {
                             return sx.c1 < sy.c1;
                         }
                         if (sx.c2 != sy.c2) {
                             return sx.c2 < sy.c2;
                         }
                         return sx.c3 < sy.c3;
                     });

    SortedSequenceReport report;
    report.states.reserve(states.size());
    report.values_a.reserve(states.size());
    report.values_b.reserve(states.size());
    for (const std::size_t idx : order) {
        report.states.push_back(states[idx]);
        report.values_a.push_back(a_vals[idx]);
        report.values_b.push_back(evaluate_measure(measure_b, states[idx]));
    }
    for (std::size_t i = 0; i + 1 < report.values_b.size(); ++i) {
        if (report.values_b[i + 1] < report.values_b[i] - kOrderingEqualTol) {
            report.violations.push_back(i);
        }
    }
    return report;
}

OrderingVerdict ray_ordering_check(const Ray& ray, Measure measure_a,
                                   Measure measure_b, std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument(
            "ray_ordering_check: need at least three samples");
    }
    const std::vector<BellDiagonalState> samples =
        ray_states(ray, static_cast<int>(n));
    const SortedSequenceReport forward = sequence_scan(measure_a, measure_b, samples);
    const SortedSequenceReport backward = sequence_scan(measure_b, measure_a, samples);
    OrderingVerdict v;
    v.method = OrderingMethod::sequence_scan;
    v.same_ordering = forward.violations.empty() && backward.violations.empty();
    return v;
}

}  // namespace belltet
