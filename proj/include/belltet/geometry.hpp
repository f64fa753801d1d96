// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <vector>

#include "belltet/measures.hpp"
#include "belltet/state.hpp"

namespace belltet {

// Origin rays come in three axis-anchored families with slope parameters, plus
// free directions. The family tag gates the piecewise formulas.
enum class RayFamily {
    generic,
    coherence_slope,  // c2 = m*c1, c3 = 0
    geo_slope,        // c1 = m*c2, c3 = 0
    geo_axis,         // c1 = a*c3, c2 = b*c3
};

struct Ray {
    std::array<double, 3> direction{1.0, 0.0, 0.0};  // unit vector
    double t_max = 0.0;
    RayFamily family = RayFamily::generic;
    double m = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// Largest t with direction*t still inside T. Each eigenvalue varies linearly as
// (1 + t*g_ab)/4; the first face hit is the most negative g_ab.
double ray_t_max(const std::array<double, 3>& unit_direction);

// Normalizes the direction. Throws DegenerateRay for zero or non-finite input.
Ray new_ray(const std::array<double, 3>& direction);

Ray coherence_ray(double m);
Ray geo_ray_slope(double m);
Ray geo_ray_axis(double a, double b);

BellDiagonalState ray_point(const Ray& ray, double t);

// n evenly spaced states from the origin to direction*t_max inclusive (n >= 2).
std::vector<BellDiagonalState> ray_states(const Ray& ray, int n);

// d/dc1 of coherence_rel_entropy along c2 = m*c1, c3 = 0, in closed form:
// with x_ab = 1 +- c1 +- m*c1 (the scaled spectrum), the derivative is
// (1/4) sum x'_ab log2(x_ab). Throws OutsideDomain unless all x_ab > 0.
double cre_first_derivative(double m, double c1);

// Second derivative along the same family: (1/(4 ln 2)) sum x'_ab^2 / x_ab.
// Positive on the whole open domain.
double cre_second_derivative(double m, double c1);

// Geometric discord along a geo_slope or geo_axis ray via the family's branch
// formulas. Branches mirror the closed form's "drop the first index attaining
// the max square" rule, so values agree with geometric_discord bitwise.
// Throws WrongFamily for other rays.
double geo_discord_ray_piecewise(const Ray& ray, double t);

struct MonotonicityReport {
    Measure measure = Measure::c_l1;
    std::vector<double> t;       // boundary (t_max) down to origin (0)
    std::vector<double> value;   // measure at each t
    std::vector<int> ascents;    // indices i where value[i+1] > value[i] + 1e-10
};

// Samples the measure at n points walking the ray inward (n >= 3) and flags
// every increase beyond 1e-10.
MonotonicityReport ray_monotonicity_report(Measure measure, const Ray& ray, int n);

}  // namespace belltet
