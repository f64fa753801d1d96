// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace belltet {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Ray ray_from_direction(const std::array<double, 3>& direction, RayFamily family) {
    const double n = norm3(direction);
    if (!std::isfinite(n) || n < 1e-15) {
        throw DegenerateRay("ray direction has zero length");
    }
    Ray ray;
    ray.direction = {direction[0] / n, direction[1] / n, direction[2] / n};
    ray.t_max = ray_t_max(ray.direction);
    ray.family = family;
    return ray;
}

}  // namespace

double ray_t_max(const std::array<double, 3>& d) {
    double t = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double sa = a == 0 ? 1.0 : -1.0;
            const double sb = b == 0 ? 1.0 : -1.0;
            const double g = sa * d[0] - sa * sb * d[1] + sb * d[2];
            if (g < 0.0) {
                t = std::min(t, -1.0 / g);
            }
        }
    }
    return t;
}

Ray new_ray(const std::array<double, 3>& direction) {
    return ray_from_direction(direction, RayFamily::generic);
}

Ray coherence_ray(double m) {
    Ray ray = ray_from_direction({1.0, m, 0.0}, RayFamily::coherence_slope);
    ray.m = m;
    return ray;
}

Ray geo_ray_slope(double m) {
    Ray ray = ray_from_direction({m, 1.0, 0.0}, RayFamily::geo_slope);
    ray.m = m;
    return ray;
}

Ray geo_ray_axis(double a, double b) {
    Ray ray = ray_from_direction({a, b, 1.0}, RayFamily::geo_axis);
    ray.a = a;
    ray.b = b;
    return ray;
}

BellDiagonalState ray_point(const Ray& ray, double t) {
    return new_state(t * ray.direction[0], t * ray.direction[1], t * ray.direction[2]);
}

std::vector<BellDiagonalState> ray_states(const Ray& ray, int n) {
    if (n < 2) {
        throw std::invalid_argument("ray_states needs n >= 2, got " + std::to_string(n));
    }
    std::vector<BellDiagonalState> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(ray_point(ray, ray.t_max * static_cast<double>(i) / (n - 1)));
    }
    return out;
}

double cre_first_derivative(double m, double c1) {
    const double mc1 = m * c1;
    const double x00 = 1.0 + c1 - mc1;
    const double x01 = 1.0 + c1 + mc1;
    const double x10 = 1.0 - c1 + mc1;
    const double x11 = 1.0 - c1 - mc1;
    if (!(x00 > 0.0 && x01 > 0.0 && x10 > 0.0 && x11 > 0.0)) {
        throw OutsideDomain("(c1, m*c1, 0) not strictly inside the tetrahedron");
    }
    return 0.25 * ((1.0 - m) * std::log2(x00) + (1.0 + m) * std::log2(x01) +
                   (m - 1.0) * std::log2(x10) + (-1.0 - m) * std::log2(x11));
}

double cre_second_derivative(double m, double c1) {
    const double mc1 = m * c1;
    const double x00 = 1.0 + c1 - mc1;
    const double x01 = 1.0 + c1 + mc1;
    const double x10 = 1.0 - c1 + mc1;
    const double x11 = 1.0 - c1 - mc1;
    if (!(x00 > 0.0 && x01 > 0.0 && x10 > 0.0 && x11 > 0.0)) {
        throw OutsideDomain("(c1, m*c1, 0) not strictly inside the tetrahedron");
    }
    const double p = (1.0 - m) * (1.0 - m);
    const double q = (1.0 + m) * (1.0 + m);
    return (p / x00 + q / x01 + p / x10 + q / x11) / (4.0 * kLn2);
}

double geo_discord_ray_piecewise(const Ray& ray, double t) {
    const double c1 = t * ray.direction[0];
    const double c2 = t * ray.direction[1];
    const double c3 = t * ray.direction[2];
    const double s1 = c1 * c1;
    const double s2 = c2 * c2;
    const double s3 = c3 * c3;
    switch (ray.family) {
        case RayFamily::geo_slope:
            // c1 = m*c2 in the c3 = 0 plane: the max square is c1^2 iff |m| >= 1.
            if (std::abs(ray.m) >= 1.0) return 0.25 * (s2 + s3);
            return 0.25 * (s1 + s3);
        case RayFamily::geo_axis: {
            // c1 = a*c3, c2 = b*c3: branch by the largest of (a^2, b^2, 1),
            // first index winning ties like the closed form.
            const double a2 = ray.a * ray.a;
            const double b2 = ray.b * ray.b;
            if (a2 >= b2 && a2 >= 1.0) return 0.25 * (s2 + s3);
            if (b2 >= 1.0) return 0.25 * (s1 + s3);
            return 0.25 * (s1 + s2);
        }
        case RayFamily::coherence_slope:
        case RayFamily::generic:
            break;
    }
    throw WrongFamily("piecewise geometric discord needs a geo_slope or geo_axis ray");
}

MonotonicityReport ray_monotonicity_report(Measure measure, const Ray& ray, int n) {
    if (n < 3) {
        throw std::invalid_argument("ray_monotonicity_report needs n >= 3, got " +
                                    std::to_string(n));
    }
    MonotonicityReport report;
    report.measure = measure;
    report.t.reserve(static_cast<std::size_t>(n));
    report.value.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = ray.t_max * static_cast<double>(n - 1 - i) / (n - 1);
        report.t.push_back(t);
        report.value.push_back(evaluate_measure(measure, ray_point(ray, t)));
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (report.value[i + 1] > report.value[i] + 1e-10) {
            report.ascents.push_back(i);
        }
    }
    return report;
}

}  // namespace belltet
