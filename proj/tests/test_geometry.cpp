// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "belltet/errors.hpp"
#include "belltet/geometry.hpp"
#include "belltet/io.hpp"
#include "belltet/levelset.hpp"
#include "belltet/measures.hpp"
#include "belltet/state.hpp"

using namespace belltet;

namespace {

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

// ---------------------------------------------------------------- rays

TEST_CASE("ray reach along pinned directions") {
    CHECK(ray_t_max({1.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ray_t_max({0.0, 1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ray_t_max({0.0, 0.0, -1.0}) == doctest::Approx(1.0).epsilon(1e-14));

    const double s = 1.0 / std::sqrt(3.0);
    // Toward a Bell vertex the full diagonal fits: |t| = sqrt(3).
    CHECK(std::abs(ray_t_max({s, s, -s}) - 1.7320508075688772) < 1e-13);
    CHECK(std::abs(ray_t_max({-s, -s, -s}) - 1.7320508075688772) < 1e-13);
    // Toward the center of a face only a third of that.
    CHECK(std::abs(ray_t_max({s, s, s}) - 1.0 / std::sqrt(3.0)) < 1e-13);
}

TEST_CASE("ray construction normalizes and validates") {
    const Ray r = new_ray({2.0, 0.0, 0.0});
    CHECK(r.direction[0] == 1.0);
    CHECK(r.direction[1] == 0.0);
    CHECK(std::abs(r.t_max - 1.0) < 1e-14);
    CHECK(r.family == RayFamily::generic);

    const Ray d = new_ray({1.0, 1.0, -1.0});
    CHECK(std::abs(norm3(d.direction) - 1.0) < 1e-15);
    CHECK(std::abs(d.t_max - std::sqrt(3.0)) < 1e-13);

    CHECK_THROWS_AS(new_ray({0.0, 0.0, 0.0}), DegenerateRay);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(new_ray({nan, 0.0, 0.0}), DegenerateRay);
}

TEST_CASE("ray state grids span origin to boundary") {
    const Ray r = new_ray({1.0, 0.0, 0.0});
    const std::vector<BellDiagonalState> three = ray_states(r, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].c1 == 0.0);
    CHECK(std::abs(three[1].c1 - 0.5) < 1e-14);
    CHECK(std::abs(three[2].c1 - 1.0) < 1e-14);
    CHECK(three[2].c2 == 0.0);

    const Ray diag = new_ray({1.0, 1.0, -1.0});
    const std::vector<BellDiagonalState> two = ray_states(diag, 2);
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[1].c1 - 1.0) < 1e-12);
    CHECK(std::abs(two[1].c3 + 1.0) < 1e-12);

    CHECK_THROWS_AS(ray_states(r, 1), std::invalid_argument);

    const BellDiagonalState mid = ray_point(diag, 0.5 * diag.t_max);
    CHECK(std::abs(mid.c1 - 0.5) < 1e-12);
}

TEST_CASE("family constructors store their parameters") {
    const Ray c = coherence_ray(0.7);
    CHECK(c.family == RayFamily::coherence_slope);
    CHECK(c.m == 0.7);
    CHECK(std::abs(c.direction[1] / c.direction[0] - 0.7) < 1e-14);
    CHECK(c.direction[2] == 0.0);

    const Ray gs = geo_ray_slope(2.0);
    CHECK(gs.family == RayFamily::geo_slope);
    CHECK(std::abs(gs.direction[0] / gs.direction[1] - 2.0) < 1e-14);

    const Ray ga = geo_ray_axis(1.0, -0.5);
    CHECK(ga.family == RayFamily::geo_axis);
    CHECK(ga.a == 1.0);
    CHECK(ga.b == -0.5);
    CHECK(std::abs(ga.direction[0] / ga.direction[2] - 1.0) < 1e-14);
    CHECK(std::abs(ga.direction[1] / ga.direction[2] + 0.5) < 1e-14);
}

// ---------------------------------------------------- derivatives

TEST_CASE("closed-form derivatives at pinned points") {
    // d/dc1 at m=0, c1=0.5 is log2(3)/2.
    CHECK(std::abs(cre_first_derivative(0.0, 0.5) - 0.79248125036057804) < 1e-15);
    // Curvature at the origin of the m=0 family is 1/ln 2.
    CHECK(std::abs(cre_second_derivative(0.0, 0.0) - 1.4426950408889634) < 1e-15);
    CHECK(std::abs(cre_second_derivative(1.0, 0.3) - 4.5084220027780766) < 1e-13);
}

TEST_CASE("first derivative matches central differences") {
    std::mt19937_64 engine(401);
    auto unit = [&] {
        return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
    };
    const double h = 1e-5;
    for (int i = 0; i < 200; ++i) {
        const double m = -2.0 + 4.0 * unit();
        const double c1_max = 1.0 / (1.0 + std::abs(m));
        const double c1 = (0.1 + 0.8 * unit()) * c1_max;
        if (c1 - h <= 0.0 || c1 + h >= c1_max) continue;

        auto f = [&](double x) {
            return coherence_rel_entropy(new_state(x, m * x, 0.0));
        };
        const double central = (f(c1 + h) - f(c1 - h)) / (2.0 * h);
        const double closed = cre_first_derivative(m, c1);
        CHECK(std::abs(closed - central) / std::max(1e-2, std::abs(closed)) < 1e-6);
        CHECK(cre_second_derivative(m, c1) > 0.0);
    }
}

TEST_CASE("second derivative matches second differences") {
    const double h = 1e-4;
    const double closed = cre_second_derivative(2.0, 0.2);
    auto f = [&](double x) { return coherence_rel_entropy(new_state(x, 2.0 * x, 0.0)); };
    const double second = (f(0.2 + h) - 2.0 * f(0.2) + f(0.2 - h)) / (h * h);
    CHECK(std::abs(closed - second) / closed < 1e-4);
}

TEST_CASE("derivatives reject out-of-domain points") {
    CHECK_THROWS_AS(cre_first_derivative(0.0, 1.0), OutsideDomain);
    CHECK_THROWS_AS(cre_first_derivative(3.0, 0.4), OutsideDomain);
    CHECK_THROWS_AS(cre_second_derivative(0.0, -1.0), OutsideDomain);
    CHECK_NOTHROW(cre_first_derivative(3.0, 0.2));
}

// ------------------------------------------------- piecewise geo forms

TEST_CASE("piecewise geometric discord at pinned points") {
    // Steep slope family at c2=0.3: the c1^2 term is dropped, (c2^2+c3^2)/4 stays.
    const Ray gs = geo_ray_slope(2.0);
    const double t_s = 0.3 * norm3({2.0 * 0.3, 0.3, 0.0}) / 0.3;  // c2=0.3
    CHECK(std::abs(geo_discord_ray_piecewise(gs, t_s) - 0.0225) < 1e-15);

    const Ray ga = geo_ray_axis(1.0, 1.0);
    const double t_a = 0.3 * std::sqrt(3.0);  // c3=0.3
    CHECK(std::abs(geo_discord_ray_piecewise(ga, t_a) - 0.045) < 1e-15);

    CHECK(geo_discord_ray_piecewise(gs, 0.0) == 0.0);
}

TEST_CASE("piecewise formulas reproduce the closed form bitwise") {
    std::mt19937_64 engine(409);
    auto unit = [&] {
        return (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
    };
    for (int i = 0; i < 40; ++i) {
        const Ray ray = (i % 2 == 0) ? geo_ray_slope(-3.0 + 6.0 * unit())
                                     : geo_ray_axis(-2.0 + 4.0 * unit(),
                                                    -2.0 + 4.0 * unit());
        for (int k = 0; k < 12; ++k) {
            const double t = ray.t_max * (0.99 * (k + 1) / 12.0);
            CHECK(geo_discord_ray_piecewise(ray, t) ==
                  geometric_discord(ray_point(ray, t)));
        }
    }
}

TEST_CASE("piecewise form is gated by family") {
    CHECK_THROWS_AS(geo_discord_ray_piecewise(coherence_ray(0.5), 0.1), WrongFamily);
    CHECK_THROWS_AS(geo_discord_ray_piecewise(new_ray({1.0, 0.5, 0.2}), 0.1),
                    WrongFamily);
}

// ---------------------------------------------------- monotonicity

TEST_CASE("measures decay walking rays inward") {
    const MonotonicityReport r1 =
        ray_monotonicity_report(Measure::c_re, new_ray({1.0, 0.7, 0.0}), 64);
    CHECK(r1.measure == Measure::c_re);
    REQUIRE(r1.t.size() == 64);
    CHECK(r1.t.front() > r1.t.back());
    CHECK(std::abs(r1.t.back()) < 1e-15);
    CHECK(r1.ascents.empty());

    CHECK(ray_monotonicity_report(Measure::geo_discord, new_ray({0.4, 0.8, 0.5}), 64)
              .ascents.empty());
    CHECK(ray_monotonicity_report(Measure::c_l1, new_ray({0.0, 0.0, 1.0}), 64)
              .ascents.empty());
    CHECK(ray_monotonicity_report(Measure::discord, new_ray({1.0, 1.0, -1.0}), 64)
              .ascents.empty());

    CHECK_THROWS_AS(
        ray_monotonicity_report(Measure::c_l1, new_ray({1.0, 0.0, 0.0}), 2),
        std::invalid_argument);
}

// ---------------------------------------------------- sampled fields

TEST_CASE("coarse field grid hits the landmark nodes") {
    const ScalarField3 f = sample_field(Measure::c_l1, {3, 3, 3}, GridBounds3{});
    REQUIRE(f.values.size() == 27);
    REQUIRE(f.valid.size() == 27);

    CHECK(f.valid[f.index(1, 1, 1)] == 1);
    CHECK(f.values[f.index(1, 1, 1)] == 0.0);  // origin

    // Cube corner (-1,-1,-1) is a Bell vertex; (1,1,1) is outside.
    CHECK(f.valid[f.index(0, 0, 0)] == 1);
    CHECK(f.values[f.index(0, 0, 0)] == 1.0);
    CHECK(f.valid[f.index(2, 2, 2)] == 0);

    // Exactly the 4 vertices + 6 edge midpoints + origin are lattice points of T.
    int n_valid = 0;
    for (const std::uint8_t v : f.valid) n_valid += v;
    CHECK(n_valid == 11);

    const std::array<double, 3> node = f.node(2, 0, 1);
    CHECK(node[0] == 1.0);
    CHECK(node[1] == -1.0);
    CHECK(node[2] == 0.0);
    CHECK(std::abs(f.spacing()[0] - 1.0) < 1e-15);
}

TEST_CASE("field mask tracks the tetrahedron volume") {
    const ScalarField3 f = sample_field(Measure::c_l1, {41, 41, 41}, GridBounds3{});
    std::size_t n_valid = 0;
    for (const std::uint8_t v : f.valid) n_valid += v;
    const double masked =
        1.0 - static_cast<double>(n_valid) / static_cast<double>(f.valid.size());
    // Volume ratio is 2/3; lattice discretization biases a few percent.
    CHECK(masked > 0.55);
    CHECK(masked < 0.72);
}

TEST_CASE("field values come from the measure") {
    const ScalarField3 f = sample_field(Measure::discord, {5, 5, 5}, GridBounds3{});
    for (int k = 0; k < 5; ++k) {
        for (int j = 0; j < 5; ++j) {
            for (int i = 0; i < 5; ++i) {
                if (!f.valid[f.index(i, j, k)]) continue;
                const std::array<double, 3> p = f.node(i, j, k);
                const double direct =
                    evaluate_measure(Measure::discord, new_state(p[0], p[1], p[2]));
                CHECK(std::abs(f.values[f.index(i, j, k)] - direct) < 1e-13);
            }
        }
    }
    // Axis nodes are classical: zero discord.
    CHECK(std::abs(f.values[f.index(3, 2, 2)]) < 1e-13);  // (0.5, 0, 0)
    CHECK(std::abs(f.values[f.index(2, 1, 2)]) < 1e-13);  // (0, -0.5, 0)
    CHECK(std::abs(f.values[f.index(2, 2, 4)]) < 1e-13);  // (0, 0, 1)
}

TEST_CASE("slice sampling masks and evaluates like the 3d field") {
    const SliceField s = sample_slice(Measure::c_l1, {5, 5}, {-1.0, -1.0},
                                      {1.0, 1.0}, 0.0);
    REQUIRE(s.values.size() == 25);
    CHECK(s.c3 == 0.0);
    // On the c3=0 slice validity is |c1|+|c2| <= 1.
    CHECK(s.valid[s.index(2, 2)] == 1);  // origin
    CHECK(s.valid[s.index(4, 2)] == 1);  // (1, 0) boundary
    CHECK(s.valid[s.index(4, 4)] == 0);  // (1, 1)
    CHECK(s.valid[s.index(3, 3)] == 1);  // (0.5, 0.5) boundary
    CHECK(s.values[s.index(3, 2)] == 0.5);
    const std::array<double, 2> node = s.node(3, 2);
    CHECK(node[0] == 0.5);
    CHECK(node[1] == 0.0);
}

// ---------------------------------------------------- contours

TEST_CASE("l1 contour is the square, exactly") {
    const SliceField s = sample_slice(Measure::c_l1, {201, 201}, {-1.0, -1.0},
                                      {1.0, 1.0}, 0.0);
    const std::vector<Polyline> lines = contour_slice(s, 0.435);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].closed);
    CHECK(lines[0].points.size() > 100);
    for (const std::array<double, 3>& p : lines[0].points) {
        CHECK(p[2] == 0.0);
        CHECK(std::abs(std::max(std::abs(p[0]), std::abs(p[1])) - 0.435) < 1e-9);
    }
}

TEST_CASE("relative-entropy contour passes the four axis crossings") {
    const double level = 0.18872187554086706;  // value at (0.5, 0, 0)
    const SliceField s = sample_slice(Measure::c_re, {201, 201}, {-1.0, -1.0},
                                      {1.0, 1.0}, 0.0);
    const std::vector<Polyline> lines = contour_slice(s, level);
    REQUIRE(!lines.empty());

    const std::array<std::array<double, 2>, 4> anchors = {
        {{0.5, 0.0}, {-0.5, 0.0}, {0.0, 0.5}, {0.0, -0.5}}};
    double worst_revisit = 0.0;
    for (const std::array<double, 2>& a : anchors) {
        double nearest = 1e9;
        for (const Polyline& line : lines) {
            for (const std::array<double, 3>& p : line.points) {
                nearest = std::min(nearest, std::hypot(p[0] - a[0], p[1] - a[1]));
            }
        }
        CHECK(nearest < 0.02);
    }
    for (const Polyline& line : lines) {
        for (const std::array<double, 3>& p : line.points) {
            worst_revisit = std::max(
                worst_revisit,
                std::abs(coherence_rel_entropy(new_state(p[0], p[1], p[2])) - level));
        }
    }
    CHECK(worst_revisit < 1e-3);
}

TEST_CASE("contours reject unreachable levels") {
    const SliceField s = sample_slice(Measure::c_l1, {51, 51}, {-1.0, -1.0},
                                      {1.0, 1.0}, 0.0);
    CHECK_THROWS_AS(contour_slice(s, 5.0), EmptyLevelSet);
    CHECK_THROWS_AS(contour_slice(s, -0.5), EmptyLevelSet);
}

TEST_CASE("levels nest along radial probes") {
    const SliceField cre = sample_slice(Measure::c_re, {201, 201}, {-1.0, -1.0},
                                        {1.0, 1.0}, 0.0);
    const NestingCheck n1 = contour_nesting(cre, 0.05, 0.15, 32);
    CHECK(n1.violations == 0);
    CHECK(n1.rays_compared >= 24);
    CHECK(n1.min_separation > 0.0);

    const SliceField dis = sample_slice(Measure::discord, {201, 201}, {-1.0, -1.0},
                                        {1.0, 1.0}, 0.0);
    const NestingCheck n2 = contour_nesting(dis, 0.01, 0.04, 32);
    CHECK(n2.violations == 0);
    CHECK(n2.min_separation > 0.0);

    const SliceField geo = sample_slice(Measure::geo_discord, {201, 201},
                                        {-1.0, -1.0}, {1.0, 1.0}, 0.1);
    const NestingCheck n3 = contour_nesting(geo, 0.005, 0.02, 32);
    CHECK(n3.violations == 0);
}

// ---------------------------------------------------- isosurfaces

TEST_CASE("l1 isosurface vertices sit on the level set") {
    const ScalarField3 f = sample_field(Measure::c_l1, {41, 41, 41}, GridBounds3{});
    const IsosurfaceMesh mesh = isosurface(f, 0.435);
    CHECK(mesh.level == 0.435);
    REQUIRE(mesh.vertices.size() > 100);
    REQUIRE(!mesh.triangles.empty());
    for (const std::array<double, 3>& v : mesh.vertices) {
        CHECK(std::abs(std::max(std::abs(v[0]), std::abs(v[1])) - 0.435) < 1e-9);
    }
    const std::int32_t n = static_cast<std::int32_t>(mesh.vertices.size());
    for (const std::array<std::int32_t, 3>& tri : mesh.triangles) {
        CHECK(tri[0] >= 0);
        CHECK(tri[0] < n);
        CHECK(tri[1] >= 0);
        CHECK(tri[1] < n);
        CHECK(tri[2] >= 0);
        CHECK(tri[2] < n);
        CHECK(tri[0] != tri[1]);
        CHECK(tri[1] != tri[2]);
        CHECK(tri[0] != tri[2]);
    }
    CHECK_THROWS_AS(isosurface(f, 5.0), EmptyLevelSet);
}

TEST_CASE("synthetic sphere march is watertight") {
    ScalarField3 f;
    f.measure = Measure::c_l1;  // payload irrelevant here
    f.dims = {33, 33, 33};
    f.bounds = GridBounds3{{-0.9, -0.9, -0.9}, {0.9, 0.9, 0.9}};
    f.values.resize(33 * 33 * 33);
    f.valid.assign(f.values.size(), 1);
    for (int k = 0; k < 33; ++k) {
        for (int j = 0; j < 33; ++j) {
            for (int i = 0; i < 33; ++i) {
                const std::array<double, 3> p = f.node(i, j, k);
                f.values[f.index(i, j, k)] = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
            }
        }
    }

    const IsosurfaceMesh mesh = isosurface(f, 0.25);
    REQUIRE(mesh.vertices.size() > 100);
    for (const std::array<double, 3>& v : mesh.vertices) {
        CHECK(std::abs(norm3(v) - 0.5) < 0.005);
    }

    // Closed manifold: V - E + F = 2 with E = 3F/2.
    const double euler = static_cast<double>(mesh.vertices.size()) -
                         static_cast<double>(mesh.triangles.size()) / 2.0;
    CHECK(euler == 2.0);

    double area = 0.0;
    for (const std::array<std::int32_t, 3>& tri : mesh.triangles) {
        const std::array<double, 3>& a = mesh.vertices[tri[0]];
        const std::array<double, 3>& b = mesh.vertices[tri[1]];
        const std::array<double, 3>& c = mesh.vertices[tri[2]];
        const std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const std::array<double, 3> w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        const std::array<double, 3> cross{u[1] * w[2] - u[2] * w[1],
                                          u[2] * w[0] - u[0] * w[2],
                                          u[0] * w[1] - u[1] * w[0]};
        area += 0.5 * norm3(cross);
    }
    const double sphere_area = 4.0 * 3.14159265358979324 * 0.25;
    CHECK(area > 0.92 * sphere_area);
    CHECK(area < 1.08 * sphere_area);
}

TEST_CASE("cube case tables are internally consistent") {
    const McTables& tables = mc_tables();

    // Each cube corner meets exactly three edges.
    std::array<int, 8> degree{};
    for (const std::array<std::int8_t, 2>& e : tables.edge_corners) {
        REQUIRE(e[0] >= 0);
        REQUIRE(e[0] < 8);
        REQUIRE(e[1] >= 0);
        REQUIRE(e[1] < 8);
        REQUIRE(e[0] != e[1]);
        ++degree[e[0]];
        ++degree[e[1]];
    }
    for (const int d : degree) CHECK(d == 3);

    CHECK(tables.edge_mask[0] == 0);
    CHECK(tables.edge_mask[255] == 0);
    CHECK(tables.triangles[0].empty());
    CHECK(tables.triangles[255].empty());

    for (int c = 0; c < 256; ++c) {
        CHECK(tables.edge_mask[c] == tables.edge_mask[255 - c]);

        // An edge is crossed iff its corners straddle the case's inside set.
        std::uint16_t expect = 0;
        for (int e = 0; e < 12; ++e) {
            const bool in0 = (c >> tables.edge_corners[e][0]) & 1;
            const bool in1 = (c >> tables.edge_corners[e][1]) & 1;
            if (in0 != in1) expect |= static_cast<std::uint16_t>(1u << e);
        }
        CHECK(tables.edge_mask[c] == expect);

        std::set<int> used;
        for (const std::array<std::int8_t, 3>& tri : tables.triangles[c]) {
            for (const std::int8_t e : tri) {
                REQUIRE(e >= 0);
                REQUIRE(e < 12);
                CHECK(((tables.edge_mask[c] >> e) & 1) == 1);
                used.insert(e);
            }
        }
        // Every crossed edge shows up in the triangulation.
        for (int e = 0; e < 12; ++e) {
            if ((tables.edge_mask[c] >> e) & 1) CHECK(used.count(e) == 1);
        }
    }
}

// ---------------------------------------------------- io

TEST_CASE("doubles round-trip through the text format") {
    for (const double v : {0.0, -0.0, 0.1, 1.0 / 3.0, -2.5e-17,
                           0.14239777082354022, 1e300, -1.7320508075688772}) {
        CHECK(std::stod(io::format_double(v)) == v);
    }
}

TEST_CASE("state csv round trip") {
    const std::vector<BellDiagonalState> states = random_states(601, 20);
    const std::string csv = io::states_csv(states);
    const std::vector<std::vector<std::string>> rows = io::parse_csv(csv);
    REQUIRE(rows.size() == states.size() + 1);
    REQUIRE(rows[0] == std::vector<std::string>{"c1", "c2", "c3"});
    for (std::size_t i = 0; i < states.size(); ++i) {
        CHECK(std::stod(rows[i + 1][0]) == states[i].c1);
        CHECK(std::stod(rows[i + 1][1]) == states[i].c2);
        CHECK(std::stod(rows[i + 1][2]) == states[i].c3);
    }
}

TEST_CASE("trajectory csv layout") {
    const Trajectory traj = trajectory(new_state(0.2, 0.1, 0.6),
                                       ChannelFamily::phase_flip_both,
                                       NoiseSchedule::uniform(1.0, 1.0, 4));
    const std::vector<std::vector<std::string>> rows =
        io::parse_csv(io::trajectory_csv(traj));
    REQUIRE(rows.size() == 5);
    REQUIRE(rows[0] == std::vector<std::string>{"t", "c1", "c2", "c3", "c_l1",
                                                "c_re", "discord", "geo_discord"});
    for (std::size_t i = 0; i < 4; ++i) {
        const TrajectorySample& s = traj.samples[i];
        CHECK(std::stod(rows[i + 1][0]) == s.t);
        CHECK(std::stod(rows[i + 1][3]) == s.state.c3);
        CHECK(std::stod(rows[i + 1][4]) == s.measures.c_l1);
        CHECK(std::stod(rows[i + 1][7]) == s.measures.geo_discord);
    }
}

TEST_CASE("sequence csv layout") {
    const SortedSequenceReport report =
        sequence_scan(Measure::c_l1, Measure::c_re, random_states(607, 10));
    const std::vector<std::vector<std::string>> rows =
        io::parse_csv(io::sequence_csv(report));
    REQUIRE(rows.size() == 11);
    REQUIRE(rows[0] == std::vector<std::string>{"index", "value_a", "value_b"});
    CHECK(std::stod(rows[1][1]) == report.values_a[0]);
    CHECK(std::stod(rows[10][2]) == report.values_b[9]);
}

TEST_CASE("contour csv closes loops") {
    std::vector<Polyline> lines(2);
    lines[0].points = {{0.0, 0.0, 0.0}, {0.1, 0.0, 0.0}, {0.1, 0.1, 0.0}};
    lines[0].closed = true;
    lines[1].points = {{0.2, 0.2, 0.0}, {0.3, 0.2, 0.0}};
    lines[1].closed = false;

    const std::vector<std::vector<std::string>> rows =
        io::parse_csv(io::contour_csv(lines));
    REQUIRE(rows[0] == std::vector<std::string>{"polyline_id", "c1", "c2", "c3"});
    // 3 + repeated first point, then 2 open points.
    REQUIRE(rows.size() == 1 + 4 + 2);
    CHECK(rows[1][0] == "0");
    CHECK(rows[4][0] == "0");
    CHECK(rows[4][1] == rows[1][1]);  // loop closed back to the first point
    CHECK(rows[4][2] == rows[1][2]);
    CHECK(rows[5][0] == "1");
    CHECK(rows[6][0] == "1");
}

TEST_CASE("mesh obj layout") {
    IsosurfaceMesh mesh;
    mesh.level = 0.1;
    mesh.vertices = {{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    mesh.triangles = {{0, 1, 2}};
    const std::string obj = io::mesh_obj(mesh);
    CHECK(obj.find("v 0 0 0\n") != std::string::npos);
    CHECK(obj.find("v 1 0 0\n") != std::string::npos);
    CHECK(obj.find("f 1 2 3\n") != std::string::npos);
}

TEST_CASE("file writes are atomic") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "belltet_io_test";
    fs::create_directories(dir);
    const std::string path = (dir / "out.txt").string();
    io::write_text_file(path, "alpha\nbeta\n");
    CHECK(io::read_text_file(path) == "alpha\nbeta\n");
    io::write_text_file(path, "gamma\n");
    CHECK(io::read_text_file(path) == "gamma\n");

    const fs::path missing = dir / "no_such_subdir" / "x.txt";
    CHECK_THROWS_AS(io::write_text_file(missing.string(), "y"), std::runtime_error);
    CHECK(!fs::exists(missing));
    CHECK_THROWS_AS(io::read_text_file((dir / "absent.txt").string()),
                    std::runtime_error);
    fs::remove_all(dir);
}
