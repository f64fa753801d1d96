// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "belltet/measures.hpp"

namespace belltet {

struct GridBounds3 {
    std::array<double, 3> lo{-1.0, -1.0, -1.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
};

// Measure sampled on a regular grid; nodes outside the tetrahedron are masked.
// values is x-fastest, then y, then z.
struct ScalarField3 {
    Measure measure = Measure::discord;
    std::array<int, 3> dims{2, 2, 2};
    GridBounds3 bounds;
    std::vector<double> values;
    std::vector<std::uint8_t> valid;

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>((k * dims[1] + j) * dims[0] + i);
    }
    std::array<double, 3> node(int i, int j, int k) const;
    std::array<double, 3> spacing() const;
};

// Planar slice at fixed c3, x-fastest.
struct SliceField {
    Measure measure = Measure::c_re;
    std::array<int, 2> dims{2, 2};
    std::array<double, 2> lo{-1.0, -1.0};
    std::array<double, 2> hi{1.0, 1.0};
    double c3 = 0.0;
    std::vector<double> values;
    std::vector<std::uint8_t> valid;

    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * dims[0] + i;
    }
    std::array<double, 2> node(int i, int j) const;
    std::array<double, 2> spacing() const;
};

// Node values come from the kernel batch path; every node gets a value, the
// mask records tetrahedron membership. dims >= 2 per axis.
ScalarField3 sample_field(Measure measure, const std::array<int, 3>& dims,
                          const GridBounds3& bounds);
SliceField sample_slice(Measure measure, const std::array<int, 2>& dims,
                        const std::array<double, 2>& lo, const std::array<double, 2>& hi,
                        double c3);

struct Polyline {
    std::vector<std::array<double, 3>> points;  // (c1, c2, c3) with the slice's c3
    bool closed = false;
};

// Marching squares with the asymptotic decider (bilinear saddle test) on the
// two ambiguous cases. Cells touching masked nodes are skipped. Throws
// EmptyLevelSet when the level misses the valid value range or no cell crosses.
std::vector<Polyline> contour_slice(const SliceField& field, double level);

struct IsosurfaceMesh {
    double level = 0.0;
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::int32_t, 3>> triangles;
};

// Marching cubes over fully-valid cells; vertices dedup'd per grid edge. Cell
// corners inside T imply the whole cell is (T is convex), so no triangle can
// cross the mask boundary. Throws EmptyLevelSet like contour_slice.
IsosurfaceMesh isosurface(const ScalarField3& field, double level);

// Case tables for the cube march, generated at first use: per corner-sign case,
// the crossed-edge mask and a triangulation (edge-id triples) built by stitching
// the per-face crossing segments into loops and fanning each loop.
struct McTables {
    std::array<std::array<std::int8_t, 2>, 12> edge_corners;
    std::array<std::uint16_t, 256> edge_mask;
    std::array<std::vector<std::array<std::int8_t, 3>>, 256> triangles;
};
const McTables& mc_tables();

// Nesting probe: shoot n_rays origin rays through the slice plane, find the
// nearest crossing of each level's contour, and count rays where the higher
// level sits at or inside the lower one.
struct NestingCheck {
    int rays_compared = 0;
    int violations = 0;
    double min_separation = 0.0;  // min over compared rays of r_hi - r_lo
};
NestingCheck contour_nesting(const SliceField& field, double level_lo, double level_hi,
                             int n_rays);

}  // namespace belltet
