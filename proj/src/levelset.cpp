// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/levelset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "belltet/kernels.hpp"
#include "belltet/parallel.hpp"

namespace belltet {

namespace {

void require_dims(int d) {
    if (d < 2) {
        throw std::invalid_argument("field needs >= 2 nodes per axis, got " + std::to_string(d));
    }
}

// Value range over valid nodes; throws EmptyLevelSet when the level misses it.
template <typename Field>
void require_level_in_range(const Field& field, double level) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        if (field.valid[i]) {
            lo = std::min(lo, field.values[i]);
            hi = std::max(hi, field.values[i]);
        }
    }
    if (!(level >= lo && level <= hi)) {
        throw EmptyLevelSet("level " + std::to_string(level) + " outside valid value range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

double lerp_coord(double a, double b, double va, double vb, double level) {
    return a + (level - va) / (vb - va) * (b - a);
}

}  // namespace

std::array<double, 3> ScalarField3::node(int i, int j, int k) const {
    const auto at = [&](int axis, int idx) {
        return bounds.lo[axis] +
               (bounds.hi[axis] - bounds.lo[axis]) * static_cast<double>(idx) / (dims[axis] - 1);
    };
    return {at(0, i), at(1, j), at(2, k)};
}

std::array<double, 3> ScalarField3::spacing() const {
    return {(bounds.hi[0] - bounds.lo[0]) / (dims[0] - 1),
            (bounds.hi[1] - bounds.lo[1]) / (dims[1] - 1),
            (bounds.hi[2] - bounds.lo[2]) / (dims[2] - 1)};
}

std::array<double, 2> SliceField::node(int i, int j) const {
    return {lo[0] + (hi[0] - lo[0]) * static_cast<double>(i) / (dims[0] - 1),
            lo[1] + (hi[1] - lo[1]) * static_cast<double>(j) / (dims[1] - 1)};
}

std::array<double, 2> SliceField::spacing() const {
    return {(hi[0] - lo[0]) / (dims[0] - 1), (hi[1] - lo[1]) / (dims[1] - 1)};
}

ScalarField3 sample_field(Measure measure, const std::array<int, 3>& dims,
                          const GridBounds3& bounds) {
    require_dims(dims[0]);
    require_dims(dims[1]);
    require_dims(dims[2]);
    ScalarField3 field;
    field.measure = measure;
    field.dims = dims;
    field.bounds = bounds;
    const std::size_t n =
        static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) * dims[2];
    field.values.resize(n);
    field.valid.resize(n);

    std::vector<double> c1(n), c2(n), c3(n);
    par::parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int i = static_cast<int>(idx % dims[0]);
            const int j = static_cast<int>((idx / dims[0]) % dims[1]);
            const int k = static_cast<int>(idx / (static_cast<std::size_t>(dims[0]) * dims[1]));
            const auto p = field.node(i, j, k);
            c1[idx] = p[0];
            c2[idx] = p[1];
            c3[idx] = p[2];
            field.valid[idx] = inside_tetrahedron(p[0], p[1], p[2]) ? 1 : 0;
        }
        kernels::evaluate(measure, std::span(c1).subspan(begin, end - begin),
                          std::span(c2).subspan(begin, end - begin),
                          std::span(c3).subspan(begin, end - begin),
                          std::span(field.values).subspan(begin, end - begin));
    });
    return field;
}

SliceField sample_slice(Measure measure, const std::array<int, 2>& dims,
                        const std::array<double, 2>& lo, const std::array<double, 2>& hi,
                        double c3) {
    require_dims(dims[0]);
    require_dims(dims[1]);
    SliceField field;
    field.measure = measure;
    field.dims = dims;
    field.lo = lo;
    field.hi = hi;
    field.c3 = c3;
    const std::size_t n = static_cast<std::size_t>(dims[0]) * dims[1];
    field.values.resize(n);
    field.valid.resize(n);

    std::vector<double> x(n), y(n), z(n, c3);
    par::parallel_for(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int i = static_cast<int>(idx % dims[0]);
            const int j = static_cast<int>(idx / dims[0]);
            const auto p = field.node(i, j);
            x[idx] = p[0];
            y[idx] = p[1];
            field.valid[idx] = inside_tetrahedron(p[0], p[1], c3) ? 1 : 0;
        }
        kernels::evaluate(measure, std::span(x).subspan(begin, end - begin),
                          std::span(y).subspan(begin, end - begin),
                          std::span(z).subspan(begin, end - begin),
                          std::span(field.values).subspan(begin, end - begin));
    });
    return field;
}

std::vector<Polyline> contour_slice(const SliceField& field, double level) {
    require_level_in_range(field, level);

    // Vertices live on grid edges: key = node index * 2 + axis (0 = +x, 1 = +y).
    std::map<std::size_t, std::int32_t> edge_vertex;
    std::vector<std::array<double, 2>> points;
    std::vector<std::array<std::int32_t, 2>> segments;

    const auto vertex_on_edge = [&](int i, int j, int axis) {
        const std::size_t key = field.index(i, j) * 2 + axis;
        const auto found = edge_vertex.find(key);
        if (found != edge_vertex.end()) return found->second;
        const auto a = field.node(i, j);
        const auto b = axis == 0 ? field.node(i + 1, j) : field.node(i, j + 1);
        const double va = field.values[field.index(i, j)];
        const double vb =
            axis == 0 ? field.values[field.index(i + 1, j)] : field.values[field.index(i, j + 1)];
        const std::int32_t id = static_cast<std::int32_t>(points.size());
        points.push_back({lerp_coord(a[0], b[0], va, vb, level), lerp_coord(a[1], b[1], va, vb, level)});
        edge_vertex.emplace(key, id);
        return id;
    };

    for (int j = 0; j + 1 < field.dims[1]; ++j) {
        for (int i = 0; i + 1 < field.dims[0]; ++i) {
            if (!field.valid[field.index(i, j)] || !field.valid[field.index(i + 1, j)] ||
                !field.valid[field.index(i, j + 1)] || !field.valid[field.index(i + 1, j + 1)]) {
                continue;
            }
            const double v00 = field.values[field.index(i, j)];
            const double v10 = field.values[field.index(i + 1, j)];
            const double v11 = field.values[field.index(i + 1, j + 1)];
            const double v01 = field.values[field.index(i, j + 1)];
            const int bits = (v00 > level ? 1 : 0) | (v10 > level ? 2 : 0) |
                             (v11 > level ? 4 : 0) | (v01 > level ? 8 : 0);
            if (bits == 0 || bits == 15) continue;

            // Cell edges: e0 bottom, e1 right, e2 top, e3 left.
            const auto e = [&](int which) {
                switch (which) {
                    case 0: return vertex_on_edge(i, j, 0);
                    case 1: return vertex_on_edge(i + 1, j, 1);
                    case 2: return vertex_on_edge(i, j + 1, 0);
                    default: return vertex_on_edge(i, j, 1);
                }
            };
            const auto emit = [&](int ea, int eb) { segments.push_back({e(ea), e(eb)}); };

            switch (bits) {
                case 1: emit(3, 0); break;
                case 2: emit(0, 1); break;
                case 3: emit(3, 1); break;
                case 4: emit(1, 2); break;
                case 6: emit(0, 2); break;
                case 7: emit(3, 2); break;
                case 8: emit(2, 3); break;
                case 9: emit(0, 2); break;
                case 11: emit(1, 2); break;
                case 12: emit(3, 1); break;
                case 13: emit(0, 1); break;
                case 14: emit(0, 3); break;
                case 5:
                case 10: {
                    // Ambiguous: resolve with the bilinear saddle value.
                    const double denom = v00 + v11 - v10 - v01;
                    const double saddle =
                        std::abs(denom) > 1e-300 ? (v00 * v11 - v10 * v01) / denom : level;
                    const bool center_inside = saddle > level;
                    if (bits == 5) {
                        if (center_inside) {
                            emit(3, 2);
                            emit(0, 1);
                        } else {
                            emit(3, 0);
                            emit(1, 2);
                        }
                    } else {
                        if (center_inside) {
                            emit(0, 3);
                            emit(1, 2);
                        } else {
                            emit(0, 1);
                            emit(2, 3);
                        }
                    }
                    break;
                }
                default: break;
            }
        }
    }

    if (segments.empty()) {
        throw EmptyLevelSet("no contour crossings at level " + std::to_string(level));
    }

    // Stitch segments into chains: open chains first (from degree-1 vertices in
    // index order), then remaining cycles.
    std::vector<std::vector<std::int32_t>> adjacency(points.size());
    for (std::size_t s = 0; s < segments.size(); ++s) {
        adjacency[segments[s][0]].push_back(static_cast<std::int32_t>(s));
        adjacency[segments[s][1]].push_back(static_cast<std::int32_t>(s));
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> polylines;

    const auto walk = [&](std::int32_t start_vertex) {
        Polyline line;
        std::int32_t v = start_vertex;
        line.points.push_back({points[v][0], points[v][1], field.c3});
        while (true) {
            std::int32_t seg = -1;
            for (std::int32_t s : adjacency[v]) {
                if (!used[s]) {
                    seg = s;
                    break;
                }
            }
            if (seg < 0) break;
            used[seg] = true;
            v = segments[seg][0] == v ? segments[seg][1] : segments[seg][0];
            line.points.push_back({points[v][0], points[v][1], field.c3});
        }
        line.closed = v == start_vertex && line.points.size() > 2;
        if (line.closed) line.points.pop_back();
        return line;
    };

    for (std::size_t v = 0; v < points.size(); ++v) {
        if (adjacency[v].size() == 1) {
            const std::int32_t seg = adjacency[v][0];
            if (!used[seg]) {
                polylines.push_back(walk(static_cast<std::int32_t>(v)));
            }
        }
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (!used[s]) {
            polylines.push_back(walk(segments[s][0]));
        }
    }
    return polylines;
}

IsosurfaceMesh isosurface(const ScalarField3& field, double level) {
    require_level_in_range(field, level);
    const McTables& tables = mc_tables();

    IsosurfaceMesh mesh;
    mesh.level = level;
    std::map<std::size_t, std::int32_t> edge_vertex;

    // Cell corner c sits at node (i + c&1, j + c>>1&1, k + c>>2&1).
    const auto corner_node = [&](int i, int j, int k, int c) {
        return std::array<int, 3>{i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1)};
    };

    for (int k = 0; k + 1 < field.dims[2]; ++k) {
        for (int j = 0; j + 1 < field.dims[1]; ++j) {
            for (int i = 0; i + 1 < field.dims[0]; ++i) {
                double value[8];
                bool all_valid = true;
                int bits = 0;
                for (int c = 0; c < 8; ++c) {
                    const auto n = corner_node(i, j, k, c);
                    const std::size_t idx = field.index(n[0], n[1], n[2]);
                    all_valid = all_valid && field.valid[idx] != 0;
                    value[c] = field.values[idx];
                    if (value[c] > level) bits |= 1 << c;
                }
                if (!all_valid || bits == 0 || bits == 255) continue;

                std::int32_t edge_ids[12];
                for (int e = 0; e < 12; ++e) {
                    if (!((tables.edge_mask[bits] >> e) & 1)) {
                        edge_ids[e] = -1;
                        continue;
                    }
                    const int ca = tables.edge_corners[e][0];
                    const int cb = tables.edge_corners[e][1];
                    const auto na = corner_node(i, j, k, ca);
                    const int axis = e < 4 ? 0 : (e < 8 ? 1 : 2);
                    const std::size_t key =
                        field.index(na[0], na[1], na[2]) * 3 + static_cast<std::size_t>(axis);
                    const auto found = edge_vertex.find(key);
                    if (found != edge_vertex.end()) {
                        edge_ids[e] = found->second;
                        continue;
                    }
                    const auto nb = corner_node(i, j, k, cb);
                    const auto pa = field.node(na[0], na[1], na[2]);
                    const auto pb = field.node(nb[0], nb[1], nb[2]);
                    std::array<double, 3> p = pa;
                    p[axis] = lerp_coord(pa[axis], pb[axis], value[ca], value[cb], level);
                    const std::int32_t id = static_cast<std::int32_t>(mesh.vertices.size());
                    mesh.vertices.push_back(p);
                    edge_vertex.emplace(key, id);
                    edge_ids[e] = id;
                }

                for (const auto& tri : tables.triangles[bits]) {
                    mesh.triangles.push_back(
                        {edge_ids[tri[0]], edge_ids[tri[1]], edge_ids[tri[2]]});
                }
            }
        }
    }

    if (mesh.triangles.empty()) {
        throw EmptyLevelSet("no isosurface crossings at level " + std::to_string(level));
    }
    return mesh;
}

NestingCheck contour_nesting(const SliceField& field, double level_lo, double level_hi,
                             int n_rays) {
    const std::vector<Polyline> inner = contour_slice(field, level_lo);
    const std::vector<Polyline> outer = contour_slice(field, level_hi);

    // Nearest crossing radius of a polyline set along direction d, or +inf.
    const auto nearest = [](const std::vector<Polyline>& lines, double dx, double dy) {
        double best = std::numeric_limits<double>::infinity();
        for (const Polyline& line : lines) {
            const std::size_t n = line.points.size();
            const std::size_t limit = line.closed ? n : n - 1;
            for (std::size_t s = 0; s < limit; ++s) {
                const auto& p = line.points[s];
                const auto& q = line.points[(s + 1) % n];
                const double ex = q[0] - p[0];
                const double ey = q[1] - p[1];
                const double denom = dx * ey - dy * ex;
                if (std::abs(denom) < 1e-300) continue;
                const double r = (p[0] * ey - p[1] * ex) / denom;
                const double u = (p[0] * dy - p[1] * dx) / denom;
                if (r > 0.0 && u >= 0.0 && u <= 1.0) {
                    best = std::min(best, r);
                }
            }
        }
        return best;
    };

    NestingCheck check;
    check.min_separation = std::numeric_limits<double>::infinity();
    constexpr double kTau = 6.283185307179586476925286766559;
    for (int r = 0; r < n_rays; ++r) {
        // Offset keeps rays off the axes, where contours may legitimately end.
        const double angle = kTau * (r + 0.37) / n_rays;
        const double r_lo = nearest(inner, std::cos(angle), std::sin(angle));
        const double r_hi = nearest(outer, std::cos(angle), std::sin(angle));
        if (std::isfinite(r_lo) && std::isfinite(r_hi)) {
            ++check.rays_compared;
            check.min_separation = std::min(check.min_separation, r_hi - r_lo);
            if (r_hi <= r_lo) {
                ++check.violations;
            }
        }
    }
    return check;
}

}  // namespace belltet
