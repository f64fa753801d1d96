// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// Cube-march case tables, generated instead of transcribed. For each of the 256
// corner sign patterns, every cube face contributes the marching-squares
// segments between its crossed edges (diagonal face cases use the fixed
// "separate the inside corners" convention, as in the classic tables). Each
// crossed cube edge lies on exactly two faces and therefore picks up exactly
// two segment ends, so the segments stitch into disjoint closed loops; each
// loop is fan-triangulated. A unit test asserts every case uses exactly its
// crossed-edge set.

#include "belltet/levelset.hpp"

#include <mutex>

namespace belltet {

namespace {

// Corner c has coordinates (c&1, c>>1&1, c>>2&1).
constexpr std::int8_t kEdgeCorners[12][2] = {
    {0, 1}, {2, 3}, {4, 5}, {6, 7},  // x edges
    {0, 2}, {1, 3}, {4, 6}, {5, 7},  // y edges
    {0, 4}, {1, 5}, {2, 6}, {3, 7},  // z edges
};

// Faces as corner cycles (consecutive corners share a cube edge).
constexpr std::int8_t kFaceCycles[6][4] = {
    {0, 2, 6, 4},  // x = 0
    {1, 3, 7, 5},  // x = 1
    {0, 1, 5, 4},  // y = 0
    {2, 3, 7, 6},  // y = 1
    {0, 1, 3, 2},  // z = 0
    {4, 5, 7, 6},  // z = 1
};

int edge_between(int ca, int cb) {
    for (int e = 0; e < 12; ++e) {
        if ((kEdgeCorners[e][0] == ca && kEdgeCorners[e][1] == cb) ||
            (kEdgeCorners[e][0] == cb && kEdgeCorners[e][1] == ca)) {
            return e;
        }
    }
    return -1;
}

void build_case(int corner_mask, McTables& tables) {
    const auto inside = [&](int corner) { return (corner_mask >> corner) & 1; };

    std::uint16_t crossed = 0;
    for (int e = 0; e < 12; ++e) {
        if (inside(kEdgeCorners[e][0]) != inside(kEdgeCorners[e][1])) {
            crossed |= static_cast<std::uint16_t>(1u << e);
        }
    }
    tables.edge_mask[corner_mask] = crossed;

    // Per crossed edge, its two neighbors along the surface loops.
    std::array<std::array<int, 2>, 12> next{};
    std::array<int, 12> degree{};
    const auto link = [&](int ea, int eb) {
        next[ea][degree[ea]++] = eb;
        next[eb][degree[eb]++] = ea;
    };

    for (const auto& cycle : kFaceCycles) {
        int face_edges[4];
        bool face_in[4];
        for (int s = 0; s < 4; ++s) {
            face_edges[s] = edge_between(cycle[s], cycle[(s + 1) % 4]);
            face_in[s] = inside(cycle[s]) != 0;
        }
        const int count = face_in[0] + face_in[1] + face_in[2] + face_in[3];
        if (count == 0 || count == 4) continue;
        if (count == 1 || count == 3) {
            // One lone corner (inside or outside): join its two incident edges.
            const bool lone_value = count == 1;
            for (int s = 0; s < 4; ++s) {
                if (face_in[s] == lone_value) {
                    link(face_edges[(s + 3) % 4], face_edges[s]);
                    break;
                }
            }
        } else if (face_in[0] == face_in[2]) {
            // Diagonal pair: keep the two inside corners separate.
            for (int s = 0; s < 4; ++s) {
                if (face_in[s]) {
                    link(face_edges[(s + 3) % 4], face_edges[s]);
                }
            }
        } else {
            // Adjacent pair: the two crossed edges bound one band.
            for (int s = 0; s < 4; ++s) {
                if (face_in[s] && face_in[(s + 1) % 4]) {
                    link(face_edges[(s + 3) % 4], face_edges[(s + 1) % 4]);
                    break;
                }
            }
        }
    }

    // Walk the loops and fan-triangulate each.
    std::array<bool, 12> used{};
    for (int start = 0; start < 12; ++start) {
        if (!((crossed >> start) & 1) || used[start]) continue;
        std::vector<std::int8_t> loop;
        int prev = -1;
        int cur = start;
        do {
            loop.push_back(static_cast<std::int8_t>(cur));
            used[cur] = true;
            const int a = next[cur][0];
            const int b = next[cur][1];
            const int nxt = (a == prev) ? b : a;
            prev = cur;
            cur = nxt;
        } while (cur != start);
        for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
            tables.triangles[corner_mask].push_back({loop[0], loop[i], loop[i + 1]});
        }
    }
}

}  // namespace

const McTables& mc_tables() {
    static McTables tables;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int e = 0; e < 12; ++e) {
            tables.edge_corners[e] = {kEdgeCorners[e][0], kEdgeCorners[e][1]};
        }
        for (int c = 0; c < 256; ++c) {
            build_case(c, tables);
        }
    });
    return tables;
}

}  // namespace belltet
