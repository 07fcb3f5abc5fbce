#pragma once

// Orientation sign engine: compares the half-edge order induced by a vertex
// numbering together with a vertex-orientation against the order induced by
// the edge-orientation, and returns the signature of the permutation between
// them. The sign is what multiplies the configuration-space orientation
// downstream; everything here is exact integer work on 12 elements.

#include <array>
#include <stdexcept>

#include "lambda2/graphs.hpp"

namespace lambda2 {

// Cyclic order of the three half-edges at each vertex, stored as one chosen
// linearization per vertex (the cyclic class is what matters).
struct VertexOrientation {
    std::array<std::array<int, 3>, kNumVertices> at{};

    VertexOrientation flipped_at(int v) const {
        VertexOrientation r = *this;
        std::swap(r.at[v][1], r.at[v][2]);
        return r;
    }
};

inline void validate(const EdgeOrientedGraph& g, const VertexOrientation& vo) {
    for (int v = 0; v < kNumVertices; ++v) {
        std::array<int, 3> got = vo.at[v];
        std::sort(got.begin(), got.end());
        std::array<int, 3> want{};
        int n = 0;
        for (int h = 0; h < kNumHalfEdges; ++h)
            if (g.vertex_of[h] == v) {
                if (n == 3) throw std::invalid_argument("vertex not trivalent");
                want[n++] = h;
            }
        if (got != want) throw std::invalid_argument("vertex orientation does not list the vertex's half-edges");
    }
}

// Vertex-orientations of T1 and W1 read off the drawings:
//   o(T1) = {(c1,b1,f1),(a2,b2,e1),(e2,c2,d1),(d2,f2,a1)}
//   o(W1) = {(f1,b1,c1),(e1,c2,b2),(d2,f2,a1),(a2,e2,d1)}
inline VertexOrientation drawn_vertex_orientation(CanonicalName name) {
    VertexOrientation vo;
    switch (name) {
        case CanonicalName::T1:
        case CanonicalName::T2:
        case CanonicalName::T_less:
            vo.at = {{{4, 2, 10}, {1, 3, 8}, {9, 5, 6}, {7, 11, 0}}};
            break;
        case CanonicalName::W1:
        case CanonicalName::W2:
            vo.at = {{{10, 2, 4}, {8, 5, 3}, {7, 11, 0}, {1, 9, 6}}};
            break;
    }
    return vo;
}

using HalfEdgeOrder = std::array<int, kNumHalfEdges>;
using VertexNumbering = std::array<int, kNumVertices>;  // numbering[v] = position 0..3

inline VertexNumbering standard_numbering() { return {0, 1, 2, 3}; }

// Vertices in numbering order; within a vertex, the cyclic order linearized
// starting from its smallest half-edge id. The starting choice only moves the
// final comparison by 3-cycles, which are even.
inline HalfEdgeOrder order_from_vertices(const EdgeOrientedGraph& g, const VertexOrientation& vo,
                                         const VertexNumbering& numbering) {
    validate(g, vo);
    std::array<int, kNumVertices> vertex_at_position{};
    for (int v = 0; v < kNumVertices; ++v) vertex_at_position[numbering[v]] = v;
    HalfEdgeOrder order{};
    int n = 0;
    for (int pos = 0; pos < kNumVertices; ++pos) {
        const auto& cyc = vo.at[vertex_at_position[pos]];
        int start = 0;
        for (int i = 1; i < 3; ++i)
            if (cyc[i] < cyc[start]) start = i;
        for (int i = 0; i < 3; ++i) order[n++] = cyc[(start + i) % 3];
    }
    return order;
}

// Edges in the given order; within an edge, (first half, second half) per the
// edge-orientation. Whole pairs are even blocks, so the edge order does not
// affect the comparison signature.
inline HalfEdgeOrder order_from_edges(const EdgeOrientedGraph& g,
                                      const std::array<int, kNumEdges>& edge_order) {
    HalfEdgeOrder order{};
    int n = 0;
    for (int i = 0; i < kNumEdges; ++i) {
        int e = edge_order[i];
        order[n++] = g.first_half(e);
        order[n++] = g.second_half(e);
    }
    return order;
}

inline HalfEdgeOrder order_from_edges(const EdgeOrientedGraph& g) {
    std::array<int, kNumEdges> id{};
    std::iota(id.begin(), id.end(), 0);
    return order_from_edges(g, id);
}

// Signature of the permutation taking `from` to `to`, by cycle decomposition.
inline int permutation_sign_between(const HalfEdgeOrder& from, const HalfEdgeOrder& to) {
    std::array<int, kNumHalfEdges> pos_in_from{};
    pos_in_from.fill(-1);
    for (int i = 0; i < kNumHalfEdges; ++i) {
        if (from[i] < 0 || from[i] >= kNumHalfEdges || pos_in_from[from[i]] >= 0)
            throw std::invalid_argument("not a permutation of the half-edges");
        pos_in_from[from[i]] = i;
    }
    std::array<int, kNumHalfEdges> perm{};
    for (int i = 0; i < kNumHalfEdges; ++i) perm[i] = pos_in_from[to[i]];
    std::array<bool, kNumHalfEdges> seen{};
    int sign = 1;
    for (int i = 0; i < kNumHalfEdges; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int k = i; !seen[k]; k = perm[k]) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// +1 means the (edge-orientation, vertex-orientation) pair induces the same
// orientation on the configuration space as the vertex numbering.
inline int orientation_sign(const EdgeOrientedGraph& g, const VertexOrientation& vo,
                            const VertexNumbering& numbering) {
    return permutation_sign_between(order_from_vertices(g, vo, numbering), order_from_edges(g));
}

inline int orientation_sign(CanonicalName name) {
    auto g = canonical_graph(name);
    return orientation_sign(g, drawn_vertex_orientation(name), standard_numbering());
}

}  // namespace lambda2
