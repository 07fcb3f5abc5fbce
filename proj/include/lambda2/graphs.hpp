#pragma once

// Half-edge model of the four edge-oriented trivalent graphs on vertices
// {1,2,3,4} and the labelled-graph combinatorics built on them: automorphisms,
// labelled isomorphism classes (the set D1), edge collapse and its fibers.
//
// Half-edge ids are 0..11. Edge k owns half-edges {2k, 2k+1}; the edge is
// directed from the vertex of first_half(k) to the vertex of second_half(k).
// In the tests and comments the half-edges are also referred to by the names
// a1,a2,b1,b2,...,f1,f2 (edge k = letter 'a'+k, half 2k = x1, 2k+1 = x2).

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda2 {

inline constexpr int kNumHalfEdges = 12;
inline constexpr int kNumEdges = 6;
inline constexpr int kNumVertices = 4;

struct EdgeOrientedGraph {
    std::array<int, kNumHalfEdges> vertex_of{};  // vertex id 0..3 per half-edge
    std::array<bool, kNumEdges> flipped{};       // orientation of edge k

    int first_half(int e) const { return 2 * e + (flipped[e] ? 1 : 0); }
    int second_half(int e) const { return 2 * e + (flipped[e] ? 0 : 1); }
    int tail(int e) const { return vertex_of[first_half(e)]; }
    int head(int e) const { return vertex_of[second_half(e)]; }
    static int edge_of(int h) { return h / 2; }
    static int partner(int h) { return h ^ 1; }

    std::array<std::vector<int>, kNumVertices> vertex_half_edges() const {
        std::array<std::vector<int>, kNumVertices> v;
        for (int h = 0; h < kNumHalfEdges; ++h) v[vertex_of[h]].push_back(h);
        return v;
    }

    // Number of edges joining the unordered pair {u, v}.
    int edges_between(int u, int v) const {
        int n = 0;
        for (int e = 0; e < kNumEdges; ++e) {
            int a = tail(e), b = head(e);
            if ((a == u && b == v) || (a == v && b == u)) ++n;
        }
        return n;
    }

    int out_degree(int v) const {
        int n = 0;
        for (int e = 0; e < kNumEdges; ++e)
            if (tail(e) == v) ++n;
        return n;
    }

    bool operator==(const EdgeOrientedGraph&) const = default;
};

inline void validate(const EdgeOrientedGraph& g) {
    std::array<int, kNumVertices> count{};
    for (int h = 0; h < kNumHalfEdges; ++h) {
        if (g.vertex_of[h] < 0 || g.vertex_of[h] >= kNumVertices)
            throw std::invalid_argument("half-edge assigned to invalid vertex");
        ++count[g.vertex_of[h]];
    }
    for (int v = 0; v < kNumVertices; ++v)
        if (count[v] != 3) throw std::invalid_argument("vertex is not trivalent");
    for (int e = 0; e < kNumEdges; ++e)
        if (g.tail(e) == g.head(e)) throw std::invalid_argument("looped edge");
}

inline bool connected(const EdgeOrientedGraph& g) {
    std::array<bool, kNumVertices> seen{};
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e = 0; e < kNumEdges; ++e) {
            int a = g.tail(e), b = g.head(e);
            int w = -1;
            if (a == v) w = b;
            if (b == v) w = a;
            if (w >= 0 && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

enum class CanonicalName { T1, T2, W1, W2, T_less };

inline const char* to_string(CanonicalName n) {
    switch (n) {
        case CanonicalName::T1: return "T1";
        case CanonicalName::T2: return "T2";
        case CanonicalName::W1: return "W1";
        case CanonicalName::W2: return "W2";
        case CanonicalName::T_less: return "T_less";
    }
    return "?";
}

inline std::optional<CanonicalName> parse_canonical_name(const std::string& s) {
    if (s == "T1") return CanonicalName::T1;
    if (s == "T2") return CanonicalName::T2;
    if (s == "W1") return CanonicalName::W1;
    if (s == "W2") return CanonicalName::W2;
    if (s == "T_less" || s == "T<") return CanonicalName::T_less;
    return std::nullopt;
}

// Vertex incidences transcribed from the printed vertex sets
//   V(T1) = {{c1,b1,f1},{a2,b2,e1},{e2,c2,d1},{d2,f2,a1}}
//   V(W1) = {{f1,b1,c1},{e1,c2,b2},{d2,f2,a1},{a2,e2,d1}}
// giving the directed edges
//   T1 = {a:4->2, b:1->2, c:1->3, d:3->4, e:2->3, f:1->4}
//   W1 = {a:3->4, b:1->2, c:1->2, d:4->3, e:2->4, f:1->3}.
inline EdgeOrientedGraph canonical_graph(CanonicalName name) {
    EdgeOrientedGraph g;
    switch (name) {
        case CanonicalName::T1:
        case CanonicalName::T2:
        case CanonicalName::T_less:
            //            a1 a2 b1 b2 c1 c2 d1 d2 e1 e2 f1 f2
            g.vertex_of = {3, 1, 0, 1, 0, 2, 2, 3, 1, 2, 0, 3};
            break;
        case CanonicalName::W1:
        case CanonicalName::W2:
            g.vertex_of = {2, 3, 0, 1, 0, 1, 3, 2, 1, 3, 0, 2};
            break;
    }
    if (name == CanonicalName::T2 || name == CanonicalName::W2) g.flipped.fill(true);
    if (name == CanonicalName::T_less) g.flipped[0] = true;  // a becomes 2->4
    return g;
}

inline EdgeOrientedGraph reverse_edges(EdgeOrientedGraph g, const std::bitset<kNumEdges>& subset) {
    for (int e = 0; e < kNumEdges; ++e)
        if (subset[e]) g.flipped[e] = !g.flipped[e];
    return g;
}

inline EdgeOrientedGraph reverse_all_edges(const EdgeOrientedGraph& g) {
    return reverse_edges(g, std::bitset<kNumEdges>().set());
}

// A half-edge bijection compatible with the edge and vertex partitions.
struct HalfEdgeMap {
    std::array<int, kNumHalfEdges> h{};

    int edge_image(int e) const { return h[2 * e] / 2; }
    std::array<int, kNumEdges> edge_perm() const {
        std::array<int, kNumEdges> p{};
        for (int e = 0; e < kNumEdges; ++e) p[e] = edge_image(e);
        return p;
    }
    bool operator==(const HalfEdgeMap&) const = default;
};

namespace detail {

// All isomorphisms g1 -> g2 as half-edge bijections. With respect_orientation
// the first half-edge of an edge must map to the first half-edge of its image.
inline std::vector<HalfEdgeMap> isomorphisms(const EdgeOrientedGraph& g1,
                                             const EdgeOrientedGraph& g2,
                                             bool respect_orientation) {
    std::vector<HalfEdgeMap> result;
    std::array<int, kNumVertices> perm = {0, 1, 2, 3};
    do {
        // assign edges under vertex permutation `perm`
        std::array<int, kNumEdges> edge_image{};
        std::array<bool, kNumEdges> taken{};
        edge_image.fill(-1);
        taken.fill(false);

        auto backtrack = [&](auto&& self, int e) -> void {
            if (e == kNumEdges) {
                HalfEdgeMap m;
                for (int k = 0; k < kNumEdges; ++k) {
                    int ki = edge_image[k];
                    if (respect_orientation) {
                        m.h[g1.first_half(k)] = g2.first_half(ki);
                        m.h[g1.second_half(k)] = g2.second_half(ki);
                    } else {
                        // sides determined by vertex images; parallel edges between
                        // the same pair are handled because tail != head
                        int t1 = g1.tail(k);
                        if (g2.vertex_of[g2.first_half(ki)] == perm[t1]) {
                            m.h[g1.first_half(k)] = g2.first_half(ki);
                            m.h[g1.second_half(k)] = g2.second_half(ki);
                        } else {
                            m.h[g1.first_half(k)] = g2.second_half(ki);
                            m.h[g1.second_half(k)] = g2.first_half(ki);
                        }
                    }
                }
                result.push_back(m);
                return;
            }
            int t = perm[g1.tail(e)], h = perm[g1.head(e)];
            for (int ei = 0; ei < kNumEdges; ++ei) {
                if (taken[ei]) continue;
                bool ok = respect_orientation
                              ? (g2.tail(ei) == t && g2.head(ei) == h)
                              : ((g2.tail(ei) == t && g2.head(ei) == h) ||
                                 (g2.tail(ei) == h && g2.head(ei) == t));
                if (!ok) continue;
                taken[ei] = true;
                edge_image[e] = ei;
                self(self, e + 1);
                taken[ei] = false;
            }
        };
        backtrack(backtrack, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

}  // namespace detail

inline std::vector<HalfEdgeMap> automorphisms(const EdgeOrientedGraph& g, bool respect_orientation) {
    return detail::isomorphisms(g, g, respect_orientation);
}

// A labelling assigns the labels 0..5 bijectively to the edges 0..5.
// (Rendered as 1..6 at the serialization boundary.)
struct Labeling {
    std::array<int, kNumEdges> of_edge{};

    int edge_with_label(int l) const {
        for (int e = 0; e < kNumEdges; ++e)
            if (of_edge[e] == l) return e;
        throw std::out_of_range("label not present");
    }
    static Labeling identity() {
        Labeling j;
        std::iota(j.of_edge.begin(), j.of_edge.end(), 0);
        return j;
    }
    // Pullback along an edge permutation: (j * p)[e] = j[p[e]].
    Labeling composed_with(const std::array<int, kNumEdges>& edge_perm) const {
        Labeling r;
        for (int e = 0; e < kNumEdges; ++e) r.of_edge[e] = of_edge[edge_perm[e]];
        return r;
    }
    auto operator<=>(const Labeling&) const = default;
};

inline std::vector<Labeling> all_labelings() {
    std::vector<Labeling> out;
    out.reserve(720);
    Labeling j = Labeling::identity();
    std::array<int, kNumEdges> p = j.of_edge;
    do {
        Labeling l;
        l.of_edge = p;
        out.push_back(l);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Witness for an isomorphism of labelled edge-oriented graphs: a half-edge
// bijection compatible with orientations such that labels transport (j2 o f = j1).
inline std::optional<HalfEdgeMap> labeled_isomorphic(const EdgeOrientedGraph& g1, const Labeling& j1,
                                                     const EdgeOrientedGraph& g2, const Labeling& j2) {
    for (const HalfEdgeMap& m : detail::isomorphisms(g1, g2, /*respect_orientation=*/true)) {
        bool ok = true;
        for (int e = 0; e < kNumEdges && ok; ++e)
            if (j2.of_edge[m.edge_image(e)] != j1.of_edge[e]) ok = false;
        if (ok) return m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// D1: isomorphism classes of labelled T1 and labelled W1.

enum class Shape { T, W };

inline CanonicalName shape_graph_name(Shape s) { return s == Shape::T ? CanonicalName::T1 : CanonicalName::W1; }

struct D1Class {
    Shape shape;
    Labeling canon;  // lexicographically minimal labelling in the orbit
    auto operator<=>(const D1Class&) const = default;
};

namespace detail {

inline const std::vector<std::array<int, kNumEdges>>& oriented_aut_edge_perms(Shape s) {
    static const auto make = [](Shape sh) {
        std::vector<std::array<int, kNumEdges>> perms;
        auto g = canonical_graph(shape_graph_name(sh));
        for (const auto& m : automorphisms(g, true)) perms.push_back(m.edge_perm());
        return perms;
    };
    static const std::vector<std::array<int, kNumEdges>> t = make(Shape::T);
    static const std::vector<std::array<int, kNumEdges>> w = make(Shape::W);
    return s == Shape::T ? t : w;
}

}  // namespace detail

inline D1Class d1_class_of(Shape shape, const Labeling& j) {
    Labeling best = j;
    for (const auto& p : detail::oriented_aut_edge_perms(shape)) {
        Labeling cand = j.composed_with(p);
        if (cand < best) best = cand;
    }
    return D1Class{shape, best};
}

// All member labellings of a class (3 for T classes, 2 for W classes).
inline std::vector<Labeling> d1_class_members(const D1Class& c) {
    std::vector<Labeling> out;
    for (const auto& p : detail::oriented_aut_edge_perms(c.shape)) {
        Labeling cand = c.canon.composed_with(p);
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    return out;
}

inline std::vector<D1Class> enumerate_D1() {
    std::vector<D1Class> out;
    for (Shape s : {Shape::T, Shape::W}) {
        std::vector<D1Class> classes;
        for (const Labeling& j : all_labelings()) classes.push_back(d1_class_of(s, j));
        std::sort(classes.begin(), classes.end());
        classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Edge collapse.

// A labelled edge-oriented multigraph on 3 vertices with 5 edges, as a list of
// (tail, head, label) triples. `raw` keeps the deterministic construction
// order (merged vertex = 0); `canonical_key` minimizes over vertex renamings.
struct CollapsedGraph {
    std::vector<std::array<int, 3>> edges;  // (tail, head, label), vertices 0..2

    std::vector<std::array<int, 3>> canonical_key() const {
        std::array<int, 3> perm = {0, 1, 2};
        std::vector<std::array<int, 3>> best;
        do {
            std::vector<std::array<int, 3>> cand;
            cand.reserve(edges.size());
            for (const auto& e : edges) cand.push_back({perm[e[0]], perm[e[1]], e[2]});
            std::sort(cand.begin(), cand.end());
            if (best.empty() || cand < best) best = cand;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    std::map<int, int> valences() const {
        std::map<int, int> v;
        for (const auto& e : edges) {
            ++v[e[0]];
            ++v[e[1]];
        }
        return v;
    }
};

// Precondition checker used by collapse: the pair {tail(e), head(e)} spans e alone.
inline bool is_one_edge(const EdgeOrientedGraph& g, int e) {
    return g.edges_between(g.tail(e), g.head(e)) == 1;
}

inline CollapsedGraph collapse_edge(const EdgeOrientedGraph& g, const Labeling& j, int e) {
    if (!is_one_edge(g, e))
        throw std::invalid_argument("collapse_edge: edge is part of a parallel pair");
    int u = g.tail(e), v = g.head(e);
    // merged vertex becomes 0, remaining vertices keep ascending order as 1, 2
    std::array<int, kNumVertices> relabel{};
    relabel.fill(-1);
    relabel[u] = relabel[v] = 0;
    int next = 1;
    for (int w = 0; w < kNumVertices; ++w)
        if (relabel[w] < 0) relabel[w] = next++;
    CollapsedGraph c;
    for (int k = 0; k < kNumEdges; ++k) {
        if (k == e) continue;
        c.edges.push_back({relabel[g.tail(k)], relabel[g.head(k)], j.of_edge[k]});
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

enum class EdgeType { type_one, type_two };

// The unique vertex that is the tail of three edges (v1 in T1 and W1).
inline int source_of_three(const EdgeOrientedGraph& g) {
    int found = -1;
    for (int v = 0; v < kNumVertices; ++v) {
        if (g.out_degree(v) == 3) {
            if (found >= 0) throw std::logic_error("multiple source-of-three vertices");
            found = v;
        }
    }
    if (found < 0) throw std::logic_error("no source-of-three vertex");
    return found;
}

inline EdgeType edge_type(const EdgeOrientedGraph& g, int e) {
    if (!is_one_edge(g, e)) throw std::invalid_argument("edge_type: not a one-edge");
    int v1 = source_of_three(g);
    return (g.tail(e) == v1 || g.head(e) == v1) ? EdgeType::type_two : EdgeType::type_one;
}

namespace detail {

// Identify an arbitrary 12-half-edge graph as a labelled T1 or W1 and return
// its D1 class, or nullopt if it is neither.
inline std::optional<D1Class> classify_labeled(const EdgeOrientedGraph& g, const Labeling& j) {
    for (Shape s : {Shape::T, Shape::W}) {
        auto target = canonical_graph(shape_graph_name(s));
        auto isos = detail::isomorphisms(g, target, /*respect_orientation=*/true);
        if (isos.empty()) continue;
        // transport labels: j'(psi(e)) = j(e)
        const HalfEdgeMap& psi = isos.front();
        Labeling jt;
        for (int e = 0; e < kNumEdges; ++e) jt.of_edge[psi.edge_image(e)] = j.of_edge[e];
        return d1_class_of(s, jt);
    }
    return std::nullopt;
}

}  // namespace detail

// The c_l fiber through a class of D1(l): collapse the edge labelled l, then
// re-attach the new vertex pair in all ways that give back a labelled T1 or
// W1. The lemmas on one-edge faces say the result has exactly 3 classes.
inline std::vector<D1Class> collapse_fiber(const D1Class& cls, int label) {
    EdgeOrientedGraph g = canonical_graph(shape_graph_name(cls.shape));
    const Labeling& j = cls.canon;
    int e = j.edge_with_label(label);
    if (!is_one_edge(g, e))
        throw std::invalid_argument("collapse_fiber: class not in D1(l)");
    int u = g.tail(e), v = g.head(e);
    std::vector<int> merged;
    for (int h = 0; h < kNumHalfEdges; ++h)
        if (h / 2 != e && (g.vertex_of[h] == u || g.vertex_of[h] == v)) merged.push_back(h);
    // merged has 4 half-edges; choose the 2 that sit on the tail side
    std::vector<D1Class> fiber;
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 2) continue;
        EdgeOrientedGraph cand = g;
        for (size_t i = 0; i < merged.size(); ++i)
            cand.vertex_of[merged[i]] = (mask >> i) & 1 ? u : v;
        cand.vertex_of[g.first_half(e)] = u;
        cand.vertex_of[g.second_half(e)] = v;
        auto cls2 = detail::classify_labeled(cand, j);
        if (!cls2) continue;
        if (std::find(fiber.begin(), fiber.end(), *cls2) == fiber.end()) fiber.push_back(*cls2);
    }
    std::sort(fiber.begin(), fiber.end());
    return fiber;
}

}  // namespace lambda2
