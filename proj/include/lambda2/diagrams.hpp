#pragma once

// The degree-two diagram space: connected trivalent multigraphs on four
// vertices (loops allowed) equipped with a vertex-orientation, modulo
// orientation-preserving isomorphism; the antisymmetry and Jacobi relations;
// the rank-one quotient; and the weight system w with w(tetrahedron) = 1 and
// w(double-theta) = 2. All coefficients are exact rationals.
//
// Representation: half-edges 0..11, vertex v owns slots {3v, 3v+1, 3v+2}.
// A diagram is a perfect matching `partner` plus one flag per vertex: flag 0
// means cyclic order (3v, 3v+1, 3v+2), flag 1 means (3v, 3v+2, 3v+1).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lambda2/graphs.hpp"
#include "lambda2/orient.hpp"
#include "lambda2/rational.hpp"

namespace lambda2 {

struct Diagram {
    std::array<int, 12> partner{};
    std::array<uint8_t, 4> flag{};

    static int vertex_of(int h) { return h / 3; }

    std::array<int, 3> cyclic(int v) const {
        int b = 3 * v;
        if (flag[v] == 0) return {b, b + 1, b + 2};
        return {b, b + 2, b + 1};
    }

    Diagram flipped_at(int v) const {
        Diagram d = *this;
        d.flag[v] ^= 1;
        return d;
    }

    bool is_loop(int h) const { return vertex_of(h) == vertex_of(partner[h]); }

    auto operator<=>(const Diagram&) const = default;
};

inline void validate(const Diagram& d) {
    for (int h = 0; h < 12; ++h) {
        int p = d.partner[h];
        if (p < 0 || p >= 12 || p == h || d.partner[p] != h)
            throw std::invalid_argument("partner is not a perfect matching");
    }
}

inline bool connected(const Diagram& d) {
    std::array<int, 4> root = {0, 1, 2, 3};
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (int h = 0; h < 12; ++h) {
        int a = find(Diagram::vertex_of(h)), b = find(Diagram::vertex_of(d.partner[h]));
        if (a != b) root[a] = b;
    }
    for (int v = 1; v < 4; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline bool has_loop(const Diagram& d) {
    for (int h = 0; h < 12; ++h)
        if (d.is_loop(h)) return true;
    return false;
}

// Formal rational combination of canonical diagram classes.
using DiagramVector = std::map<Diagram, rat>;

inline void add_term(DiagramVector& v, const Diagram& d, const rat& c) {
    auto it = v.find(d);
    if (it == v.end()) {
        if (c != 0) v.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) v.erase(it);
}

namespace diagdetail {

// Multiset of vertex pairs, minimized over vertex renamings: an isomorphism
// key for the underlying multigraph (cyclic orders ignored).
using UnderlyingKey = std::array<int, 6>;

inline UnderlyingKey underlying_key(const std::array<int, 12>& partner) {
    std::array<int, 4> perm = {0, 1, 2, 3};
    UnderlyingKey best{};
    bool first = true;
    do {
        UnderlyingKey k{};
        int n = 0;
        for (int h = 0; h < 12; ++h) {
            if (partner[h] < h) continue;
            int a = perm[Diagram::vertex_of(h)], b = perm[Diagram::vertex_of(partner[h])];
            if (a > b) std::swap(a, b);
            k[n++] = 4 * a + b;
        }
        std::sort(k.begin(), k.end());
        if (first || k < best) {
            best = k;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All half-edge bijections m1 -> m2 compatible with the vertex partition and
// the matchings (cyclic orders ignored). Backtracks vertex by vertex.
inline std::vector<std::array<int, 12>> structure_isos(const std::array<int, 12>& m1,
                                                       const std::array<int, 12>& m2,
                                                       bool first_only = false) {
    std::vector<std::array<int, 12>> out;
    std::array<int, 4> sigma = {0, 1, 2, 3};
    std::sort(sigma.begin(), sigma.end());
    do {
        std::array<int, 12> phi{};
        phi.fill(-1);
        std::array<std::array<int, 3>, 4> slotperm{};  // per-vertex slot assignment

        auto consistent = [&](int h) {
            int p1 = m1[h];
            if (phi[p1] < 0) return true;
            return m2[phi[h]] == phi[p1];
        };
        auto assign_vertex = [&](auto&& self, int v) -> void {
            if (v == 4) {
                out.push_back(phi);
                return;
            }
            std::array<int, 3> tgt = {3 * sigma[v], 3 * sigma[v] + 1, 3 * sigma[v] + 2};
            std::sort(tgt.begin(), tgt.end());
            do {
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    phi[3 * v + i] = tgt[i];
                    if (!consistent(3 * v + i)) ok = false;
                }
                if (ok) {
                    self(self, v + 1);
                    if (first_only && !out.empty()) {
                        for (int i = 0; i < 3; ++i) phi[3 * v + i] = -1;
                        return;
                    }
                }
                for (int i = 0; i < 3; ++i) phi[3 * v + i] = -1;
            } while (std::next_permutation(tgt.begin(), tgt.end()));
        };
        assign_vertex(assign_vertex, 0);
        if (first_only && !out.empty()) return out;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

// Parity of the 3-element map taking the sorted slots of a vertex to `seq`:
// even -> flag 0, odd -> flag 1.
inline uint8_t flag_of_sequence(const std::array<int, 3>& seq) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (seq[i] > seq[j]) ++inversions;
    return static_cast<uint8_t>(inversions & 1);
}

// Push a diagram through a structure bijection; flags transport by the parity
// of each image cyclic sequence.
inline Diagram transport(const Diagram& d, const std::array<int, 12>& phi,
                         const std::array<int, 12>& target_matching) {
    Diagram out;
    out.partner = target_matching;
    for (int v = 0; v < 4; ++v) {
        auto seq = d.cyclic(v);
        std::array<int, 3> img = {phi[seq[0]], phi[seq[1]], phi[seq[2]]};
        out.flag[Diagram::vertex_of(img[0])] = flag_of_sequence(img);
    }
    return out;
}

struct UnderlyingClass {
    std::array<int, 12> matching;                 // representative
    std::vector<std::array<int, 12>> automorphisms;  // structure autos of the rep
    long orbit_matchings;  // matchings isomorphic to the rep (orbit-stabilizer)
};

struct Universe {
    std::vector<UnderlyingClass> classes;
    std::map<UnderlyingKey, int> class_of_key;
    std::vector<Diagram> diagram_classes;  // canonical vertex-oriented classes
    long connected_matchings = 0;
};

inline std::vector<std::array<int, 12>> all_perfect_matchings() {
    std::vector<std::array<int, 12>> out;
    std::array<int, 12> m{};
    m.fill(-1);
    auto rec = [&](auto&& self) -> void {
        int h = 0;
        while (h < 12 && m[h] >= 0) ++h;
        if (h == 12) {
            out.push_back(m);
            return;
        }
        for (int k = h + 1; k < 12; ++k) {
            if (m[k] >= 0) continue;
            m[h] = k;
            m[k] = h;
            self(self);
            m[h] = m[k] = -1;
        }
    };
    rec(rec);
    return out;
}

inline const Universe& universe() {
    static const Universe u = [] {
        Universe u;
        for (const auto& m : all_perfect_matchings()) {
            Diagram probe{m, {0, 0, 0, 0}};
            if (!connected(probe)) continue;
            ++u.connected_matchings;
            auto key = underlying_key(m);
            if (!u.class_of_key.count(key)) {
                int idx = static_cast<int>(u.classes.size());
                u.class_of_key[key] = idx;
                UnderlyingClass c;
                c.matching = m;
                c.automorphisms = structure_isos(m, m);
                c.orbit_matchings = 0;
                u.classes.push_back(std::move(c));
            }
            ++u.classes[u.class_of_key[key]].orbit_matchings;
        }
        // canonical vertex-oriented classes: orbit minima of the 16 flag vectors
        for (const auto& c : u.classes) {
            std::vector<Diagram> seen;
            for (int flags = 0; flags < 16; ++flags) {
                Diagram d;
                d.partner = c.matching;
                for (int v = 0; v < 4; ++v) d.flag[v] = (flags >> v) & 1;
                Diagram best = d;
                for (const auto& phi : c.automorphisms) {
                    Diagram t = transport(d, phi, c.matching);
                    if (t < best) best = t;
                }
                if (std::find(seen.begin(), seen.end(), best) == seen.end()) seen.push_back(best);
            }
            std::sort(seen.begin(), seen.end());
            u.diagram_classes.insert(u.diagram_classes.end(), seen.begin(), seen.end());
        }
        return u;
    }();
    return u;
}

}  // namespace diagdetail

inline Diagram canonicalize(const Diagram& d) {
    validate(d);
    if (!connected(d)) throw std::invalid_argument("canonicalize: diagram is disconnected");
    const auto& u = diagdetail::universe();
    auto key = diagdetail::underlying_key(d.partner);
    auto it = u.class_of_key.find(key);
    if (it == u.class_of_key.end()) throw std::logic_error("unknown underlying class");
    const auto& cls = u.classes[it->second];
    auto iso = diagdetail::structure_isos(d.partner, cls.matching, /*first_only=*/true);
    if (iso.empty()) throw std::logic_error("no structure isomorphism to class representative");
    Diagram t = diagdetail::transport(d, iso.front(), cls.matching);
    Diagram best = t;
    for (const auto& phi : cls.automorphisms) {
        Diagram cand = diagdetail::transport(t, phi, cls.matching);
        if (cand < best) best = cand;
    }
    return best;
}

// All canonical vertex-oriented diagram classes (loops included).
inline const std::vector<Diagram>& enumerate_diagrams() { return diagdetail::universe().diagram_classes; }

// Independent count of the classes by Burnside's lemma on the flag action of
// each representative's automorphism group (oracle for enumerate_diagrams).
inline long count_diagram_classes_burnside() {
    const auto& u = diagdetail::universe();
    long total = 0;
    for (const auto& c : u.classes) {
        long fixed_sum = 0;
        for (const auto& phi : c.automorphisms) {
            for (int flags = 0; flags < 16; ++flags) {
                Diagram d;
                d.partner = c.matching;
                for (int v = 0; v < 4; ++v) d.flag[v] = (flags >> v) & 1;
                if (diagdetail::transport(d, phi, c.matching) == d) ++fixed_sum;
            }
        }
        if (fixed_sum % static_cast<long>(c.automorphisms.size()) != 0)
            throw std::logic_error("Burnside count is not integral");
        total += fixed_sum / static_cast<long>(c.automorphisms.size());
    }
    return total;
}

// Orbit-stabilizer cross-check: the matching orbits must tile the set of
// connected perfect matchings.
inline bool matchings_tile_by_orbit_stabilizer() {
    const auto& u = diagdetail::universe();
    long total = 0;
    for (const auto& c : u.classes) {
        long group = 24L * 6 * 6 * 6 * 6;
        if (group % static_cast<long>(c.automorphisms.size()) != 0) return false;
        if (c.orbit_matchings != group / static_cast<long>(c.automorphisms.size())) return false;
        total += c.orbit_matchings;
    }
    return total == u.connected_matchings;
}

// ---------------------------------------------------------------------------
// Relations.

// Antisymmetry: [d] + [d with one vertex's cyclic order reversed].
inline std::vector<DiagramVector> antisymmetry_relations() {
    std::vector<DiagramVector> out;
    for (const Diagram& d : enumerate_diagrams()) {
        for (int v = 0; v < 4; ++v) {
            DiagramVector rel;
            add_term(rel, canonicalize(d), 1);
            add_term(rel, canonicalize(d.flipped_at(v)), 1);
            if (std::find(out.begin(), out.end(), rel) == out.end()) out.push_back(rel);
        }
    }
    return out;
}

// Jacobi: for an oriented edge from z to v1 (half-edges e_bar at z, e1 at v1),
// write the cyclic orders as z = (e_bar, r, s) and v1 = (e1, p, q). The three
// terms of the relation rotate the far ends attached at the slots p, q, r
// while every cyclic order stays fixed. Terms with a disconnected graph do
// not define elements of the diagram space; such triples are skipped.
inline std::vector<DiagramVector> jacobi_relations() {
    std::vector<DiagramVector> out;
    auto rotate_once = [](const Diagram& d, int p, int q, int r) {
        auto move = [&](int slot) {
            if (slot == p) return r;
            if (slot == q) return p;
            if (slot == r) return q;
            return slot;
        };
        Diagram n = d;
        std::array<int, 12> np{};
        for (int h = 0; h < 12; ++h) np[move(h)] = move(d.partner[h]);
        n.partner = np;
        return n;
    };
    for (const Diagram& d : enumerate_diagrams()) {
        for (int e_bar = 0; e_bar < 12; ++e_bar) {
            int e1 = d.partner[e_bar];
            if (Diagram::vertex_of(e_bar) == Diagram::vertex_of(e1)) continue;  // loop
            int z = Diagram::vertex_of(e_bar), v1 = Diagram::vertex_of(e1);
            auto zc = d.cyclic(z);
            while (zc[0] != e_bar) std::rotate(zc.begin(), zc.begin() + 1, zc.end());
            auto vc = d.cyclic(v1);
            while (vc[0] != e1) std::rotate(vc.begin(), vc.begin() + 1, vc.end());
            int r = zc[1];  // the rotating slot at z; zc[2] is the stem
            int p = vc[1], q = vc[2];
            Diagram d2 = rotate_once(d, p, q, r);
            Diagram d3 = rotate_once(d2, p, q, r);
            if (!connected(d2) || !connected(d3)) continue;
            DiagramVector rel;
            add_term(rel, canonicalize(d), 1);
            add_term(rel, canonicalize(d2), 1);
            add_term(rel, canonicalize(d3), 1);
            if (std::find(out.begin(), out.end(), rel) == out.end()) out.push_back(rel);
        }
    }
    return out;
}

struct RelationSet {
    std::vector<DiagramVector> antisymmetry;
    std::vector<DiagramVector> jacobi;

    std::vector<DiagramVector> all() const {
        std::vector<DiagramVector> v = antisymmetry;
        v.insert(v.end(), jacobi.begin(), jacobi.end());
        return v;
    }
};

inline RelationSet relation_set() { return {antisymmetry_relations(), jacobi_relations()}; }

// ---------------------------------------------------------------------------
// The tetrahedron and double-theta classes carrying the drawn orientations of
// T1 and W1 (the classes on which w is pinned to 1 and 2).

inline Diagram diagram_from_graph(const EdgeOrientedGraph& g, const VertexOrientation& vo) {
    validate(g, vo);
    std::array<int, 12> slot_of{};  // graph half-edge -> diagram slot
    for (int v = 0; v < kNumVertices; ++v)
        for (int i = 0; i < 3; ++i) slot_of[vo.at[v][i]] = 3 * v + i;
    Diagram d;
    d.flag = {0, 0, 0, 0};
    for (int h = 0; h < kNumHalfEdges; ++h) d.partner[slot_of[h]] = slot_of[h ^ 1];
    return canonicalize(d);
}

inline Diagram tetrahedron_class() {
    return diagram_from_graph(canonical_graph(CanonicalName::T1),
                              drawn_vertex_orientation(CanonicalName::T1));
}

inline Diagram double_theta_class() {
    return diagram_from_graph(canonical_graph(CanonicalName::W1),
                              drawn_vertex_orientation(CanonicalName::W1));
}

// ---------------------------------------------------------------------------
// Quotient and weight system.

struct QuotientResult {
    int dimension = 0;
    std::optional<Diagram> basis;            // surviving class when dimension == 1
    std::map<Diagram, rat> expression;       // class -> coefficient on the basis
};

// Exact Gaussian elimination of the relation matrix. Columns are the diagram
// classes with the tetrahedron class placed last so it survives as the free
// variable when the quotient is one-dimensional.
inline QuotientResult quotient(const std::vector<DiagramVector>& relations) {
    const auto& classes = enumerate_diagrams();
    Diagram tetra = tetrahedron_class();
    std::vector<Diagram> cols;
    for (const auto& d : classes)
        if (!(d == tetra)) cols.push_back(d);
    cols.push_back(tetra);
    std::map<Diagram, int> col_of;
    for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<int>(i);

    const int C = static_cast<int>(cols.size());
    std::vector<std::vector<rat>> rows;
    for (const auto& rel : relations) {
        std::vector<rat> row(C, rat(0));
        for (const auto& [d, c] : rel) row[col_of.at(d)] = c;
        rows.push_back(std::move(row));
    }

    std::vector<int> pivot_row_of_col(C, -1);
    int rank = 0;
    for (int c = 0; c < C; ++c) {
        int pr = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            bool used = false;
            for (int cc = 0; cc < c; ++cc)
                if (pivot_row_of_col[cc] == static_cast<int>(r)) used = true;
            if (!used && rows[r][c] != 0) {
                pr = static_cast<int>(r);
                break;
            }
        }
        if (pr < 0) continue;
        pivot_row_of_col[c] = pr;
        ++rank;
        rat inv = rows[pr][c];
        for (int cc = 0; cc < C; ++cc) rows[pr][cc] /= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr || rows[r][c] == 0) continue;
            rat f = rows[r][c];
            for (int cc = 0; cc < C; ++cc) rows[r][cc] -= f * rows[pr][cc];
        }
    }

    QuotientResult q;
    q.dimension = C - rank;
    if (q.dimension == 1 && pivot_row_of_col[C - 1] < 0) {
        q.basis = cols[C - 1];
        for (int c = 0; c < C; ++c) {
            if (pivot_row_of_col[c] < 0) {
                q.expression[cols[c]] = 1;
            } else {
                q.expression[cols[c]] = -rows[pivot_row_of_col[c]][C - 1];
            }
        }
    }
    return q;
}

inline const QuotientResult& quotient_result() {
    static const QuotientResult q = quotient(relation_set().all());
    return q;
}

inline int quotient_dimension() { return quotient_result().dimension; }

// The linear form with w(tetrahedron) = 1 (hence w(double-theta) = 2).
inline rat weight(const Diagram& d) {
    const auto& q = quotient_result();
    if (q.dimension != 1 || !q.basis || !(*q.basis == tetrahedron_class()))
        throw std::logic_error("weight: quotient basis is not the tetrahedron class");
    Diagram c = canonicalize(d);
    auto it = q.expression.find(c);
    if (it == q.expression.end()) throw std::out_of_range("weight: diagram not in the enumerated universe");
    return it->second;
}

inline rat weight(const DiagramVector& v) {
    rat s = 0;
    for (const auto& [d, c] : v) s += c * weight(d);
    return s;
}

}  // namespace lambda2
