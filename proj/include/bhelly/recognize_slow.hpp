#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhelly/graph.hpp"
#include "bhelly/squares.hpp"
#include "bhelly/witness.hpp"

namespace bhelly {

/// n x n bit table over ranks; bit (i, j) set iff i > j and order[i]
/// dominates order[j]. A lower vertex can dominate a higher one only when the
/// two are twins, in which case the mirrored bit is set and degrees tie, so
/// dom() recovers every direction.
struct domination_matrix {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> bits;

    bool bit(int ri, int rj) const {
        return bits[static_cast<size_t>(ri) * words + (rj >> 6)] >> (rj & 63) & 1;
    }
};

inline domination_matrix build_domination_matrix(const graph& g, const degree_ordering& o) {
    domination_matrix dm;
    dm.n = g.n;
    dm.words = (g.n + 63) / 64;
    dm.bits.assign(static_cast<size_t>(g.n) * dm.words, 0);
    for (int ri = 1; ri < g.n; ++ri) {
        vertex v = o.order[ri];
        for (int rj = 0; rj < ri; ++rj) {
            if (dominates(g, o, v, o.order[rj]))
                dm.bits[static_cast<size_t>(ri) * dm.words + (rj >> 6)] |= 1ull << (rj & 63);
        }
    }
    return dm;
}

/// Does a dominate b, answered from the matrix.
inline bool dom(const domination_matrix& dm, const graph& g, const degree_ordering& o,
                vertex a, vertex b) {
    int ra = o.rank[a], rb = o.rank[b];
    if (ra > rb) return dm.bit(ra, rb);
    return dm.bit(rb, ra) && g.degree(a) == g.degree(b);
}

inline bool dom_comparable(const domination_matrix& dm, const graph& g,
                           const degree_ordering& o, vertex a, vertex b) {
    return dom(dm, g, o, a, b) || dom(dm, g, o, b, a);
}

/// Walks the squares family; for each unsafe triple checks the consecutive
/// dominations along L(S). Domination is transitive, so a failing pair is the
/// non-dominated cycle and no failure means every represented C4 is dominated.
/// Triangle-free input assumed.
inline std::optional<witness> find_non_dominated_c4_slow(const graph& g,
                                                         const degree_ordering& o,
                                                         const domination_matrix& dm) {
    squares_stream st(g, o);
    while (st.next()) {
        vertex v = st.current();
        const vertex_squares& sq = st.triples();
        for (int t = 0; t < sq.count(); ++t) {
            vertex w = sq.lows[t];
            if (dom(dm, g, o, v, w)) continue;  // safe triple
            auto l = sq.common(t);
            for (size_t j = 0; j + 1 < l.size(); ++j)
                if (!dm.bit(o.rank[l[j]], o.rank[l[j + 1]]))
                    return witness{witness_kind::non_dominated_c4, {v, l[j], w, l[j + 1]}};
        }
    }
    return std::nullopt;
}

/// Per-vertex depth-2 search: an edge between two distance-2 vertices closes
/// a 5-cycle, which in a triangle-free graph is automatically induced.
inline std::optional<witness> find_induced_c5_slow(const graph& g) {
    degree_ordering o = degree_order(g);
    std::vector<int> dist2(g.n, -1);
    std::vector<int> dist1(g.n, -1);
    std::vector<vertex> parent(g.n, -1);
    for (int r = g.n - 1; r >= 0; --r) {
        vertex v = o.order[r];
        std::vector<vertex> layer;
        for (vertex a : g.neighbors(v)) dist1[a] = v;
        // ascending rank over N(v) so parents are the minimum of N(v, w)
        auto nv = g.neighbors(v);
        for (auto it = nv.rbegin(); it != nv.rend(); ++it) {
            vertex a = *it;
            for (vertex w : g.neighbors(a)) {
                if (w == v || dist1[w] == v) continue;
                if (dist2[w] == v) continue;
                dist2[w] = v;
                parent[w] = a;
                layer.push_back(w);
            }
        }
        for (vertex w : layer)
            for (vertex z : g.neighbors(w))
                if (dist2[z] == v)
                    return witness{witness_kind::induced_c5, {v, parent[w], w, z, parent[z]}};
    }
    return std::nullopt;
}

/// Per-vertex search for an induced 6-cycle through w0: distance-2 vertices
/// that do not dominate w0, keyed by p(w2) = min N(w0, w2); a middle vertex
/// adjacent to two of them with non-comparable p values closes the cycle.
/// Candidates are sorted by p so only consecutive pairs need checking.
/// Input must be triangle-free and C4-dominated.
inline std::optional<witness> find_induced_c6_slow(const graph& g, const degree_ordering& o,
                                                   const domination_matrix& dm) {
    std::vector<int> in_n2(g.n, -1);
    std::vector<vertex> p(g.n, -1);
    std::vector<int> nbr_mark(g.n, -1);
    for (int r = g.n - 1; r >= 0; --r) {
        vertex w0 = o.order[r];
        std::vector<vertex> n2;
        for (vertex x : g.neighbors(w0)) nbr_mark[x] = w0;
        auto nv = g.neighbors(w0);
        for (auto it = nv.rbegin(); it != nv.rend(); ++it) {  // ascending rank
            vertex w1 = *it;
            for (vertex w2 : g.neighbors(w1)) {
                if (w2 == w0 || in_n2[w2] == w0) continue;
                in_n2[w2] = w0;
                p[w2] = w1;  // first hit is min N(w0, w2)
                n2.push_back(w2);
            }
        }
        // drop candidates dominating w0
        std::vector<vertex> filtered;
        for (vertex w2 : n2)
            if (!dom(dm, g, o, w2, w0)) filtered.push_back(w2);
            else in_n2[w2] = -1;
        for (vertex w3 = 0; w3 < g.n; ++w3) {
            if (w3 == w0 || nbr_mark[w3] == w0) continue;
            std::vector<vertex> cand;
            for (vertex u : g.neighbors(w3))
                if (in_n2[u] == w0) cand.push_back(u);
            if (cand.size() < 2) continue;
            std::sort(cand.begin(), cand.end(), [&](vertex a, vertex b) {
                if (p[a] != p[b]) return o.rank[p[a]] < o.rank[p[b]];
                return a < b;
            });
            for (size_t i = 0; i + 1 < cand.size(); ++i) {
                vertex a = cand[i], b = cand[i + 1];
                if (p[a] == p[b]) continue;
                if (dom_comparable(dm, g, o, p[a], p[b])) continue;
                return witness{witness_kind::induced_c6, {w0, p[a], a, w3, b, p[b]}};
            }
        }
    }
    return std::nullopt;
}

struct recognition_result {
    std::optional<witness> wit;
    bool is_hbh() const { return !wit.has_value(); }
};

/// Baseline pipeline: triangle, then non-dominated C4, then induced C5, then
/// induced C6. Each stage relies on the previous ones having passed.
inline recognition_result recognize_hbh_slow(const graph& g) {
    degree_ordering o = degree_order(g);
    if (auto t = find_triangle(g, o)) return {t};
    domination_matrix dm = build_domination_matrix(g, o);
    if (auto c4 = find_non_dominated_c4_slow(g, o, dm)) return {c4};
    if (auto c5 = find_induced_c5_slow(g)) return {c5};
    if (auto c6 = find_induced_c6_slow(g, o, dm)) return {c6};
    return {std::nullopt};
}

}  // namespace bhelly
