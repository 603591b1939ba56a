#pragma once

#include <cassert>
#include <optional>
#include <variant>
#include <vector>

#include "bhelly/graph.hpp"
#include "bhelly/recognize_slow.hpp"
#include "bhelly/squares.hpp"
#include "bhelly/witness.hpp"

namespace bhelly {

/// Unsafe domination digraph: out-degree is at most one and an edge a -> b
/// means b dominates a, so edges ascend in the degree ordering.
struct u_digraph {
    std::vector<vertex> out;  // -1 = no out-neighbor
    long long edges = 0;
};

struct safe_pair {
    vertex high, low;
};

struct u_build {
    u_digraph u;
    std::vector<safe_pair> safe;         // safe triples (v, w), processing order
    std::vector<uint8_t> singleton_low;  // x appeared as a one-element L(S)
    long long triples = 0, sum_common = 0;
};

/// Single descending sweep that classifies every squares triple as safe or
/// unsafe without a domination matrix. Unsafe triples must chain consecutive
/// dominations along L(S); the first failure is a non-dominated C4. Safeness
/// of (v, w) is decided from |L| = d^<(w) plus reachability of v from w in
/// the partial U, so no subset test is spent on safe triples.
/// Triangle-free input assumed.
inline std::variant<u_build, witness> build_u_digraph(const graph& g,
                                                      const degree_ordering& o) {
    u_build ub;
    ub.u.out.assign(g.n, -1);
    ub.singleton_low.assign(g.n, 0);
    std::vector<std::vector<vertex>> inlist(g.n);
    std::vector<int> inpos(g.n, -1);
    std::vector<uint8_t> unsafe_flag(g.n, 0);
    std::vector<int> reach_stamp(g.n, -1);
    std::vector<vertex> stack;

    squares_stream st(g, o);
    while (st.next()) {
        vertex v = st.current();
        reach_stamp[v] = v;
        stack.assign(1, v);
        while (!stack.empty()) {
            vertex x = stack.back();
            stack.pop_back();
            for (vertex a : inlist[x])
                if (reach_stamp[a] != v) {
                    reach_stamp[a] = v;
                    stack.push_back(a);
                }
        }
        const vertex_squares& sq = st.triples();
        for (int t = 0; t < sq.count(); ++t) {
            vertex w = sq.lows[t];
            auto l = sq.common(t);
            if (l.size() == 1) ub.singleton_low[l[0]] = 1;
            bool safe = static_cast<int>(l.size()) == st.remaining_degree(w) &&
                        (!unsafe_flag[w] || reach_stamp[w] == v);
            if (safe) {
                ub.safe.push_back({v, w});
                continue;
            }
            for (size_t j = 0; j + 1 < l.size(); ++j) {
                vertex b = l[j], a = l[j + 1];  // a < b, consecutive in L(S)
                if (ub.u.out[a] == b) continue;
                if (ub.u.out[a] != -1 || !dominates(g, o, b, a))
                    return witness{witness_kind::non_dominated_c4, {v, a, w, b}};
                ub.u.out[a] = b;
                inpos[a] = static_cast<int>(inlist[b].size());
                inlist[b].push_back(a);
                ub.u.edges++;
            }
            for (vertex x : l) unsafe_flag[x] = 1;
        }
        // v retires next; drop vertices whose last remaining neighbor is v
        // from their in-list so REACH traversals touch live vertices only
        for (vertex u : g.neighbors(v)) {
            if (st.remaining_degree(u) == 1 && ub.u.out[u] != -1 && inpos[u] != -1) {
                auto& lst = inlist[ub.u.out[u]];
                vertex last = lst.back();
                lst[inpos[u]] = last;
                inpos[last] = inpos[u];
                lst.pop_back();
                inpos[u] = -1;
            }
        }
    }
    ub.triples = st.total_triples();
    ub.sum_common = st.total_common();
    return ub;
}

/// sigma(v) = minimum out-neighbor of v in S(G) = U(G) plus one edge w -> v
/// per safe (v, w); -1 encodes bottom, which compares above every vertex.
struct sigma_labels {
    std::vector<vertex> sigma;
};

inline sigma_labels build_sigma(const graph&, const degree_ordering& o, const u_build& ub) {
    sigma_labels s;
    s.sigma = ub.u.out;
    for (auto [hi, lo] : ub.safe) {
        vertex& cur = s.sigma[lo];
        if (cur == -1 || o.rank[hi] < o.rank[cur]) cur = hi;
    }
    return s;
}

namespace detail {

// sigma rank with bottom above all real ranks
inline int sigma_key(const degree_ordering& o, const sigma_labels& s, int n, vertex x) {
    return s.sigma[x] == -1 ? n : o.rank[s.sigma[x]];
}

// Per-vertex copies of the adjacency lists re-sorted by descending sigma key
// (bottom first), with group ranges X(v, w) = {z in N(v) | sigma(z) = w}
// reachable in O(1) from the reverse adjacency slot.
struct sigma_groups {
    std::vector<vertex> nbr;     // 2m, CSR-aligned with g.off
    std::vector<int> xr_begin;   // by slot (z -> v): range of X(v, sigma(z))
    std::vector<int> xr_end;

    void build(const graph& g, const degree_ordering& o, const sigma_labels& s) {
        int n = g.n;
        long long slots = 2 * g.m;
        nbr.assign(slots, -1);
        xr_begin.assign(slots, 0);
        xr_end.assign(slots, 0);
        std::vector<std::vector<int>> bucket(n + 1);
        std::vector<int> owner(slots);
        for (vertex v = 0; v < n; ++v)
            for (int k = g.off[v]; k < g.off[v + 1]; ++k) {
                owner[k] = v;
                bucket[sigma_key(o, s, n, g.nbr[k])].push_back(k);
            }
        std::vector<int> cur(g.off.begin(), g.off.end() - 1);
        std::vector<int> orig(slots);
        for (int key = n; key >= 0; --key)
            for (int k : bucket[key]) {
                int p = cur[owner[k]]++;
                nbr[p] = g.nbr[k];
                orig[p] = k;
            }
        for (vertex v = 0; v < n; ++v) {
            int b = g.off[v];
            while (b < g.off[v + 1]) {
                int key = sigma_key(o, s, n, nbr[b]);
                int e = b;
                while (e < g.off[v + 1] && sigma_key(o, s, n, nbr[e]) == key) ++e;
                for (int p = b; p < e; ++p) {
                    int rev = g.cross[orig[p]];  // slot of (z -> v)
                    xr_begin[rev] = b;
                    xr_end[rev] = e;
                }
                b = e;
            }
        }
    }
};

}  // namespace detail

/// Induced C5 search using sigma: per top vertex, candidates are distance-2
/// vertices below the top whose sigma lies above it; an edge between two
/// candidates closes a 5-cycle, induced because the graph is triangle-free.
/// Input must be triangle-free and C4-dominated.
inline std::optional<witness> find_induced_c5_fast(const graph& g, const degree_ordering& o,
                                                   const sigma_labels& s) {
    std::vector<int> n1(g.n, -1), n2(g.n, -1);
    std::vector<vertex> parent(g.n, -1);
    std::vector<vertex> cand;
    for (int r = g.n - 1; r >= 0; --r) {
        vertex v = o.order[r];
        for (vertex w1 : g.neighbors(v))
            if (o.rank[w1] < r) n1[w1] = r;
        cand.clear();
        for (vertex w1 : g.neighbors(v)) {
            if (n1[w1] != r) continue;
            for (vertex u : g.neighbors(w1)) {
                if (o.rank[u] >= r || detail::sigma_key(o, s, g.n, u) <= r) continue;
                if (n2[u] == r) continue;
                n2[u] = r;
                parent[u] = w1;
                cand.push_back(u);
            }
        }
        for (vertex v2 : cand)
            for (vertex z : g.neighbors(v2))
                if (n2[z] == r)
                    return witness{witness_kind::induced_c5, {v, parent[v2], v2, z, parent[z]}};
    }
    return std::nullopt;
}

/// Induced C6 search: per top vertex v, a middle vertex w3 found in both
/// X(w2, sigma(w1)) and X(w4, sigma(w5)) for distinct carriers w2 != w4 in N2
/// closes an induced 6-cycle. Each group is traversed at most once per top
/// vertex and each vertex can carry at most two marks before the search
/// halts. Input must be triangle-free and C4-dominated.
inline std::optional<witness> find_induced_c6_fast(const graph& g, const degree_ordering& o,
                                                   const sigma_labels& s) {
    detail::sigma_groups sg;
    sg.build(g, o, s);
    std::vector<int> n1(g.n, -1), n2(g.n, -1), mark_stamp(g.n, -1);
    std::vector<int> group_stamp(2 * g.m, -1);
    std::vector<vertex> mark_w1(g.n, -1), mark_w2(g.n, -1);
    for (int r = g.n - 1; r >= 0; --r) {
        vertex v = o.order[r];
        for (vertex w1 : g.neighbors(v))
            if (o.rank[w1] < r) n1[w1] = r;
        for (vertex w1 : g.neighbors(v)) {
            if (n1[w1] != r) continue;
            for (vertex w2 : g.neighbors(w1))
                if (o.rank[w2] < r && detail::sigma_key(o, s, g.n, w2) > r) n2[w2] = r;
        }
        for (vertex w1 : g.neighbors(v)) {
            if (n1[w1] != r) continue;
            for (int k = g.off[w1]; k < g.off[w1 + 1]; ++k) {
                vertex w2 = g.nbr[k];
                if (n2[w2] != r) continue;
                int b = sg.xr_begin[k], e = sg.xr_end[k];  // X(w2, sigma(w1))
                if (group_stamp[b] == r) continue;
                group_stamp[b] = r;
                for (int p = b; p < e; ++p) {
                    vertex w3 = sg.nbr[p];
                    if (n1[w3] == r) continue;
                    if (mark_stamp[w3] == r) {
                        if (mark_w2[w3] == w2) continue;
                        assert(mark_w1[w3] != w1);
                        return witness{witness_kind::induced_c6,
                                       {v, mark_w1[w3], mark_w2[w3], w3, w2, w1}};
                    }
                    mark_stamp[w3] = r;
                    mark_w1[w3] = w1;
                    mark_w2[w3] = w2;
                }
            }
        }
    }
    return std::nullopt;
}

/// Fast pipeline: triangle, non-dominated C4 (building U), sigma, induced C5,
/// induced C6. First witness wins.
inline recognition_result recognize_hbh_fast(const graph& g) {
    degree_ordering o = degree_order(g);
    if (auto t = find_triangle(g, o)) return {t};
    auto built = build_u_digraph(g, o);
    if (std::holds_alternative<witness>(built)) return {std::get<witness>(built)};
    const u_build& ub = std::get<u_build>(built);
    sigma_labels s = build_sigma(g, o, ub);
    if (auto c5 = find_induced_c5_fast(g, o, s)) return {c5};
    if (auto c6 = find_induced_c6_fast(g, o, s)) return {c6};
    return {std::nullopt};
}

}  // namespace bhelly
