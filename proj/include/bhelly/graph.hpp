#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bhelly {

using vertex = int;

/// Total order on vertices where v < w only if d(v) <= d(w).
/// Ties broken by ascending vertex id, so the order is unique.
struct degree_ordering {
    std::vector<int> rank;     // vertex -> position in the order
    std::vector<vertex> order; // position -> vertex

    bool less(vertex a, vertex b) const { return rank[a] < rank[b]; }
};

/// Immutable simple graph in CSR form. Every adjacency list is sorted by
/// descending rank of the degree ordering, and cross[k] gives, for the entry
/// (v -> w) at slot k, the slot of the reverse entry (w -> v).
struct graph {
    int n = 0;
    long long m = 0;
    std::vector<int> off;     // n + 1
    std::vector<vertex> nbr;  // 2m
    std::vector<int> cross;   // 2m

    int degree(vertex v) const { return off[v + 1] - off[v]; }

    std::span<const vertex> neighbors(vertex v) const {
        return {nbr.data() + off[v], nbr.data() + off[v + 1]};
    }

    bool adjacent(vertex v, vertex w) const {
        for (vertex z : neighbors(v))
            if (z == w) return true;
        return false;
    }
};

inline degree_ordering degree_order(const graph& g) {
    degree_ordering o;
    o.order.resize(g.n);
    o.rank.resize(g.n);
    // counting sort by degree, ids ascending within a degree bucket
    std::vector<int> cnt(g.n + 1, 0);
    for (vertex v = 0; v < g.n; ++v) cnt[g.degree(v)]++;
    int acc = 0;
    for (int d = 0; d <= g.n; ++d) {
        int c = cnt[d];
        cnt[d] = acc;
        acc += c;
    }
    for (vertex v = 0; v < g.n; ++v) o.order[cnt[g.degree(v)]++] = v;
    for (int r = 0; r < g.n; ++r) o.rank[o.order[r]] = r;
    return o;
}

/// Builds the graph from an arbitrary edge list. Duplicate and reversed edge
/// mentions are coalesced; self-loops and out-of-range ids are rejected.
inline graph build_graph(std::vector<std::pair<vertex, vertex>> edges, int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    graph g;
    g.n = n;
    g.m = static_cast<long long>(edges.size());
    g.off.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        g.off[u + 1]++;
        g.off[v + 1]++;
    }
    for (int v = 0; v < n; ++v) g.off[v + 1] += g.off[v];

    // raw CSR, then rewrite each list in descending rank order by sweeping
    // the vertices from the largest rank down
    std::vector<int> cur(g.off.begin(), g.off.end() - 1);
    std::vector<vertex> raw(2 * g.m);
    for (auto [u, v] : edges) {
        raw[cur[u]++] = v;
        raw[cur[v]++] = u;
    }
    graph tmp;  // degrees only
    tmp.n = n;
    tmp.off = g.off;
    degree_ordering o = degree_order(tmp);

    g.nbr.resize(2 * g.m);
    cur.assign(g.off.begin(), g.off.end() - 1);
    for (int r = n - 1; r >= 0; --r) {
        vertex w = o.order[r];
        for (int k = g.off[w]; k < g.off[w + 1]; ++k) {
            vertex v = raw[k];
            g.nbr[cur[v]++] = w;
        }
    }

    g.cross.resize(2 * g.m);
    for (vertex v = 0; v < n; ++v) {
        for (int k = g.off[v]; k < g.off[v + 1]; ++k) {
            vertex w = g.nbr[k];
            // v sits in N(w) at the unique slot holding rank(v)
            auto begin = g.nbr.begin() + g.off[w];
            auto end = g.nbr.begin() + g.off[w + 1];
            auto it = std::lower_bound(begin, end, v, [&](vertex a, vertex b) {
                return o.rank[a] > o.rank[b];
            });
            g.cross[k] = static_cast<int>(it - g.nbr.begin());
        }
    }
    return g;
}

/// True iff N(w) is a subset of N(v). Merge scan over the rank-sorted lists.
inline bool dominates(const graph& g, const degree_ordering& o, vertex v, vertex w) {
    auto nv = g.neighbors(v);
    auto nw = g.neighbors(w);
    if (nw.size() > nv.size()) return false;
    size_t i = 0;
    for (vertex x : nw) {
        while (i < nv.size() && o.rank[nv[i]] > o.rank[x]) ++i;
        if (i == nv.size() || nv[i] != x) return false;
        ++i;
    }
    return true;
}

}  // namespace bhelly
