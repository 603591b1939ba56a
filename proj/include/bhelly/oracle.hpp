#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "bhelly/biclique.hpp"
#include "bhelly/graph.hpp"
#include "bhelly/witness.hpp"

// Brute-force reference implementations. Correct by inspection, used to pin
// expected values and to differential-test the real algorithms. Not fast.

namespace bhelly::oracle {

inline bool odominates(const graph& g, vertex v, vertex w) {
    for (vertex x : g.neighbors(w))
        if (!g.adjacent(v, x)) return false;
    return true;
}

/// All ordered pairs (v, w), v != w, with N(w) subseteq N(v).
inline std::vector<std::pair<vertex, vertex>> domination_pairs(const graph& g) {
    std::vector<std::pair<vertex, vertex>> out;
    for (vertex v = 0; v < g.n; ++v)
        for (vertex w = 0; w < g.n; ++w)
            if (v != w && odominates(g, v, w)) out.emplace_back(v, w);
    return out;
}

/// Every simple cycle of length k, canonicalized: starts at its minimum
/// vertex, second element smaller than the last (kills reflections).
inline std::vector<std::vector<vertex>> cycles(const graph& g, int k, bool induced) {
    std::vector<std::vector<vertex>> out;
    std::vector<vertex> path;
    std::vector<char> used(g.n, 0);
    std::function<void(vertex)> dfs = [&](vertex v) {
        if (static_cast<int>(path.size()) == k) {
            if (!g.adjacent(v, path[0])) return;
            if (path[1] > path[k - 1]) return;
            if (induced) {
                for (int i = 0; i < k; ++i)
                    for (int j = i + 2; j < k; ++j) {
                        if (i == 0 && j == k - 1) continue;
                        if (g.adjacent(path[i], path[j])) return;
                    }
            }
            out.push_back(path);
            return;
        }
        for (vertex w : g.neighbors(v)) {
            if (used[w] || w < path[0]) continue;
            used[w] = 1;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (vertex s = 0; s < g.n; ++s) {
        used[s] = 1;
        path.assign(1, s);
        dfs(s);
        used[s] = 0;
    }
    return out;
}

inline std::optional<witness> find_triangle(const graph& g) {
    for (auto& c : cycles(g, 3, false)) return witness{witness_kind::triangle, c};
    return std::nullopt;
}

/// First 4-cycle in which neither opposite pair is dom-comparable.
inline std::optional<witness> find_non_dominated_c4(const graph& g) {
    for (auto& c : cycles(g, 4, false)) {
        bool d1 = odominates(g, c[0], c[2]) || odominates(g, c[2], c[0]);
        bool d2 = odominates(g, c[1], c[3]) || odominates(g, c[3], c[1]);
        if (!d1 && !d2) return witness{witness_kind::non_dominated_c4, c};
    }
    return std::nullopt;
}

inline bool is_c4_dominated(const graph& g) { return !find_non_dominated_c4(g).has_value(); }

// ---- maximal bicliques ----------------------------------------------------

namespace detail {

inline std::vector<uint32_t> adj_masks(const graph& g) {
    std::vector<uint32_t> adj(g.n, 0);
    for (vertex v = 0; v < g.n; ++v)
        for (vertex w : g.neighbors(v)) adj[v] |= 1u << w;
    return adj;
}

inline void keep_maximal(std::vector<uint32_t>& sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<uint32_t> out;
    for (uint32_t s : sets) {
        bool max = true;
        for (uint32_t t : sets)
            if (t != s && (s & t) == s) { max = false; break; }
        if (max) out.push_back(s);
    }
    sets = std::move(out);
}

inline biclique split_biclique(const std::vector<uint32_t>& adj, int n, uint32_t s) {
    // 2-colour the induced complete bipartite subgraph
    biclique b;
    int first = -1;
    for (int v = 0; v < n; ++v)
        if (s >> v & 1) { first = v; break; }
    uint32_t side2 = adj[first] & s;
    uint32_t side1 = s & ~side2;
    for (int v = 0; v < n; ++v) {
        if (side1 >> v & 1) b.side1.push_back(v);
        if (side2 >> v & 1) b.side2.push_back(v);
    }
    b.canonicalize();
    return b;
}

// every (independent X, independent Y subseteq commonNbrs(X)) pair; complete
// for any graph but exponential, so n is capped by the caller
inline std::vector<uint32_t> biclique_sets_tiny(const std::vector<uint32_t>& adj, int n,
                                                uint32_t vmask) {
    std::vector<uint32_t> sets;
    std::vector<uint32_t> indep;
    for (uint32_t x = 1; x < (1u << n); ++x) {
        if ((x & vmask) != x) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (x >> v & 1 && (adj[v] & x)) ok = false;
        if (ok) indep.push_back(x);
    }
    for (uint32_t x : indep) {
        uint32_t common = vmask;
        for (int v = 0; v < n; ++v)
            if (x >> v & 1) common &= adj[v];
        if (!common) continue;
        for (uint32_t y = common;; y = (y - 1) & common) {
            if (y) {
                bool ok = true;
                for (int v = 0; v < n && ok; ++v)
                    if (y >> v & 1 && (adj[v] & y)) ok = false;
                if (ok) sets.push_back(x | y);
            }
            if (!y) break;
        }
    }
    keep_maximal(sets);
    return sets;
}

// triangle-free fast path: the other side is the full common neighborhood,
// which is automatically independent
inline std::vector<uint32_t> biclique_sets_triangle_free(const std::vector<uint32_t>& adj,
                                                         int n) {
    std::vector<uint32_t> sets;
    std::function<void(int, uint32_t, uint32_t)> rec = [&](int last, uint32_t x, uint32_t common) {
        sets.push_back(x | common);
        for (int w = last + 1; w < n; ++w) {
            if (adj[w] & x) continue;  // keeps X independent; also skips common members
            uint32_t c = common & adj[w];
            if (!c) continue;
            rec(w, x | (1u << w), c);
        }
    };
    for (int w = 0; w < n; ++w)
        if (adj[w]) rec(w, 1u << w, adj[w]);
    keep_maximal(sets);
    return sets;
}

}  // namespace detail

/// All maximal bicliques, canonicalized and sorted. Exhaustive for n <= 8;
/// for 8 < n <= 16 the input must be triangle-free.
inline std::vector<biclique> max_bicliques(const graph& g) {
    if (g.n > 16) throw std::invalid_argument("oracle max_bicliques: n > 16");
    auto adj = detail::adj_masks(g);
    std::vector<uint32_t> sets;
    if (g.n <= 8) {
        sets = detail::biclique_sets_tiny(adj, g.n, (1u << g.n) - 1);
    } else {
        if (find_triangle(g)) throw std::invalid_argument("oracle max_bicliques: n > 8 needs triangle-free input");
        sets = detail::biclique_sets_triangle_free(adj, g.n);
    }
    std::vector<biclique> out;
    out.reserve(sets.size());
    for (uint32_t s : sets) out.push_back(detail::split_biclique(adj, g.n, s));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- Helly property --------------------------------------------------------

/// Exhaustive subfamily check; family size must stay small.
inline bool helly_brute(const std::vector<uint32_t>& fam) {
    int f = static_cast<int>(fam.size());
    if (f > 20) throw std::invalid_argument("helly_brute: family too large");
    for (uint32_t sub = 1; sub < (1u << f); ++sub) {
        if (std::popcount(sub) < 3) continue;
        uint32_t inter = ~0u;
        bool pairwise = true;
        for (int i = 0; i < f && pairwise; ++i) {
            if (!(sub >> i & 1)) continue;
            inter &= fam[i];
            for (int j = i + 1; j < f; ++j)
                if (sub >> j & 1 && !(fam[i] & fam[j])) { pairwise = false; break; }
        }
        if (pairwise && !inter) return false;
    }
    return true;
}

/// Berge-Duchet test: Helly iff for every vertex triple, the members meeting
/// it in at least two points have a common element.
inline bool helly_berge_duchet(const std::vector<uint32_t>& fam, int n) {
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                uint32_t t = (1u << x) | (1u << y) | (1u << z);
                uint32_t inter = ~0u;
                bool any = false;
                for (uint32_t s : fam)
                    if (std::popcount(s & t) >= 2) { inter &= s; any = true; }
                if (any && !inter) return false;
            }
    return true;
}

inline bool helly(const std::vector<uint32_t>& fam, int n) {
    if (fam.size() <= 14) return helly_brute(fam);
    return helly_berge_duchet(fam, n);
}

// ---- hereditary biclique-Helly ---------------------------------------------

namespace detail {

inline bool biclique_helly_masked(const std::vector<uint32_t>& adj, int n, uint32_t vmask) {
    auto fam = biclique_sets_tiny(adj, n, vmask);
    return helly(fam, n);
}

}  // namespace detail

/// Definitional verdict: every induced subgraph's maximal-biclique family is
/// Helly. Exponential; n <= 8.
inline bool is_hbh_definitional(const graph& g) {
    if (g.n > 8) throw std::invalid_argument("is_hbh_definitional: n > 8");
    auto adj = detail::adj_masks(g);
    for (uint32_t vm = 1; vm < (1u << g.n); ++vm)
        if (!detail::biclique_helly_masked(adj, g.n, vm)) return false;
    return true;
}

// ---- induced subgraph search and the ladder fixtures -----------------------

/// Edge lists of the three minimal forbidden graphs built on a 4-cycle
/// 0,1,2,3 with private neighbors 4,5,6,7 of 0,1,2,3 respectively. Derived by
/// exhaustive minimal-forbidden search; validated by the oracle agreement
/// tests.
inline std::vector<std::pair<vertex, vertex>> ladder_edges(int which) {
    std::vector<std::pair<vertex, vertex>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                                {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    if (which == 2) e.emplace_back(4, 5);
    if (which == 3) { e.emplace_back(4, 7); e.emplace_back(5, 6); }
    return e;
}

/// Induced subgraph isomorphism by backtracking; pattern and host are small.
inline bool contains_induced(const graph& host, const graph& pat) {
    if (pat.n > host.n) return false;
    std::vector<vertex> map(pat.n, -1);
    std::vector<char> used(host.n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == pat.n) return true;
        for (vertex h = 0; h < host.n; ++h) {
            if (used[h] || host.degree(h) < pat.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (pat.adjacent(i, j) != host.adjacent(h, map[j])) ok = false;
            if (!ok) continue;
            map[i] = h;
            used[h] = 1;
            if (rec(i + 1)) return true;
            used[h] = 0;
            map[i] = -1;
        }
        return false;
    };
    return rec(0);
}

/// Forbidden-subgraph verdict: no triangle, no induced C5 or C6, no induced
/// ladder.
inline bool is_hbh_forbidden(const graph& g) {
    if (find_triangle(g)) return false;
    if (!cycles(g, 5, true).empty()) return false;
    if (!cycles(g, 6, true).empty()) return false;
    for (int which = 1; which <= 3; ++which) {
        graph lad = build_graph(ladder_edges(which), 8);
        if (contains_induced(g, lad)) return false;
    }
    return true;
}

/// Characterization-based verdict usable at any n: triangle-free, every C4
/// dominated, no induced C5 or C6.
inline bool is_hbh_characterization(const graph& g) {
    if (find_triangle(g)) return false;
    if (find_non_dominated_c4(g)) return false;
    if (!cycles(g, 5, true).empty()) return false;
    if (!cycles(g, 6, true).empty()) return false;
    return true;
}

/// Two independent verdicts that must agree; disagreement flags a bug.
inline bool is_hbh(const graph& g) {
    bool a = is_hbh_definitional(g);
    bool b = is_hbh_forbidden(g);
    if (a != b) throw std::logic_error("oracle is_hbh: route disagreement");
    return a;
}

// ---- catalogs ---------------------------------------------------------------

/// Calls fn with every labeled graph on n vertices (2^C(n,2) of them).
inline void for_each_labeled_graph(int n, const std::function<void(const graph&)>& fn) {
    std::vector<std::pair<vertex, vertex>> pairs;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    if (pairs.size() > 20) throw std::invalid_argument("exhaustive catalog too large");
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<vertex, vertex>> edges;
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) edges.push_back(pairs[k]);
        fn(build_graph(std::move(edges), n));
    }
}

inline graph random_gnp(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<vertex, vertex>> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return build_graph(std::move(edges), n);
}

}  // namespace bhelly::oracle
