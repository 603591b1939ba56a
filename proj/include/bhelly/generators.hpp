#pragma once

#include <random>
#include <stdexcept>
#include <string>

#include "bhelly/edge_io.hpp"
#include "bhelly/oracle.hpp"

namespace bhelly {

namespace detail {

inline edge_list_doc doc_from_edges(std::vector<std::pair<vertex, vertex>> edges, int n,
                                    int label_base = 0) {
    edge_list_doc d;
    d.n = n;
    d.edges = std::move(edges);
    for (int i = 0; i < n; ++i) d.labels.push_back(std::to_string(i + label_base));
    return d;
}

}  // namespace detail

inline edge_list_doc gen_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<std::pair<vertex, vertex>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return detail::doc_from_edges(std::move(e), k);
}

inline edge_list_doc gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete-bipartite needs both sides >= 1");
    std::vector<std::pair<vertex, vertex>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return detail::doc_from_edges(std::move(e), a + b);
}

inline edge_list_doc gen_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    std::mt19937 rng(static_cast<uint32_t>(seed));
    std::vector<std::pair<vertex, vertex>> e;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        e.emplace_back(pick(rng), i);
    }
    return detail::doc_from_edges(std::move(e), n);
}

/// The three minimal forbidden graphs on the 4-cycle 1,2,3,4 with private
/// neighbors 5,6,7,8; labels are 1-based.
inline edge_list_doc gen_ladder(int which) {
    if (which < 1 || which > 3) throw std::invalid_argument("ladder index must be 1, 2 or 3");
    return detail::doc_from_edges(oracle::ladder_edges(which), 8, 1);
}

/// First ladder plus an apex adjacent to two opposite corners of the core
/// 4-cycle; the cycle stays non-dominated yet every maximal biclique is some
/// B(v). Labels are 1-based.
inline edge_list_doc gen_fig2() {
    auto e = oracle::ladder_edges(1);
    e.emplace_back(8, 1);
    e.emplace_back(8, 3);
    return detail::doc_from_edges(std::move(e), 9, 1);
}

inline edge_list_doc gen_random_bipartite(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random-bipartite needs n >= 1");
    std::mt19937 rng(static_cast<uint32_t>(seed));
    std::bernoulli_distribution coin(p);
    int a = n / 2;
    std::vector<std::pair<vertex, vertex>> e;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return detail::doc_from_edges(std::move(e), n);
}

/// Random in-class instance: a random tree whose vertices are blown up into
/// twin classes. Every cycle of the blowup is a dominated 4-cycle through a
/// twin pair, so the result has no triangles and no induced C5 or C6. Class
/// sizes 2..6 put the edge count near 4n.
inline edge_list_doc gen_random_hbh(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random-hbh needs n >= 1");
    std::mt19937 rng(static_cast<uint32_t>(seed));
    std::uniform_int_distribution<int> csize(2, 6);
    std::vector<std::vector<vertex>> cls;
    int used = 0;
    while (used < n) {
        int k = std::min(csize(rng), n - used);
        cls.emplace_back();
        for (int i = 0; i < k; ++i) cls.back().push_back(used++);
    }
    int q = static_cast<int>(cls.size());
    std::vector<std::pair<vertex, vertex>> e;
    for (int i = 1; i < q; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        int par = pick(rng);
        for (vertex x : cls[i])
            for (vertex y : cls[par]) e.emplace_back(x, y);
    }
    return detail::doc_from_edges(std::move(e), n);
}

/// Twin-free in-class instance: disjoint chains of nested neighborhoods,
/// v_i ~ {u_1..u_i} inside each component. Every C4 diagonal is a nested
/// pair, so all 4-cycles are dominated; chain length 15 gives m = 4n.
inline edge_list_doc gen_nested_chains(int components, int chain_len) {
    if (components < 1 || chain_len < 1)
        throw std::invalid_argument("nested-chains needs positive parameters");
    std::vector<std::pair<vertex, vertex>> e;
    int n = 0;
    for (int c = 0; c < components; ++c) {
        int base_v = n, base_u = n + chain_len;
        for (int i = 0; i < chain_len; ++i)
            for (int j = 0; j <= i; ++j) e.emplace_back(base_v + i, base_u + j);
        n += 2 * chain_len;
    }
    return detail::doc_from_edges(std::move(e), n);
}

}  // namespace bhelly
