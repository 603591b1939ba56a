#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "bhelly/generators.hpp"
#include "bhelly/oracle.hpp"
#include "bhelly/squares.hpp"

using namespace bhelly;

namespace {

std::vector<vertex> canon_cycle(std::vector<vertex> c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
}

// all 4-cycles represented by the stream's triples, canonicalized
std::vector<std::vector<vertex>> cycles_from_triples(const graph& g, const degree_ordering& o) {
    std::vector<std::vector<vertex>> out;
    squares_stream st(g, o);
    while (st.next()) {
        vertex v = st.current();
        const vertex_squares& sq = st.triples();
        for (int t = 0; t < sq.count(); ++t) {
            auto l = sq.common(t);
            for (size_t i = 0; i < l.size(); ++i)
                for (size_t j = i + 1; j < l.size(); ++j)
                    out.push_back(canon_cycle({v, l[i], sq.lows[t], l[j]}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("find_triangle") {
    SECTION("K3") {
        graph g = build_graph({{0, 1}, {1, 2}, {0, 2}}, 3);
        auto w = find_triangle(g, degree_order(g));
        REQUIRE(w.has_value());
        REQUIRE(validate_witness(g, degree_order(g), *w));
    }
    SECTION("bipartite graphs have none") {
        graph g = gen_complete_bipartite(3, 4).to_graph();
        REQUIRE_FALSE(find_triangle(g, degree_order(g)).has_value());
    }
    SECTION("fig2 fixture is triangle-free") {
        graph g = gen_fig2().to_graph();
        REQUIRE_FALSE(find_triangle(g, degree_order(g)).has_value());
    }
    SECTION("agrees with the oracle exhaustively at n = 5 and on random n <= 64") {
        oracle::for_each_labeled_graph(5, [](const graph& g) {
            REQUIRE(find_triangle(g, degree_order(g)).has_value() ==
                    oracle::find_triangle(g).has_value());
        });
        std::mt19937 rng(41);
        for (int rep = 0; rep < 200; ++rep) {
            int n = 4 + static_cast<int>(rng() % 61);
            graph g = oracle::random_gnp(n, 2.0 / n, rng);
            REQUIRE(find_triangle(g, degree_order(g)).has_value() ==
                    oracle::find_triangle(g).has_value());
        }
    }
}

TEST_CASE("squares_of examples") {
    SECTION("C4: one triple with both low corners") {
        graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4);
        degree_ordering o = degree_order(g);
        vertex top = o.order[3];
        auto ts = squares_of(g, o, top);
        REQUIRE(ts.size() == 1);
        REQUIRE(ts[0].common.size() == 2);
        // low vertex is the corner opposite the top
        REQUIRE_FALSE(g.adjacent(top, ts[0].low));
        for (vertex x = 0; x < 4; ++x)
            if (x != top) {
                size_t total = 0;
                for (auto& t : squares_of(g, o, x)) total += t.common.size();
                if (x != top) REQUIRE(total == 0);
            }
    }
    SECTION("star has no triples at all") {
        graph g = build_graph({{0, 1}, {0, 2}, {0, 3}}, 4);
        degree_ordering o = degree_order(g);
        for (vertex v = 0; v < 4; ++v) REQUIRE(squares_of(g, o, v).empty());
    }
    SECTION("P4 yields exactly (2, 0, {1})") {
        graph g = build_graph({{0, 1}, {1, 2}, {2, 3}}, 4);
        degree_ordering o = degree_order(g);
        long long total = 0;
        for (vertex v = 0; v < 4; ++v) total += static_cast<long long>(squares_of(g, o, v).size());
        REQUIRE(total == 1);
        auto ts = squares_of(g, o, 2);
        REQUIRE(ts.size() == 1);
        REQUIRE(ts[0].low == 0);
        REQUIRE(ts[0].common == std::vector<vertex>{1});
    }
}

TEST_CASE("stream structure and agreement with squares_of") {
    std::mt19937 rng(43);
    for (int rep = 0; rep < 80; ++rep) {
        int n = 4 + static_cast<int>(rng() % 10);
        graph g = oracle::random_gnp(n, 0.35, rng);
        if (oracle::find_triangle(g)) continue;
        degree_ordering o = degree_order(g);
        squares_stream st(g, o);
        int steps = 0;
        while (st.next()) {
            ++steps;
            vertex v = st.current();
            auto want = squares_of(g, o, v);
            const vertex_squares& got = st.triples();
            REQUIRE(static_cast<size_t>(got.count()) == want.size());
            for (int t = 0; t < got.count(); ++t) {
                REQUIRE(got.lows[t] == want[t].low);
                auto l = got.common(t);
                REQUIRE(std::vector<vertex>(l.begin(), l.end()) == want[t].common);
                // invariants: low < high, common nonempty, descending, below high
                REQUIRE(o.rank[got.lows[t]] < o.rank[v]);
                REQUIRE_FALSE(l.empty());
                for (size_t i = 0; i + 1 < l.size(); ++i)
                    REQUIRE(o.rank[l[i]] > o.rank[l[i + 1]]);
                for (vertex a : l) {
                    REQUIRE(o.rank[a] < o.rank[v]);
                    REQUIRE(g.adjacent(a, v));
                    REQUIRE(g.adjacent(a, got.lows[t]));
                }
            }
        }
        REQUIRE(steps == g.n);
    }
}

TEST_CASE("triples represent every 4-cycle exactly once") {
    SECTION("exhaustive n = 5") {
        oracle::for_each_labeled_graph(5, [](const graph& g) {
            if (oracle::find_triangle(g)) return;
            degree_ordering o = degree_order(g);
            auto have = cycles_from_triples(g, o);
            auto want = oracle::cycles(g, 4, false);
            for (auto& c : want) c = canon_cycle(c);
            std::sort(want.begin(), want.end());
            REQUIRE(have == want);
        });
    }
    SECTION("random n <= 10") {
        std::mt19937 rng(47);
        for (int rep = 0; rep < 100; ++rep) {
            int n = 6 + static_cast<int>(rng() % 5);
            graph g = oracle::random_gnp(n, 0.3, rng);
            if (oracle::find_triangle(g)) continue;
            degree_ordering o = degree_order(g);
            auto have = cycles_from_triples(g, o);
            auto want = oracle::cycles(g, 4, false);
            for (auto& c : want) c = canon_cycle(c);
            std::sort(want.begin(), want.end());
            REQUIRE(have == want);
        }
    }
    SECTION("two disjoint C4s give two multi-element triples") {
        graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}},
                              8);
        degree_ordering o = degree_order(g);
        squares_stream st(g, o);
        int wide = 0;
        while (st.next())
            for (int t = 0; t < st.triples().count(); ++t)
                if (st.triples().common(t).size() >= 2) ++wide;
        REQUIRE(wide == 2);
    }
}

TEST_CASE("sum of |L| respects the neighborhood bound") {
    std::mt19937 rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 8 + static_cast<int>(rng() % 20);
        graph g = oracle::random_gnp(n, 2.5 / n, rng);
        if (oracle::find_triangle(g)) continue;
        degree_ordering o = degree_order(g);
        squares_stream st(g, o);
        while (st.next()) {}
        long long bound = 0;
        for (vertex v = 0; v < g.n; ++v)
            for (vertex w : g.neighbors(v))
                if (o.rank[w] < o.rank[v]) bound += g.degree(w);
        REQUIRE(st.total_common() <= bound);
    }
}
