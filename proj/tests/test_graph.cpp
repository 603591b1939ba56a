#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bhelly/graph.hpp"
#include "bhelly/oracle.hpp"
#include "bhelly/twins.hpp"

using namespace bhelly;

namespace {

graph p4() { return build_graph({{0, 1}, {1, 2}, {2, 3}}, 4); }
graph c4() { return build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4); }

}  // namespace

TEST_CASE("build_graph basics") {
    SECTION("empty graph") {
        graph g = build_graph({}, 3);
        REQUIRE(g.n == 3);
        REQUIRE(g.m == 0);
        for (vertex v = 0; v < 3; ++v) REQUIRE(g.degree(v) == 0);
    }
    SECTION("duplicate and reversed mentions coalesce") {
        graph g = build_graph({{0, 1}, {1, 0}, {0, 1}}, 2);
        REQUIRE(g.m == 1);
        REQUIRE(g.degree(0) == 1);
        REQUIRE(g.degree(1) == 1);
    }
    SECTION("path degrees") {
        graph g = p4();
        REQUIRE(g.degree(0) == 1);
        REQUIRE(g.degree(1) == 2);
        REQUIRE(g.degree(2) == 2);
        REQUIRE(g.degree(3) == 1);
    }
    SECTION("self-loop rejected with the vertex named") {
        REQUIRE_THROWS_WITH(build_graph({{2, 2}}, 3),
                            Catch::Matchers::ContainsSubstring("2"));
    }
    SECTION("out-of-range id rejected") {
        REQUIRE_THROWS_AS(build_graph({{0, 5}}, 3), std::invalid_argument);
    }
}

TEST_CASE("degree ordering") {
    SECTION("star center is the unique maximum") {
        graph g = build_graph({{0, 1}, {0, 2}, {0, 3}}, 4);
        degree_ordering o = degree_order(g);
        REQUIRE(o.order[3] == 0);
    }
    SECTION("P4 ids break degree ties: 0 < 3 < 1 < 2") {
        degree_ordering o = degree_order(p4());
        REQUIRE(o.order == std::vector<vertex>{0, 3, 1, 2});
    }
    SECTION("regular C4 orders by id") {
        degree_ordering o = degree_order(c4());
        REQUIRE(o.order == std::vector<vertex>{0, 1, 2, 3});
    }
    SECTION("rank respects degrees on random graphs") {
        std::mt19937 rng(7);
        for (int rep = 0; rep < 50; ++rep) {
            graph g = oracle::random_gnp(12, 0.3, rng);
            degree_ordering o = degree_order(g);
            for (int r = 0; r + 1 < g.n; ++r)
                REQUIRE(g.degree(o.order[r]) <= g.degree(o.order[r + 1]));
        }
    }
}

TEST_CASE("adjacency is rank-descending and cross-links round-trip") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        graph g = oracle::random_gnp(14, 0.35, rng);
        degree_ordering o = degree_order(g);
        for (vertex v = 0; v < g.n; ++v) {
            auto nv = g.neighbors(v);
            for (size_t i = 0; i + 1 < nv.size(); ++i)
                REQUIRE(o.rank[nv[i]] > o.rank[nv[i + 1]]);
        }
        for (vertex v = 0; v < g.n; ++v)
            for (int k = g.off[v]; k < g.off[v + 1]; ++k) {
                int rev = g.cross[k];
                REQUIRE(g.nbr[rev] == v);
                REQUIRE(g.cross[rev] == k);
            }
    }
}

TEST_CASE("dominates") {
    degree_ordering o4 = degree_order(p4());
    SECTION("P4: 2 dominates 0") {
        graph g = p4();
        REQUIRE(dominates(g, o4, 2, 0));
        REQUIRE_FALSE(dominates(g, o4, 0, 2));
    }
    SECTION("C4 opposite corners dominate both ways") {
        graph g = c4();
        degree_ordering o = degree_order(g);
        REQUIRE(dominates(g, o, 0, 2));
        REQUIRE(dominates(g, o, 2, 0));
        REQUIRE(dominates(g, o, 1, 3));
        REQUIRE(dominates(g, o, 3, 1));
    }
    SECTION("adjacent vertices never dominate") {
        std::mt19937 rng(3);
        for (int rep = 0; rep < 20; ++rep) {
            graph g = oracle::random_gnp(10, 0.4, rng);
            degree_ordering o = degree_order(g);
            for (vertex v = 0; v < g.n; ++v)
                for (vertex w : g.neighbors(v)) REQUIRE_FALSE(dominates(g, o, v, w));
        }
    }
    SECTION("agrees with the oracle subset check up to n = 64") {
        std::mt19937 rng(5);
        for (int rep = 0; rep < 25; ++rep) {
            int n = 4 + static_cast<int>(rng() % 61);
            graph g = oracle::random_gnp(n, 2.5 / n, rng);
            degree_ordering o = degree_order(g);
            for (vertex v = 0; v < g.n; ++v)
                for (vertex w = 0; w < g.n; ++w)
                    if (v != w) REQUIRE(dominates(g, o, v, w) == oracle::odominates(g, v, w));
        }
    }
    SECTION("transitive") {
        std::mt19937 rng(9);
        for (int rep = 0; rep < 20; ++rep) {
            graph g = oracle::random_gnp(10, 0.3, rng);
            degree_ordering o = degree_order(g);
            for (vertex a = 0; a < g.n; ++a)
                for (vertex b = 0; b < g.n; ++b)
                    for (vertex c = 0; c < g.n; ++c) {
                        if (a == b || b == c || a == c) continue;
                        if (dominates(g, o, a, b) && dominates(g, o, b, c))
                            REQUIRE(dominates(g, o, a, c));
                    }
        }
    }
}

TEST_CASE("reduce_twins") {
    SECTION("K2,3 collapses to a single edge") {
        graph g = build_graph({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, 5);
        twin_partition p = reduce_twins(g);
        REQUIRE(p.classes.size() == 2);
        REQUIRE(p.quotient.n == 2);
        REQUIRE(p.quotient.m == 1);
        REQUIRE(p.classes[0] == std::vector<vertex>{0, 1});
        REQUIRE(p.classes[1] == std::vector<vertex>{2, 3, 4});
    }
    SECTION("twin-free graph maps to itself") {
        graph g = p4();
        twin_partition p = reduce_twins(g);
        REQUIRE(p.classes.size() == 4);
        REQUIRE(p.quotient.m == g.m);
    }
    SECTION("isolated vertices form one class") {
        graph g = build_graph({}, 3);
        twin_partition p = reduce_twins(g);
        REQUIRE(p.classes.size() == 1);
        REQUIRE(p.classes[0].size() == 3);
    }
    SECTION("quotient is twin-free and sizes add up") {
        std::mt19937 rng(13);
        for (int rep = 0; rep < 40; ++rep) {
            graph g = oracle::random_gnp(11, 0.3, rng);
            twin_partition p = reduce_twins(g);
            size_t total = 0;
            for (auto& c : p.classes) total += c.size();
            REQUIRE(static_cast<int>(total) == g.n);
            twin_partition q2 = reduce_twins(p.quotient);
            REQUIRE(q2.classes.size() == p.classes.size());
            // membership matches the oracle: same class iff equal neighborhoods
            for (vertex v = 0; v < g.n; ++v)
                for (vertex w = v + 1; w < g.n; ++w) {
                    bool same = p.class_of[v] == p.class_of[w];
                    bool twins = oracle::odominates(g, v, w) && oracle::odominates(g, w, v);
                    REQUIRE(same == twins);
                }
        }
    }
}

TEST_CASE("expand_biclique") {
    graph g = build_graph({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}, 5);
    twin_partition p = reduce_twins(g);
    SECTION("quotient edge of K2,3 expands to the whole graph") {
        biclique b{{0}, {1}};
        biclique e = expand_biclique(p, b);
        REQUIRE(e.side1 == std::vector<vertex>{0, 1});
        REQUIRE(e.side2 == std::vector<vertex>{2, 3, 4});
    }
    SECTION("singleton classes expand to themselves") {
        graph h = p4();
        twin_partition q = reduce_twins(h);
        biclique b{{1}, {0, 2}};
        biclique e = expand_biclique(q, b);
        e.canonicalize();
        biclique want{{0, 2}, {1}};
        want.canonicalize();
        REQUIRE(e == want);
    }
}
