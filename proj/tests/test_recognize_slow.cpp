#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "bhelly/generators.hpp"
#include "bhelly/oracle.hpp"
#include "bhelly/recognize_slow.hpp"

using namespace bhelly;

namespace {

graph p4() { return build_graph({{0, 1}, {1, 2}, {2, 3}}, 4); }

graph petersen() {
    return build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}},
                       10);
}

}  // namespace

TEST_CASE("domination matrix") {
    SECTION("C4 records the higher-over-lower twin directions") {
        graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}}, 4);
        degree_ordering o = degree_order(g);
        domination_matrix dm = build_domination_matrix(g, o);
        REQUIRE(dom(dm, g, o, 2, 0));
        REQUIRE(dom(dm, g, o, 0, 2));
        REQUIRE(dom(dm, g, o, 3, 1));
        REQUIRE(dom(dm, g, o, 1, 3));
        REQUIRE_FALSE(dom(dm, g, o, 0, 1));
    }
    SECTION("P4 entries: 2 dominates 0 and 1 dominates 3") {
        graph g = p4();
        degree_ordering o = degree_order(g);
        domination_matrix dm = build_domination_matrix(g, o);
        int set_bits = 0;
        for (vertex a = 0; a < 4; ++a)
            for (vertex b = 0; b < 4; ++b)
                if (a != b && dom(dm, g, o, a, b)) ++set_bits;
        REQUIRE(set_bits == 2);
        REQUIRE(dom(dm, g, o, 2, 0));
        REQUIRE(dom(dm, g, o, 1, 3));
    }
    SECTION("matches the oracle on random graphs") {
        std::mt19937 rng(61);
        for (int rep = 0; rep < 60; ++rep) {
            int n = 4 + static_cast<int>(rng() % 9);
            graph g = oracle::random_gnp(n, 0.3, rng);
            degree_ordering o = degree_order(g);
            domination_matrix dm = build_domination_matrix(g, o);
            auto want = oracle::domination_pairs(g);
            std::set<std::pair<vertex, vertex>> ws(want.begin(), want.end());
            for (vertex a = 0; a < g.n; ++a)
                for (vertex b = 0; b < g.n; ++b)
                    if (a != b) REQUIRE(dom(dm, g, o, a, b) == ws.count({a, b}));
        }
    }
}

TEST_CASE("find_non_dominated_c4_slow") {
    SECTION("ladder fixture halts on the core cycle") {
        graph g = gen_ladder(1).to_graph();
        degree_ordering o = degree_order(g);
        domination_matrix dm = build_domination_matrix(g, o);
        auto w = find_non_dominated_c4_slow(g, o, dm);
        REQUIRE(w.has_value());
        REQUIRE(validate_witness(g, o, *w));
        std::set<vertex> verts(w->verts.begin(), w->verts.end());
        REQUIRE(verts == std::set<vertex>{0, 1, 2, 3});
    }
    SECTION("K2,3 and the lone C4 pass") {
        graph g1 = gen_complete_bipartite(2, 3).to_graph();
        degree_ordering o1 = degree_order(g1);
        REQUIRE_FALSE(find_non_dominated_c4_slow(g1, o1, build_domination_matrix(g1, o1)));
        graph g2 = gen_cycle(4).to_graph();
        degree_ordering o2 = degree_order(g2);
        REQUIRE_FALSE(find_non_dominated_c4_slow(g2, o2, build_domination_matrix(g2, o2)));
    }
    SECTION("agrees with the oracle on triangle-free graphs") {
        std::mt19937 rng(67);
        for (int rep = 0; rep < 150; ++rep) {
            int n = 5 + static_cast<int>(rng() % 6);
            graph g = oracle::random_gnp(n, 0.35, rng);
            if (oracle::find_triangle(g)) continue;
            degree_ordering o = degree_order(g);
            domination_matrix dm = build_domination_matrix(g, o);
            auto w = find_non_dominated_c4_slow(g, o, dm);
            REQUIRE(w.has_value() == oracle::find_non_dominated_c4(g).has_value());
            if (w) REQUIRE(validate_witness(g, o, *w));
        }
    }
}

TEST_CASE("find_induced_c5_slow") {
    SECTION("C5 found") {
        graph g = gen_cycle(5).to_graph();
        auto w = find_induced_c5_slow(g);
        REQUIRE(w.has_value());
        REQUIRE(validate_witness(g, degree_order(g), *w));
    }
    SECTION("bipartite graphs have none") {
        REQUIRE_FALSE(find_induced_c5_slow(gen_complete_bipartite(4, 4).to_graph()));
        REQUIRE_FALSE(find_induced_c5_slow(gen_cycle(6).to_graph()));
    }
    SECTION("Petersen graph has girth five") {
        graph g = petersen();
        auto w = find_induced_c5_slow(g);
        REQUIRE(w.has_value());
        REQUIRE(validate_witness(g, degree_order(g), *w));
    }
    SECTION("agrees with oracle 5-cycle existence on triangle-free graphs") {
        std::mt19937 rng(71);
        for (int rep = 0; rep < 150; ++rep) {
            int n = 5 + static_cast<int>(rng() % 6);
            graph g = oracle::random_gnp(n, 0.35, rng);
            if (oracle::find_triangle(g)) continue;
            REQUIRE(find_induced_c5_slow(g).has_value() == !oracle::cycles(g, 5, false).empty());
        }
    }
}

TEST_CASE("find_induced_c6_slow") {
    SECTION("C6 found") {
        graph g = gen_cycle(6).to_graph();
        degree_ordering o = degree_order(g);
        auto w = find_induced_c6_slow(g, o, build_domination_matrix(g, o));
        REQUIRE(w.has_value());
        REQUIRE(validate_witness(g, o, *w));
    }
    SECTION("C8 has no 6-cycle") {
        graph g = gen_cycle(8).to_graph();
        degree_ordering o = degree_order(g);
        REQUIRE_FALSE(find_induced_c6_slow(g, o, build_domination_matrix(g, o)));
    }
    SECTION("trees have none") {
        graph g = gen_tree(12, 3).to_graph();
        degree_ordering o = degree_order(g);
        REQUIRE_FALSE(find_induced_c6_slow(g, o, build_domination_matrix(g, o)));
    }
    SECTION("agrees with the oracle on triangle-free C4-dominated graphs") {
        std::mt19937 rng(73);
        int tested = 0;
        for (int rep = 0; rep < 400 && tested < 120; ++rep) {
            int n = 6 + static_cast<int>(rng() % 5);
            graph g = oracle::random_gnp(n, 0.3, rng);
            if (oracle::find_triangle(g) || !oracle::is_c4_dominated(g)) continue;
            ++tested;
            degree_ordering o = degree_order(g);
            auto w = find_induced_c6_slow(g, o, build_domination_matrix(g, o));
            REQUIRE(w.has_value() == !oracle::cycles(g, 6, true).empty());
            if (w) REQUIRE(validate_witness(g, o, *w));
        }
        REQUIRE(tested >= 50);
    }
}

TEST_CASE("recognize_hbh_slow") {
    SECTION("K2,3 is HBH") {
        REQUIRE(recognize_hbh_slow(gen_complete_bipartite(2, 3).to_graph()).is_hbh());
    }
    SECTION("C6 rejected with an InducedC6 witness") {
        auto r = recognize_hbh_slow(gen_cycle(6).to_graph());
        REQUIRE_FALSE(r.is_hbh());
        REQUIRE(r.wit->kind == witness_kind::induced_c6);
    }
    SECTION("ladder rejected with a NonDominatedC4 witness") {
        auto r = recognize_hbh_slow(gen_ladder(1).to_graph());
        REQUIRE_FALSE(r.is_hbh());
        REQUIRE(r.wit->kind == witness_kind::non_dominated_c4);
    }
    SECTION("matches the definitional oracle exhaustively at n = 5") {
        oracle::for_each_labeled_graph(5, [](const graph& g) {
            REQUIRE(recognize_hbh_slow(g).is_hbh() == oracle::is_hbh(g));
        });
    }
    SECTION("matches both oracles on 500 random graphs n <= 10") {
        std::mt19937 rng(79);
        for (int rep = 0; rep < 500; ++rep) {
            int n = 6 + static_cast<int>(rng() % 5);
            graph g = oracle::random_gnp(n, 0.25, rng);
            auto r = recognize_hbh_slow(g);
            REQUIRE(r.is_hbh() == oracle::is_hbh_characterization(g));
            if (r.wit) REQUIRE(validate_witness(g, degree_order(g), *r.wit));
        }
    }
}
