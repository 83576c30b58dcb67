#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "generators.hpp"
#include "pairfree/canonical.hpp"
#include "pairfree/chromatic.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/matching.hpp"
#include "pairfree/named.hpp"

using namespace pairfree;

namespace {

ChiOracle o3_oracle() {
    return [](const Graph& x) {
        Coloring c = color_O3_free(x);
        return ChromaticResult{c.k, c};
    };
}

ChiOracle chordal_oracle() {
    return [](const Graph& x) {
        Coloring c = color_chordal(x);
        return ChromaticResult{c.k, c};
    };
}

int max_clique_brute(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    std::function<void(int, std::vector<int>&)> rec = [&](int start, std::vector<int>& cur) {
        best = std::max(best, (int)cur.size());
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur) ok = ok && g.has_edge(u, v);
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(0, cur);
    return best;
}

} // namespace

TEST_CASE("chromatic_exact examples") {
    CHECK(chromatic_exact(named_graph("K5")).chi == 5);
    CHECK(chromatic_exact(named_graph("C7")).chi == 3);
    CHECK(chromatic_exact(testutil::petersen()).chi == 3);
    CHECK_FALSE(k_color(testutil::petersen(), 2).has_value());
    CHECK(chromatic_exact(Graph(0)).chi == 0);
    CHECK(chromatic_exact(named_graph("O4")).chi == 1);
    CHECK_THROWS_AS(chromatic_exact(Graph(17)), SizeError);

    auto [chi, coloring] = chromatic_exact(named_graph("C5+K4"));
    CHECK(chi == 4);
    CHECK(is_proper(named_graph("C5+K4"), coloring));
}

TEST_CASE("chvatal graph is 4-chromatic and triangle-free") {
    Graph g = testutil::chvatal();
    CHECK(g.max_degree() == 4);
    CHECK(is_free(g, {named_graph("C3")}));
    CHECK(chromatic_exact(g).chi == 4);
}

TEST_CASE("is_chordal") {
    CHECK_FALSE(is_chordal(named_graph("C4")).chordal);
    CHECK(is_chordal(named_graph("K4")).chordal);
    CHECK(is_chordal(named_graph("gem")).chordal);
    CHECK(is_chordal(Graph(0)).chordal);
    CHECK_FALSE(is_chordal(testutil::petersen()).chordal);

    // order returned is a perfect elimination order
    auto [ok, order] = is_chordal(named_graph("gem"));
    REQUIRE(ok);
    Graph gem = named_graph("gem");
    std::vector<int> pos(5);
    for (int i = 0; i < 5; ++i) pos[order[i]] = i;
    for (int i = 0; i < 5; ++i) {
        std::vector<int> later;
        for (int u = gem.neighbors(order[i]).first(); u >= 0; u = gem.neighbors(order[i]).next(u))
            if (pos[u] > i) later.push_back(u);
        for (size_t a = 0; a < later.size(); ++a)
            for (size_t b = a + 1; b < later.size(); ++b)
                CHECK(gem.has_edge(later[a], later[b]));
    }

    // chordality test agrees with induced-cycle search
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testutil::random_graph(rng, 3 + (int)(rng() % 7), 0.45);
        CHECK(is_chordal(g).chordal == !family_contains(g, Family::cycle_ge(4)));
    }
}

TEST_CASE("color_chordal uses exactly omega colors") {
    CHECK(color_chordal(named_graph("K4")).k == 4);
    CHECK(color_chordal(named_graph("P5")).k == 2);
    CHECK(color_chordal(named_graph("K1,3")).k == 2);
    CHECK(color_chordal(named_graph("gem")).k == 3);
    CHECK_THROWS_AS(color_chordal(named_graph("C5")), ContractError);

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testutil::random_chordal(rng, 4 + (int)(rng() % 9), 3 + (int)(rng() % 5));
        REQUIRE(is_chordal(g).chordal);
        Coloring c = color_chordal(g);
        CHECK(is_proper(g, c));
        CHECK(c.k == max_clique_brute(g));
        CHECK(c.k == chromatic_exact(g).chi);
    }
}

TEST_CASE("max_matching") {
    CHECK(max_matching(named_graph("C5")).size() == 2);
    CHECK(max_matching(named_graph("K4")).size() == 2);
    CHECK(max_matching(testutil::petersen()).size() == 5);
    CHECK(max_matching(Graph(0)).empty());

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testutil::random_graph(rng, 2 + (int)(rng() % 12), 0.1 + 0.07 * (rng() % 10));
        auto m = max_matching(g);
        CHECK(is_matching(g, m));
        CHECK((int)m.size() == testutil::matching_size_brute(g));
    }
}

TEST_CASE("color_O3_free") {
    CHECK(color_O3_free(named_graph("C5")).k == 3);
    CHECK(color_O3_free(named_graph("C4")).k == 2);
    CHECK(color_O3_free(named_graph("K5")).k == 5);
    CHECK(color_O3_free(Graph(0)).k == 0);
    CHECK_THROWS_WITH_AS(color_O3_free(named_graph("O3")), doctest::Contains("nonadjacent"),
                         ContractError);
    CHECK_THROWS_AS(color_O3_free(named_graph("P5")), ContractError);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testutil::random_o3_free(rng, 3 + (int)(rng() % 10), 0.5);
        Coloring c = color_O3_free(g);
        CHECK(is_proper(g, c));
        int n = g.vertex_count();
        CHECK(c.k == n - testutil::matching_size_brute(complement(g)));
        CHECK(c.k == chromatic_exact(g).chi);
        std::vector<int> class_size(c.k, 0);
        for (int v = 0; v < n; ++v) ++class_size[c.color[v]];
        for (int s : class_size) CHECK(s <= 2);
    }
}

TEST_CASE("solve_with_deletion_set examples") {
    Graph c4 = named_graph("C4");
    CHECK(solve_with_deletion_set(c4, VertexSet::single(4, 0), 3, o3_oracle()).chi == 2);

    Graph c5 = named_graph("C5");
    CHECK(solve_with_deletion_set(c5, VertexSet::full(5), 3, o3_oracle()).chi == 3);

    Graph k4 = named_graph("K4");
    CHECK(solve_with_deletion_set(k4, VertexSet::single(4, 0), 4, chordal_oracle()).chi == 4);

    // remainder rejected by the inner oracle
    Graph o3k1 = named_graph("O3+K1");
    CHECK_THROWS_AS(solve_with_deletion_set(o3k1, VertexSet::single(4, 3), 3, o3_oracle()),
                    ContractError);
}

TEST_CASE("solve_with_deletion_set equals the oracle on random instances") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        // O3-free core plus up to 3 arbitrary extra vertices
        int core_n = 4 + (int)(rng() % 6);
        int extra = 1 + (int)(rng() % 3);
        Graph core = testutil::random_o3_free(rng, core_n, 0.5);
        int n = core_n + extra;
        Graph g(n);
        for (auto [u, v] : core.edges()) g.add_edge(u, v);
        for (int e = core_n; e < n; ++e)
            for (int v = 0; v < e; ++v)
                if (rng() % 2) g.add_edge(v, e);
        VertexSet del(n);
        for (int e = core_n; e < n; ++e) del.set(e);
        auto got = solve_with_deletion_set(g, del, 3, o3_oracle());
        CHECK(got.chi == chromatic_exact(g).chi);
        CHECK(is_proper(g, got.coloring));
        CHECK(got.coloring.k == got.chi);
    }
}

TEST_CASE("deletion-set solver stays within sanity bounds") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        int core_n = 4 + (int)(rng() % 5);
        Graph core = testutil::random_o3_free(rng, core_n, 0.5);
        int n = core_n + 2;
        Graph g(n);
        for (auto [u, v] : core.edges()) g.add_edge(u, v);
        for (int e = core_n; e < n; ++e)
            for (int v = 0; v < e; ++v)
                if (rng() % 2) g.add_edge(v, e);
        VertexSet del(n);
        del.set(core_n);
        del.set(core_n + 1);
        auto got = solve_with_deletion_set(g, del, 3, o3_oracle());
        // never below the inner chi of the untouched remainder, never above
        // 1 + degeneracy
        Graph remainder = delete_vertices(g, del).graph;
        CHECK(got.chi >= color_O3_free(remainder).k);
        int degeneracy = 0;
        {
            Graph h = g;
            VertexSet alive = VertexSet::full(n);
            while (alive.count() > 0) {
                int best = -1, bd = n + 1;
                for (int v = alive.first(); v >= 0; v = alive.next(v)) {
                    int d = (h.neighbors(v) & alive).count();
                    if (d < bd) {
                        bd = d;
                        best = v;
                    }
                }
                degeneracy = std::max(degeneracy, bd);
                alive.reset(best);
            }
        }
        CHECK(got.chi <= degeneracy + 1);
    }
}

TEST_CASE("peel_pendants") {
    auto p5 = peel_pendants(named_graph("P5"));
    CHECK(p5.graph.vertex_count() == 2);
    CHECK(p5.removed == 3);
    CHECK(p5.graph.edge_count() == 1);

    auto c5 = peel_pendants(named_graph("C5"));
    CHECK(c5.removed == 0);
    CHECK(c5.graph == named_graph("C5"));

    auto paw = peel_pendants(named_graph("paw"));
    CHECK(paw.removed == 1);
    CHECK(canonical_form(paw.graph) == canonical_form(named_graph("C3")));

    CHECK_THROWS_AS(peel_pendants(named_graph("2*K2")), ContractError);

    // chi preserved, up to 14 vertices
    std::mt19937_64 rng(67);
    int done = 0;
    for (int trial = 0; trial < 400 && done < 60; ++trial) {
        Graph g = testutil::random_graph(rng, 5 + (int)(rng() % 10), 0.25);
        if (!is_connected(g)) continue;
        ++done;
        auto peeled = peel_pendants(g);
        CHECK(chromatic_exact(peeled.graph).chi == chromatic_exact(g).chi);
    }
    CHECK(done == 60);
}

TEST_CASE("decompose_C5") {
    Graph c5 = named_graph("C5");
    VertexSet all5 = VertexSet::full(5);
    auto d = decompose_C5(c5, all5);
    CHECK(d.v1.empty());
    CHECK(d.v2.empty());
    CHECK(d.g1.vertex_count() == 0);
    CHECK(d.g2.vertex_count() == 5);

    // W5: C5 plus a dominating apex
    Graph w5(6);
    for (int i = 0; i < 5; ++i) {
        w5.add_edge(i, (i + 1) % 5);
        w5.add_edge(i, 5);
    }
    VertexSet cyc(6);
    for (int i = 0; i < 5; ++i) cyc.set(i);
    auto dw = decompose_C5(w5, cyc);
    CHECK(dw.v1.count() == 1);
    CHECK(dw.v1.test(5));
    CHECK(dw.v2.empty());
    CHECK(dw.g1.vertex_count() == 0);
    CHECK(color_O3_free(dw.g2).k == 4);
    CHECK(chromatic_exact(w5).chi == 4);

    CHECK_THROWS_AS(decompose_C5(named_graph("C5+P5"), all5), ContractError); // disconnected
    Graph host = disjoint_union(named_graph("C5"), Graph(0));
    CHECK_THROWS_AS(decompose_C5(named_graph("P5"), VertexSet::full(5)), ContractError);
}

TEST_CASE("deletion set covering the whole graph") {
    // family enumeration degenerates to coloring C5 with classes of size <= 2
    Graph c7 = named_graph("C7");
    CHECK(solve_with_deletion_set(c7, VertexSet::full(7), 3, o3_oracle()).chi == 3);
}
