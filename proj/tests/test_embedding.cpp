#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/named.hpp"
#include "test_util.hpp"

using namespace pairfree;

namespace {

bool valid_embedding(const Graph& host, const Graph& pattern, const Embedding& m) {
    int k = pattern.vertex_count();
    if ((int)m.size() != k) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (m[i] == m[j]) return false;
            if (pattern.has_edge(i, j) != host.has_edge(m[i], m[j])) return false;
        }
    return true;
}

// Exhaustive oracle: try every injective map.
bool embeds_by_enumeration(const Graph& host, const Graph& pattern) {
    int n = host.vertex_count(), k = pattern.vertex_count();
    if (k > n) return false;
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> pick(k);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == k) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i)
                ok = pattern.has_edge(i, depth) == host.has_edge(pick[i], v);
            if (!ok) continue;
            pick[depth] = v;
            used[v] = true;
            if (rec(depth + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(0);
}

} // namespace

TEST_CASE("find_induced_embedding examples") {
    auto m = find_induced_embedding(named_graph("C6"), named_graph("P5"));
    REQUIRE(m.has_value());
    CHECK(valid_embedding(named_graph("C6"), named_graph("P5"), *m));

    CHECK_FALSE(find_induced_embedding(named_graph("C5"), named_graph("P5")).has_value());

    auto g = find_induced_embedding(named_graph("gem"), named_graph("P4"));
    REQUIRE(g.has_value());
    CHECK(valid_embedding(named_graph("gem"), named_graph("P4"), *g));
}

TEST_CASE("embedding agrees with exhaustive enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int hn = 4 + (int)(rng() % 6); // up to 9
        int pn = 2 + (int)(rng() % 4); // up to 5
        Graph host = testutil::random_graph(rng, hn, 0.2 + 0.06 * (rng() % 10));
        Graph pattern = testutil::random_graph(rng, pn, 0.2 + 0.06 * (rng() % 10));
        auto found = find_induced_embedding(host, pattern);
        CHECK(found.has_value() == embeds_by_enumeration(host, pattern));
        if (found) CHECK(valid_embedding(host, pattern, *found));
    }
}

TEST_CASE("embedding monotonicity") {
    // if H embeds in G and G embeds in F then H embeds in F
    std::mt19937_64 rng(29);
    int hits = 0;
    for (int trial = 0; trial < 400 && hits < 60; ++trial) {
        Graph f = testutil::random_graph(rng, 8, 0.5);
        Graph g_keep = testutil::random_graph(rng, 6, 0.5);
        // force G <= F by taking an induced subgraph of F
        VertexSet keep(8);
        while (keep.count() < 6) keep.set((int)(rng() % 8));
        Graph g = induced_subgraph(f, keep).graph;
        Graph h = testutil::random_graph(rng, 4, 0.5);
        if (find_induced_embedding(g, h)) {
            ++hits;
            CHECK(find_induced_embedding(f, h).has_value());
        }
    }
    CHECK(hits >= 30);
}

TEST_CASE("is_free") {
    CHECK(is_free(named_graph("C7"), {named_graph("K1,3"), named_graph("hammer")}));
    CHECK_FALSE(is_free(named_graph("K1,4"), {named_graph("K1,3")}));
    std::mt19937_64 rng(1);
    CHECK(is_free(testutil::random_graph(rng, 6, 0.5), {}));
    auto w = find_forbidden(named_graph("K1,4"), {named_graph("C3"), named_graph("K1,3")});
    REQUIRE(w.has_value());
    CHECK(w->pattern_index == 1);
}

TEST_CASE("find_induced_cycle") {
    auto whole = find_induced_cycle(named_graph("C6"), 6);
    REQUIRE(whole.has_value());
    CHECK(whole->size() == 6);

    CHECK_FALSE(find_induced_cycle(named_graph("K4"), 4).has_value());

    auto pet = find_induced_cycle(testutil::petersen(), 5);
    REQUIRE(pet.has_value());
    Graph p = testutil::petersen();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == 4);
            CHECK(p.has_edge((*pet)[i], (*pet)[j]) == consecutive);
        }

    CHECK_THROWS_AS(find_induced_cycle(named_graph("C5"), 2), ContractError);
}

TEST_CASE("find_induced_path") {
    CHECK(find_induced_path(named_graph("C6"), 5).has_value());
    CHECK_FALSE(find_induced_path(named_graph("K4"), 3).has_value());
    auto whole = find_induced_path(named_graph("P5"), 5);
    REQUIRE(whole.has_value());
    Graph p5 = named_graph("P5");
    for (int i = 0; i + 1 < 5; ++i) CHECK(p5.has_edge((*whole)[i], (*whole)[i + 1]));
    CHECK(find_induced_path(named_graph("K1"), 1).has_value());
}

TEST_CASE("family_contains") {
    CHECK(family_contains(named_graph("P5"), Family::span_2k2()));
    CHECK(family_contains(named_graph("K1,6"), Family::star_ge5()));
    CHECK(family_contains(complement(named_graph("C6")), Family::co_cycle_ge6()));
    CHECK(family_contains(named_graph("paw"), Family::cycle_ge(3)));
    CHECK_FALSE(family_contains(named_graph("paw"), Family::cycle_ge(4)));
    CHECK(family_contains(named_graph("C4"), Family::cycle_ge(4)));
    CHECK_FALSE(family_contains(named_graph("C4"), Family::cycle_ge(5)));
    CHECK(family_contains(named_graph("C3+K1"), Family::cycle_plus_k1()));
    CHECK_FALSE(family_contains(named_graph("C3"), Family::cycle_plus_k1()));
    CHECK_FALSE(family_contains(named_graph("K1,3"), Family::span_2k2()));
    CHECK_FALSE(family_contains(named_graph("bull"), Family::span_2k2()));
}

TEST_CASE("p164 family is false on small graphs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_graph(rng, 1 + (int)(rng() % 6), 0.5);
        CHECK_FALSE(family_contains(g, Family::path_p164()));
    }
}

TEST_CASE("fits_in_family") {
    CHECK(fits_in_family(named_graph("2*K2+K1"), SubFamily::PK2));
    CHECK_FALSE(fits_in_family(named_graph("P3"), SubFamily::PK2));
    CHECK(fits_in_family(named_graph("2*K2"), SubFamily::P5PlusK1s));
    CHECK(fits_in_family(named_graph("P5+3*K1"), SubFamily::P5PlusK1s));
    CHECK_FALSE(fits_in_family(named_graph("K1,3"), SubFamily::P5PlusK1s));
    CHECK(fits_in_family(named_graph("K5"), SubFamily::Complete));
    CHECK_FALSE(fits_in_family(named_graph("K4-e"), SubFamily::Complete));
    CHECK(fits_in_family(named_graph("K1,4"), SubFamily::ForestLe6NotK15));
    CHECK_FALSE(fits_in_family(named_graph("K1,5"), SubFamily::ForestLe6NotK15));
    CHECK_FALSE(fits_in_family(named_graph("paw"), SubFamily::ForestLe6NotK15));
    CHECK_FALSE(fits_in_family(named_graph("P5+2*K2"), SubFamily::ForestLe6NotK15));
}
