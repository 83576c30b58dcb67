#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pairfree/atlas.hpp"
#include "pairfree/chromatic.hpp"
#include "pairfree/classifier.hpp"
#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/named.hpp"

using namespace pairfree;

namespace {

Verdict classify(const std::string& a, const std::string& b) {
    return classify_pair(named_graph(a), named_graph(b));
}

} // namespace

TEST_CASE("headline verdicts") {
    Verdict v = classify("K1,4", "bull");
    CHECK(v.status == Status::NpComplete);
    CHECK(std::string(v.rule->id) == "N11");

    v = classify("P5", "P5");
    CHECK(v.status == Status::NpComplete);
    CHECK(std::string(v.rule->id) == "N5");

    v = classify("K1,3", "hammer");
    CHECK(v.status == Status::Polynomial);
    CHECK(std::string(v.rule->id) == "P15");

    v = classify("K1,3", "C3");
    CHECK(v.status == Status::Polynomial);
    CHECK(std::string(v.rule->id) == "P2");

    v = classify("K1,3", "bull");
    CHECK(v.status == Status::Open);
    CHECK(v.rule == nullptr);

    CHECK(classify("P5", "K5").status == Status::Polynomial);
    CHECK(classify("P5", "gem").status == Status::Polynomial);
    CHECK(classify("P5", "C4").status == Status::Polynomial);
    CHECK(classify("fork", "bull").status == Status::Open);
    CHECK(classify("K1,3", "butterfly").status == Status::Open);
    CHECK(classify("C5", "C5").status == Status::NpComplete);
    CHECK(classify("K1,3", "paw").status == Status::Polynomial);
}

TEST_CASE("symmetry over the 5-vertex universe") {
    std::vector<Graph> universe = enumerate_connected(5).to_vector();
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i; j < universe.size(); ++j) {
            Verdict ab = classify_pair(universe[i], universe[j]);
            Verdict ba = classify_pair(universe[j], universe[i]);
            CHECK(ab.status == ba.status);
            CHECK((ab.rule == nullptr) == (ba.rule == nullptr));
            if (ab.rule) CHECK(std::string(ab.rule->id) == ba.rule->id);
        }
}

TEST_CASE("monotonicity of NPC under supergraphs") {
    // if a pair is NPC and one side grows (induced-subgraph-wise), the pair
    // stays NPC; spot-checked over the small universe
    std::vector<Graph> small = enumerate_connected(4).to_vector();
    std::vector<Graph> big = enumerate_connected(5).to_vector();
    int checked = 0;
    for (const Graph& h1 : small)
        for (const Graph& h2 : small) {
            if (classify_pair(h1, h2).status != Status::NpComplete) continue;
            for (const Graph& h1big : big) {
                if (h1big.vertex_count() != 5) continue;
                if (!find_induced_embedding(h1big, h1)) continue;
                CHECK(classify_pair(h1big, h2).status == Status::NpComplete);
                ++checked;
            }
        }
    CHECK(checked > 100);
}

TEST_CASE("witnesses and citations") {
    Verdict v = classify("C5", "C7");
    CHECK(v.status == Status::NpComplete);
    CHECK(std::string(v.rule->id) == "N1");
    CHECK(std::string(v.rule->citation).find("cycle") != std::string::npos);

    v = classify("K1,4", "bull");
    CHECK(v.witness.find("K1,4") != std::string::npos);
    CHECK(v.witness.find("bull") != std::string::npos);

    v = classify("fork", "K1,3");
    CHECK(std::string(v.rule->id) == "N2");
    CHECK(v.witness.find("K1,3 in H1") != std::string::npos);

    // every pair decided before N10 in the 5-vertex universe still leaves
    // N10 evaluated for the conflict check
    CHECK(classify("P5", "fork").status == Status::NpComplete);
    CHECK(std::string(classify("P5", "fork").rule->id) == "N5");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(classify_pair(Graph(0), named_graph("K2")), ContractError);

    // dumbbell: two triangles joined by a path; 8 vertices, claw-free,
    // only the limit-class rule could decide it, so the size bound trips
    Graph dumbbell = Graph::from_edge_list(
        8, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
    CHECK_THROWS_AS(classify_pair(named_graph("K1,3"), dumbbell), SizeError);

    // a long path is decided by the P164 rule before any lookup is needed
    CHECK(classify_pair(named_graph("P164"), named_graph("C3")).status == Status::NpComplete);
    CHECK(std::string(classify_pair(named_graph("P164"), named_graph("C3")).rule->id) == "N7");
}

TEST_CASE("atlas tables") {
    AtlasTable t4 = atlas_table(4);
    CHECK(t4.pairs == 55);
    CHECK(t4.open == 0);

    AtlasTable t5 = atlas_table(5);
    CHECK(t5.pairs == 496);
    CHECK(t5.open == 13);
    CHECK(t5.npc + t5.poly + t5.open == 496);

    CHECK_THROWS_AS(atlas_table(8), SizeError);
}

TEST_CASE("polynomial verdicts for solver classes have solvers") {
    struct Case {
        const char* a;
        const char* b;
        ChromaticResult (*solver)(const Graph&);
        const char* member;
    };
    for (const Case& c : {Case{"K1,3", "P5", &solve_claw_p5_free, "C5"},
                          Case{"K1,3", "hammer", &solve_claw_hammer_free, "C9"},
                          Case{"P5", "C4", &solve_p5_c4_free, "C5"}}) {
        CHECK(classify(c.a, c.b).status == Status::Polynomial);
        Graph m = named_graph(c.member);
        REQUIRE(is_free(m, {named_graph(c.a), named_graph(c.b)}));
        CHECK(c.solver(m).chi == chromatic_exact(m).chi);
    }
}
