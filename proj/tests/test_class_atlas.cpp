#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pairfree/atlas.hpp"
#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/named.hpp"
#include "test_util.hpp"

using namespace pairfree;

namespace {

int count_with_n(const GraphSet& s, int n) {
    int c = 0;
    for (const Graph& g : s.to_vector())
        if (g.vertex_count() == n) ++c;
    return c;
}

} // namespace

TEST_CASE("enumerate_connected counts") {
    CHECK(enumerate_connected(1).size() == 1);
    GraphSet four = enumerate_connected(4);
    CHECK(four.size() == 10); // 1+1+2+6
    CHECK(count_with_n(four, 3) == 2);
    CHECK(count_with_n(four, 4) == 6);
    GraphSet five = enumerate_connected(5);
    CHECK(five.size() == 31); // ... + 21
    CHECK(count_with_n(five, 5) == 21);
    CHECK(count_with_n(enumerate_connected(6), 6) == 112);
    CHECK_THROWS_AS(enumerate_connected(8), SizeError);
}

TEST_CASE("enumerate_forests") {
    GraphSet one = enumerate_forests(1, ForestConstraint::None);
    CHECK(one.size() == 1); // K2

    GraphSet two = enumerate_forests(2, ForestConstraint::None);
    CHECK(two.size() == 3); // K2, P3, 2K2
    CHECK(two.contains(named_graph("P3")));
    CHECK(two.contains(named_graph("2*K2")));

    GraphSet s3 = enumerate_forests(3, ForestConstraint::Max3LeavesPerComponent);
    CHECK(s3.contains(named_graph("K1,3")));
    CHECK(s3.contains(named_graph("P4")));
    CHECK(s3.contains(named_graph("P3+K2")));
    CHECK(s3.contains(named_graph("3*K2")));

    // K1,4 has four leaves; it must appear only without the S constraint
    GraphSet f4 = enumerate_forests(4, ForestConstraint::None);
    GraphSet s4 = enumerate_forests(4, ForestConstraint::Max3LeavesPerComponent);
    GraphSet d4 = enumerate_forests(4, ForestConstraint::MaxDegree3);
    CHECK(f4.contains(named_graph("K1,4")));
    CHECK_FALSE(s4.contains(named_graph("K1,4")));
    CHECK_FALSE(d4.contains(named_graph("K1,4")));
    CHECK(s4.contains(named_graph("fork")));
    CHECK(d4.contains(named_graph("fork")));

    // no member has an isolated vertex
    for (const Graph& g : f4.to_vector())
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) >= 1);
}

TEST_CASE("class_members") {
    CHECK(class_members(ClassId::T, 3).contains(named_graph("K3")));

    GraphSet cot5 = class_members(ClassId::CoT, 5);
    CHECK(cot5.contains(named_graph("K5")));
    CHECK(cot5.contains(named_graph("gem")));

    int connected5 = 0;
    for (const Graph& g : cot5.to_vector())
        if (g.vertex_count() == 5 && is_connected(g)) ++connected5;
    CHECK(connected5 == 12);

    // line graphs of S members are claw-free
    Graph claw = named_graph("K1,3");
    for (const Graph& g : class_members(ClassId::T, 6).to_vector())
        CHECK_FALSE(find_induced_embedding(g, claw).has_value());

    // S subset of F
    GraphSet f6 = class_members(ClassId::F, 6);
    for (const Graph& g : class_members(ClassId::S, 6).to_vector()) CHECK(f6.contains(g));

    // O_n belongs to F (isolated-vertex convention)
    CHECK(class_members(ClassId::F, 4).contains(named_graph("O4")));
}

TEST_CASE("in_class") {
    CHECK(in_class(named_graph("K1,4"), ClassId::F));
    CHECK(in_class(named_graph("bull"), ClassId::TPrime));
    CHECK(in_class(named_graph("bull"), ClassId::CoT));
    CHECK_FALSE(in_class(named_graph("K1,3"), ClassId::TPrime));
    CHECK(in_class(named_graph("K1,3"), ClassId::CoT));
    CHECK(in_class(named_graph("hammer"), ClassId::T));
    CHECK_FALSE(in_class(named_graph("hammer"), ClassId::CoT));
    CHECK(in_class(named_graph("butterfly"), ClassId::TPrime));
    CHECK_FALSE(in_class(named_graph("butterfly"), ClassId::T));
    CHECK_FALSE(in_class(named_graph("P5"), ClassId::CoT));
    CHECK(in_class(named_graph("P5"), ClassId::T));
    CHECK(in_class(named_graph("K1,5"), ClassId::F));
    CHECK_FALSE(in_class(named_graph("K1,5"), ClassId::S));
    CHECK(in_class(named_graph("O3"), ClassId::S));
    CHECK_THROWS_AS(in_class(testutil::petersen(), ClassId::T), SizeError);
}

TEST_CASE("lookup consistency against direct tests") {
    for (const Graph& g : enumerate_connected(6).to_vector()) {
        int n = g.vertex_count();
        CHECK(in_class(g, ClassId::F) == class_members(ClassId::F, n).contains(g));
        CHECK(in_class(g, ClassId::S) == class_members(ClassId::S, n).contains(g));
    }
}

TEST_CASE("graph sets have no isomorphic duplicates") {
    GraphSet s = enumerate_connected(5);
    auto v = s.to_vector();
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            CHECK(canonical_form(v[i]) != canonical_form(v[j]));
}

TEST_CASE("enumerate_free_connected") {
    // with no patterns this is plain connected enumeration
    auto all5 = enumerate_free_connected({}, 5);
    CHECK(all5.size() == 31);

    // claw-free connected graphs on <= 5 vertices
    auto cf = enumerate_free_connected({named_graph("K1,3")}, 5);
    for (const Graph& g : cf) {
        CHECK(is_connected(g));
        CHECK(is_free(g, {named_graph("K1,3")}));
    }
    // cross-check count by filtering the full enumeration
    int expect = 0;
    for (const Graph& g : enumerate_connected(5).to_vector())
        if (is_free(g, {named_graph("K1,3")})) ++expect;
    CHECK((int)cf.size() == expect);
}
