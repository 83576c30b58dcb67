#ifndef PAIRFREE_EMBEDDING_HPP
#define PAIRFREE_EMBEDDING_HPP

#include <optional>
#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree {

// Injective map pattern-vertex -> host-vertex preserving both edges and
// non-edges (induced embedding).
using Embedding = std::vector<int>;

// Backtracking search; deterministic (pattern vertices by decreasing degree,
// host candidates ascending).  Returns the first embedding found or nullopt.
std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern);

bool is_free(const Graph& g, const std::vector<Graph>& patterns);

// Index of the first pattern that embeds plus a witness, or nullopt if free.
struct ForbiddenWitness {
    int pattern_index;
    Embedding map;
};
std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const std::vector<Graph>& patterns);

// Vertices of an induced C_k / P_k in traversal order, or nullopt.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k);
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k);

// Parametric families with decidable containment tests.  family_contains
// asks whether g has an induced member of the family.
struct Family {
    enum Kind {
        CycleGe,      // some induced C_p, p >= param (param in {3,4,5})
        StarK1pGe5,   // some induced K_{1,p}, p >= 5
        Span2K2,      // an induced spanning subgraph of 2K2: 2K2, K2+2K1 or O4
        CyclePlusK1,  // induced C3+K1 or C4+K1
        CoCycleGe6,   // induced co(C_q) for some q >= 6
        PathP164,     // induced P_164
    } kind;
    int param = 0;

    static Family cycle_ge(int k) { return {CycleGe, k}; }
    static Family star_ge5() { return {StarK1pGe5, 0}; }
    static Family span_2k2() { return {Span2K2, 0}; }
    static Family cycle_plus_k1() { return {CyclePlusK1, 0}; }
    static Family co_cycle_ge6() { return {CoCycleGe6, 0}; }
    static Family path_p164() { return {PathP164, 0}; }
};

bool family_contains(const Graph& g, Family fam);

// "Fits inside" families used by the polynomial rules; tests G itself.
enum class SubFamily {
    PK2,            // every component has at most 2 vertices
    P5PlusK1s,      // induced subgraph of P5 + |V(G)| K1
    Complete,
    ForestLe6NotK15 // forest, at most 6 vertices, not K_{1,5}
};

bool fits_in_family(const Graph& g, SubFamily fam);

} // namespace pairfree

#endif
