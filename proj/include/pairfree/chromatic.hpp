#ifndef PAIRFREE_CHROMATIC_HPP
#define PAIRFREE_CHROMATIC_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree {

// Proper vertex coloring; colors are 0..k-1 and every color < k is used.
struct Coloring {
    std::vector<int> color;
    int k = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

// Exact chromatic number with witness.  Clique lower bound plus iterated
// k-colorability backtracking.  Bounded to n <= 16.
ChromaticResult chromatic_exact(const Graph& g);
constexpr int kExactMaxN = 16;

// Backtracking k-colorability with a maximum clique precolored; no size
// bound (callers keep inputs at backtracking-friendly sizes).
std::optional<Coloring> k_color(const Graph& g, int k);

// Maximum-cardinality-search order, verified.  If chordal, `order` is a
// perfect elimination order: each vertex's later neighbors form a clique.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> order;
};
ChordalityResult is_chordal(const Graph& g);

// Greedy along the reverse perfect elimination order; uses exactly omega(G)
// colors.  ContractError on non-chordal input.
Coloring color_chordal(const Graph& g);

// Optimal coloring of a graph with no independent triple: color classes of
// size <= 2 given by a maximum matching of the complement, so
// k = n - matching size.  ContractError (naming a witness triple) otherwise.
Coloring color_O3_free(const Graph& g);

// Exact chi oracle for a hereditary class; must be valid on every induced
// subgraph of the graph it is handed.
using ChiOracle = std::function<ChromaticResult(const Graph&)>;

// Exact chi(G) given a deletion set V with G - V in a class X solved by
// `inner`, X contained in the O_p-free graphs.  Enumerates the families of
// disjoint independent sets covering V (each meeting V, outside parts of
// size <= p-1); the answer is the minimum of family size plus inner chi of
// the rest.
ChromaticResult solve_with_deletion_set(const Graph& g, const VertexSet& v, int p,
                                        const ChiOracle& inner);

// Repeatedly removes a degree-1 vertex while the graph stays connected with
// >= 3 vertices; chromatic number is preserved at every step.
struct PeelResult {
    Graph graph;
    int removed = 0;
    std::vector<int> index_map;           // peeled index -> input index
    std::vector<std::pair<int, int>> steps; // (removed vertex, its neighbor), input indices
};
PeelResult peel_pendants(const Graph& g);

// Splits a connected {P5,C4}-free graph around an induced C5 (vertex set c):
// v1 = vertices adjacent to all of the cycle, v2 = vertices with exactly
// three neighbors on it, g2 = induced on v1 + v2 + cycle (O3-free),
// g1 = induced on the rest.
struct C5Decomposition {
    VertexSet v1, v2;
    Graph g1, g2;
    std::vector<int> g1_map, g2_map; // local index -> input index
};
C5Decomposition decompose_C5(const Graph& g, const VertexSet& c);

// Structural solvers for the three polynomial classes.  Each verifies
// membership and raises ContractError with a witness otherwise.
ChromaticResult solve_claw_p5_free(const Graph& g);
ChromaticResult solve_claw_hammer_free(const Graph& g);
ChromaticResult solve_p5_c4_free(const Graph& g);

enum class Method { Brute, Chordal, O3Free, ClawP5, ClawHammer, P5C4 };
const char* method_name(Method m);

struct AutoResult {
    int chi = 0;
    Coloring coloring;
    Method method = Method::Brute;
};

// Dispatcher: chordal, O3-free, the three class solvers, then exact search
// for small graphs; UnsupportedError when nothing applies.
AutoResult chromatic_auto(const Graph& g);

} // namespace pairfree

#endif
