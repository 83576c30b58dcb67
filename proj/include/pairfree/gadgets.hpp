#ifndef PAIRFREE_GADGETS_HPP
#define PAIRFREE_GADGETS_HPP

#include <optional>
#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree {

// Split of the neighborhood of x into two nonempty parts.
struct ImplantSite {
    int x;
    VertexSet a, b;
};

// Replaces x by the four-vertex diamond gadget: y1 takes the A side, y4 the
// B side, and y1 y2 y3 y4 carry the K4-e edges.  In every proper 3-coloring
// of the result y1 and y4 receive the same color, so 3-colorability is
// preserved in both directions.  The new graph reindexes the remaining
// vertices densely and appends y1..y4 at the end.
struct ImplantResult {
    Graph graph;
    std::vector<int> index_map; // new index -> old index; y1..y4 map to -1
};
ImplantResult diamond_implant(const Graph& g, const ImplantSite& site);

// Lowest-index vertex of degree >= 2 whose neighborhood is edgeless (the
// vertex lies in no triangle), if any.
std::optional<int> find_triangle_free_vertex(const Graph& g);

// Reduction pipeline: repeatedly implants at the eligible vertex with a
// balanced alternating A/B split until none remains.  Requires a connected
// triangle-free input with >= 2 vertices and maximum degree <= 4; the result
// is {K1,4, bull}-free and 3-colorable iff the input is.
struct ReductionResult {
    Graph graph;
    std::vector<ImplantSite> trace; // sites in the coordinates of each step
};
ReductionResult reduce_to_k14_bull_free(const Graph& g);

} // namespace pairfree

#endif
