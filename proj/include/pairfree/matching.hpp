#ifndef PAIRFREE_MATCHING_HPP
#define PAIRFREE_MATCHING_HPP

#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree {

// Maximum-cardinality matching of a general graph (Edmonds).  Exact for any
// input size; returns vertex-disjoint edges (u < v), sorted.
std::vector<Edge> max_matching(const Graph& g);

bool is_matching(const Graph& g, const std::vector<Edge>& m);

} // namespace pairfree

#endif
