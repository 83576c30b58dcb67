#ifndef PAIRFREE_NAMED_HPP
#define PAIRFREE_NAMED_HPP

#include <string>
#include <vector>

#include "pairfree/graph.hpp"

namespace pairfree {

// Builds a graph from an expression over named atoms.
//
//   expr := term ('+' term)*            disjoint union
//   term := [k '*'] atom                k disjoint copies
//   atom := 'co' '(' expr ')'           complement
//         | '(' expr ')'
//         | NAME
//   NAME := Pn | Cn | Kn | On | Kp,q | Kn-e
//         | paw | fork | gem | hammer | bull | butterfly
//
// Examples: "K1,3", "P5+2*K1", "co(C6)", "K4-e".
Graph named_graph(const std::string& spec);

// The five-vertex atoms are built from fixed edge tables; exposed for tests.
const std::vector<std::string>& named_atoms();

} // namespace pairfree

#endif
