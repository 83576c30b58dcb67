#ifndef PAIRFREE_CANONICAL_HPP
#define PAIRFREE_CANONICAL_HPP

#include <string>

#include "pairfree/graph.hpp"

namespace pairfree {

// Label-invariant fingerprint of a small graph: canonical_form(G) ==
// canonical_form(H)  iff  G and H are isomorphic.  Bounded to n <= 10
// (exhaustive relabeling with branch-and-bound); SizeError beyond that.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);

constexpr int kCanonicalMaxN = 10;

namespace detail {
// Same encoding without the public contract bound; used to deduplicate
// collections whose members can exceed 10 vertices (forest roots go up to
// 2 * max_edges).  Hard limit 16.
CanonicalForm canonical_key(const Graph& g);
constexpr int kCanonicalKeyMaxN = 16;
} // namespace detail

} // namespace pairfree

#endif
