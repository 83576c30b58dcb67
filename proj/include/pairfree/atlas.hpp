#ifndef PAIRFREE_ATLAS_HPP
#define PAIRFREE_ATLAS_HPP

#include <map>
#include <vector>

#include "pairfree/canonical.hpp"
#include "pairfree/graph.hpp"

namespace pairfree {

// The limit classes used by the classifier.
enum class ClassId {
    F,      // all forests
    S,      // forests with at most three leaves per component
    T,      // line graphs of S members
    TPrime, // line graphs of forests with maximum degree <= 3
    CoT,    // complements of T members
};

const char* class_id_name(ClassId cls);

// Collection of graphs with at most one member per isomorphism class,
// iterated in canonical order.
class GraphSet {
public:
    // Returns false if an isomorphic member was already present.
    bool insert(const Graph& g);
    bool contains(const Graph& g) const;
    bool contains_form(const CanonicalForm& f) const { return members_.count(f) != 0; }
    size_t size() const { return members_.size(); }

    std::vector<Graph> to_vector() const; // sorted by (n, canonical form)

private:
    std::map<CanonicalForm, Graph> members_;
};

// All connected graphs with 1..max_n vertices up to isomorphism.
// max_n <= 7 (SizeError beyond).
GraphSet enumerate_connected(int max_n);

enum class ForestConstraint { None, MaxDegree3, Max3LeavesPerComponent };

// All forests without isolated vertices having 1..max_edges edges and
// satisfying the constraint, up to isomorphism.  max_edges <= 7.
GraphSet enumerate_forests(int max_edges, ForestConstraint constraint);

// All members of cls with at most max_n vertices up to isomorphism.
// max_n <= 7.
GraphSet class_members(ClassId cls, int max_n);

// Membership test.  F and S are decided directly for any n; T, T' and co(T)
// by lookup, which requires n <= 7 (SizeError beyond).
bool in_class(const Graph& g, ClassId cls);

// All connected graphs free of the given patterns with 1..max_n vertices up
// to isomorphism.  Exploits heredity: members are grown by vertex
// augmentation from smaller members, which reaches every member because a
// connected graph always has a non-cut vertex.  max_n <= 10.
std::vector<Graph> enumerate_free_connected(const std::vector<Graph>& patterns, int max_n);

} // namespace pairfree

#endif
