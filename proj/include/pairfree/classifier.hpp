#ifndef PAIRFREE_CLASSIFIER_HPP
#define PAIRFREE_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pairfree/canonical.hpp"
#include "pairfree/graph.hpp"

namespace pairfree {

enum class Status { NpComplete, Polynomial, Open };
const char* status_name(Status s);

struct RuleInfo {
    const char* id;       // N1..N11, P1..P15
    Status kind;          // NpComplete or Polynomial
    const char* citation; // human-readable statement of the condition
};

// The closed rule lists, in precedence order.
const std::vector<RuleInfo>& npc_rules();
const std::vector<RuleInfo>& poly_rules();

struct Verdict {
    Status status = Status::Open;
    const RuleInfo* rule = nullptr;  // null iff Open
    std::string witness;             // evidence summary, may be empty
};

// Classifies the coloring problem on graphs excluding {h1, h2} as induced
// subgraphs.  Symmetric in its arguments.  SizeError if a limit-class
// membership test would be needed on a graph with more than 7 vertices.
Verdict classify_pair(const Graph& h1, const Graph& h2);

struct AtlasRow {
    CanonicalForm form1, form2;
    std::string name1, name2; // human-readable when recognized
    Verdict verdict;
};

struct AtlasTable {
    std::vector<AtlasRow> rows;
    int pairs = 0;
    int npc = 0;
    int poly = 0;
    int open = 0;
};

// Classifies every unordered pair (with repetition) of connected graphs on
// at most max_n vertices.  max_n <= 5 is the tabulated universe; 6 and 7 are
// allowed but print a warning to stderr.
AtlasTable atlas_table(int max_n);

// Name lookup for small graphs (P4, K1,3, paw, bull, ...); empty if unknown.
std::string recognized_name(const Graph& g);

} // namespace pairfree

#endif
