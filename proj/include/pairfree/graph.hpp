#ifndef PAIRFREE_GRAPH_HPP
#define PAIRFREE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "pairfree/vertex_set.hpp"

namespace pairfree {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Adjacency is kept symmetric and irreflexive by construction; values are
// treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    // Throws ContractError on out-of-range endpoints or self-loops.
    // Duplicate edges collapse.
    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    std::vector<Edge> edges() const; // sorted, u < v

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on the complement of `drop`, densely reindexed.
// index_map[new] = old.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> index_map;
};
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// One vertex per edge of g (edges in sorted order); two line-graph vertices
// are adjacent iff the underlying edges share an endpoint.
Graph line_graph(const Graph& g);

// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g); // true for the empty graph and K1
bool is_forest(const Graph& g);
bool is_complete(const Graph& g);
// Connected 2-regular graph on >= 3 vertices.
bool is_simple_cycle(const Graph& g);

// ---- edge-list text format -------------------------------------------------
// Optional '#' comment lines; first data line "n m"; then m lines "u v".
Graph parse_edge_list_text(const std::string& text);
std::string format_edge_list(const Graph& g);

} // namespace pairfree

#endif
