#include "pairfree/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "pairfree/errors.hpp"

namespace pairfree {

std::vector<Edge> max_matching(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    int n = g.vertex_count();
    if (n == 0) return {};
    BoostGraph bg(n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    std::vector<BoostGraph::vertex_descriptor> mate(n);
    bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (!ok) throw InternalError("matching verification failed");
    std::vector<Edge> out;
    for (int v = 0; v < n; ++v)
        if (mate[v] != boost::graph_traits<BoostGraph>::null_vertex() && v < (int)mate[v])
            out.emplace_back(v, (int)mate[v]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
    VertexSet touched(g.vertex_count());
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) return false;
        if (touched.test(u) || touched.test(v)) return false;
        touched.set(u);
        touched.set(v);
    }
    return true;
}

} // namespace pairfree
