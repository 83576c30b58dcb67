#include "pairfree/graph.hpp"

#include <algorithm>
#include <sstream>

#include "pairfree/errors.hpp"

namespace pairfree {

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw ContractError("vertex count must be nonnegative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ContractError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw ContractError("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not allowed");
        g.add_edge(u, v);
    }
    return g;
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> map = keep.to_vector();
    int m = (int)map.size();
    Graph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(map[i], map[j])) h.add_edge(i, j);
    return {std::move(h), std::move(map)};
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
    VertexSet keep = VertexSet::full(g.vertex_count()) - drop;
    return induced_subgraph(g, keep);
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> es = g.edges();
    int m = (int)es.size();
    Graph l(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) l.add_edge(i, j);
        }
    return l;
}

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<VertexSet> comps;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(n);
        std::vector<int> stack{s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.set(v);
                    stack.push_back(v);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g) {
    // A graph is acyclic iff every component has |V|-1 edges.
    for (const VertexSet& comp : components(g)) {
        int edges_in_comp = 0;
        for (int v = comp.first(); v >= 0; v = comp.next(v))
            edges_in_comp += (g.neighbors(v) & comp).count();
        if (edges_in_comp / 2 != comp.count() - 1) return false;
    }
    return true;
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 1) return false;
    return true;
}

bool is_simple_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("expected header line 'n m' on line " + std::to_string(lineno));
        } else {
            int u, v;
            if (!(ls >> u >> v))
                throw ParseError("expected edge line 'u v' on line " + std::to_string(lineno));
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw ParseError("empty edge-list input");
    if ((int)edges.size() != m)
        throw ParseError("header announced " + std::to_string(m) + " edges but " +
                         std::to_string(edges.size()) + " were given");
    try {
        return Graph::from_edge_list(n, edges);
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    std::vector<Edge> es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pairfree
