#include "pairfree/gadgets.hpp"

#include "pairfree/errors.hpp"

namespace pairfree {

ImplantResult diamond_implant(const Graph& g, const ImplantSite& site) {
    int n = g.vertex_count();
    if (site.x < 0 || site.x >= n) throw ContractError("implant vertex out of range");
    if (g.degree(site.x) < 2)
        throw ContractError("vertex " + std::to_string(site.x) +
                            " is pendant or isolated; diamond implantation needs degree >= 2");
    if (site.a.empty() || site.b.empty())
        throw ContractError("both neighborhood parts must be nonempty");
    if (site.a.intersects(site.b)) throw ContractError("neighborhood parts must be disjoint");
    if ((site.a | site.b) != g.neighbors(site.x))
        throw ContractError("parts must partition the neighborhood of the implant vertex");

    std::vector<int> map; // new -> old for the surviving vertices
    std::vector<int> where(n, -1);
    for (int v = 0; v < n; ++v)
        if (v != site.x) {
            where[v] = (int)map.size();
            map.push_back(v);
        }
    int y1 = (int)map.size(), y2 = y1 + 1, y3 = y1 + 2, y4 = y1 + 3;
    Graph h(y1 + 4);
    for (auto [u, v] : g.edges())
        if (u != site.x && v != site.x) h.add_edge(where[u], where[v]);
    for (int a = site.a.first(); a >= 0; a = site.a.next(a)) h.add_edge(y1, where[a]);
    for (int b = site.b.first(); b >= 0; b = site.b.next(b)) h.add_edge(y4, where[b]);
    h.add_edge(y1, y2);
    h.add_edge(y1, y3);
    h.add_edge(y2, y3);
    h.add_edge(y2, y4);
    h.add_edge(y3, y4);
    map.insert(map.end(), {-1, -1, -1, -1});
    return {std::move(h), std::move(map)};
}

std::optional<int> find_triangle_free_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        bool edgeless = true;
        for (int u = g.neighbors(v).first(); u >= 0 && edgeless; u = g.neighbors(v).next(u))
            edgeless = !g.neighbors(v).intersects(g.neighbors(u));
        if (edgeless) return v;
    }
    return std::nullopt;
}

ReductionResult reduce_to_k14_bull_free(const Graph& g) {
    if (g.vertex_count() < 2 || !is_connected(g))
        throw ContractError("reduction needs a connected graph with at least two vertices");
    if (g.max_degree() > 4) {
        int bad = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 4) bad = v;
        throw ContractError("vertex " + std::to_string(bad) + " has degree " +
                            std::to_string(g.degree(bad)) + " > 4");
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (g.neighbors(v).intersects(g.neighbors(u)))
                throw ContractError("input has a triangle through vertices " + std::to_string(v) +
                                    " and " + std::to_string(u));

    ReductionResult out{g, {}};
    size_t step_bound = (size_t)g.vertex_count();
    while (auto x = find_triangle_free_vertex(out.graph)) {
        if (out.trace.size() > step_bound)
            throw InternalError("implantation did not terminate within the vertex bound");
        const Graph& cur = out.graph;
        VertexSet a(cur.vertex_count()), b(cur.vertex_count());
        int side = 0;
        for (int u = cur.neighbors(*x).first(); u >= 0; u = cur.neighbors(*x).next(u), ++side)
            (side % 2 == 0 ? a : b).set(u);
        ImplantSite site{*x, a, b};
        out.trace.push_back(site);
        out.graph = diamond_implant(cur, site).graph;
    }
    return out;
}

} // namespace pairfree
