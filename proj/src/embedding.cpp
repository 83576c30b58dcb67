#include "pairfree/embedding.hpp"

#include <algorithm>
#include <numeric>

#include "pairfree/canonical.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/named.hpp"

namespace pairfree {

namespace {

struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;   // pattern vertices, decreasing degree
    std::vector<int> map;     // pattern -> host, -1 unassigned
    VertexSet used;

    EmbedSearch(const Graph& h, const Graph& p)
        : host(h), pattern(p), map(p.vertex_count(), -1), used(h.vertex_count()) {
        order.resize(p.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.degree(a) > p.degree(b);
        });
    }

    bool extend(size_t depth) {
        if (depth == order.size()) return true;
        int u = order[depth];
        for (int v = 0; v < host.vertex_count(); ++v) {
            if (used.test(v)) continue;
            if (host.degree(v) < pattern.degree(u)) continue;
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                int w = order[i];
                ok = pattern.has_edge(u, w) == host.has_edge(v, map[w]);
            }
            if (!ok) continue;
            map[u] = v;
            used.set(v);
            if (extend(depth + 1)) return true;
            used.reset(v);
            map[u] = -1;
        }
        return false;
    }
};

// Induced-path extension used by both the cycle and the path search.  The
// partial path is induced; a new vertex must be adjacent to the tail and to
// no other path vertex (for cycles, the head is allowed once, at closing).
struct PathSearch {
    const Graph& g;
    int target_len;
    bool closing; // search for a cycle instead of a path
    std::vector<int> path;
    VertexSet on_path;

    PathSearch(const Graph& gr, int k, bool cycle)
        : g(gr), target_len(k), closing(cycle), on_path(gr.vertex_count()) {}

    bool run() {
        for (int s = 0; s < g.vertex_count(); ++s) {
            path.assign(1, s);
            on_path = VertexSet::single(g.vertex_count(), s);
            if (grow()) return true;
        }
        return false;
    }

    bool grow() {
        if ((int)path.size() == target_len) {
            if (!closing) return true;
            return g.has_edge(path.back(), path.front());
        }
        int tail = path.back();
        for (int v = g.neighbors(tail).first(); v >= 0; v = g.neighbors(tail).next(v)) {
            if (on_path.test(v)) continue;
            if (closing && v < path.front()) continue; // cycle starts at its minimum
            bool chord = false;
            size_t limit = path.size() - 1;
            for (size_t i = 0; i < limit && !chord; ++i) {
                if (closing && i == 0 && (int)path.size() == target_len - 1) continue;
                chord = g.has_edge(v, path[i]);
            }
            if (chord) continue;
            if (closing && (int)path.size() == target_len - 1 && !g.has_edge(v, path.front()))
                continue;
            path.push_back(v);
            on_path.set(v);
            if (grow()) return true;
            on_path.reset(v);
            path.pop_back();
        }
        return false;
    }
};

bool has_induced_cycle_ge(const Graph& g, int k_min) {
    for (int k = k_min; k <= g.vertex_count(); ++k)
        if (find_induced_cycle(g, k)) return true;
    return false;
}

} // namespace

std::optional<Embedding> find_induced_embedding(const Graph& host, const Graph& pattern) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbedSearch s(host, pattern);
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

bool is_free(const Graph& g, const std::vector<Graph>& patterns) {
    return !find_forbidden(g, patterns).has_value();
}

std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const std::vector<Graph>& patterns) {
    for (size_t i = 0; i < patterns.size(); ++i)
        if (auto m = find_induced_embedding(g, patterns[i]))
            return ForbiddenWitness{(int)i, *m};
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int k) {
    if (k < 3) throw ContractError("cycle length must be >= 3");
    if (k > g.vertex_count()) return std::nullopt;
    PathSearch s(g, k, true);
    if (s.run()) return s.path;
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
    if (k < 1) throw ContractError("path length must be >= 1");
    if (k > g.vertex_count()) return std::nullopt;
    PathSearch s(g, k, false);
    if (s.run()) return s.path;
    return std::nullopt;
}

bool family_contains(const Graph& g, Family fam) {
    switch (fam.kind) {
        case Family::CycleGe:
            if (fam.param <= 3) return !is_forest(g);
            if (fam.param == 4) return has_induced_cycle_ge(g, 4);
            return has_induced_cycle_ge(g, fam.param);
        case Family::StarK1pGe5:
            // K_{1,p} with p >= 5 present iff K_{1,5} present.
            return find_induced_embedding(g, named_graph("K1,5")).has_value();
        case Family::Span2K2: {
            static const std::vector<Graph> spans = {named_graph("2*K2"), named_graph("K2+2*K1"),
                                                     named_graph("O4")};
            return !is_free(g, spans);
        }
        case Family::CyclePlusK1: {
            static const std::vector<Graph> pats = {named_graph("C3+K1"), named_graph("C4+K1")};
            return !is_free(g, pats);
        }
        case Family::CoCycleGe6: {
            if (g.vertex_count() < 6) return false;
            // co(C_q) with q >= 6 always contains a triangle, so a
            // triangle-free graph cannot contain one.
            bool triangle = false;
            for (int v = 0; v < g.vertex_count() && !triangle; ++v)
                for (int u = g.neighbors(v).first(); u >= 0 && !triangle;
                     u = g.neighbors(v).next(u))
                    triangle = g.neighbors(v).intersects(g.neighbors(u));
            if (!triangle) return false;
            Graph co = complement(g);
            for (int q = 6; q <= g.vertex_count(); ++q)
                if (find_induced_cycle(co, q)) return true;
            return false;
        }
        case Family::PathP164:
            if (g.vertex_count() < 164) return false;
            return find_induced_path(g, 164).has_value();
    }
    return false;
}

bool fits_in_family(const Graph& g, SubFamily fam) {
    switch (fam) {
        case SubFamily::PK2:
            for (const VertexSet& c : components(g))
                if (c.count() > 2) return false;
            return true;
        case SubFamily::P5PlusK1s: {
            Graph host = named_graph("P5");
            for (int i = 0; i < g.vertex_count(); ++i)
                host = disjoint_union(host, Graph(1));
            return find_induced_embedding(host, g).has_value();
        }
        case SubFamily::Complete:
            return is_complete(g);
        case SubFamily::ForestLe6NotK15: {
            if (!is_forest(g) || g.vertex_count() > 6) return false;
            if (g.vertex_count() == 6 && canonical_form(g) == canonical_form(named_graph("K1,5")))
                return false;
            return true;
        }
    }
    return false;
}

} // namespace pairfree
