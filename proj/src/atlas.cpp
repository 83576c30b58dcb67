#include "pairfree/atlas.hpp"

#include <algorithm>
#include <mutex>

#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"

namespace pairfree {

namespace {

constexpr int kEnumMaxN = 7;

// Extends every graph in `layer` by one new vertex wired to each subset of
// the old vertices allowed by `allow` (nonempty subsets when growing
// connected graphs), deduplicating up to isomorphism.
template <typename Keep>
std::vector<Graph> augment_layer(const std::vector<Graph>& layer, bool nonempty_neighborhoods,
                                 Keep keep) {
    GraphSet next;
    for (const Graph& g : layer) {
        int n = g.vertex_count();
        for (unsigned mask = nonempty_neighborhoods ? 1 : 0; mask < (1u << n); ++mask) {
            Graph h(n + 1);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) h.add_edge(v, n);
            if (!keep(h)) continue;
            next.insert(h);
        }
    }
    return next.to_vector();
}

int leaf_count(const Graph& g, const VertexSet& comp) {
    int leaves = 0;
    for (int v = comp.first(); v >= 0; v = comp.next(v))
        if (g.degree(v) == 1) ++leaves;
    return leaves;
}

bool forest_constraint_ok(const Graph& g, ForestConstraint c) {
    switch (c) {
        case ForestConstraint::None:
            return true;
        case ForestConstraint::MaxDegree3:
            return g.max_degree() <= 3;
        case ForestConstraint::Max3LeavesPerComponent:
            for (const VertexSet& comp : components(g))
                if (leaf_count(g, comp) > 3) return false;
            return true;
    }
    return true;
}

// Trees with exactly `edge_target` edges satisfying the constraint, grown by
// leaf augmentation (every tree arises by repeatedly attaching leaves).
std::vector<Graph> trees_with_edges(int edge_target, ForestConstraint c) {
    std::vector<Graph> layer = {Graph::from_edge_list(2, {{0, 1}})}; // K2
    for (int e = 1; e < edge_target; ++e) {
        GraphSet next;
        for (const Graph& t : layer) {
            int n = t.vertex_count();
            for (int attach = 0; attach < n; ++attach) {
                Graph h(n + 1);
                for (auto [u, v] : t.edges()) h.add_edge(u, v);
                h.add_edge(attach, n);
                next.insert(h);
            }
        }
        layer = next.to_vector();
    }
    std::vector<Graph> out;
    for (const Graph& t : layer)
        if (forest_constraint_ok(t, c)) out.push_back(t);
    return out;
}

// All multisets of constraint-satisfying trees with total edge count in
// 1..max_edges.
void combine_forests(const std::vector<std::vector<Graph>>& trees_by_edges, int max_edges,
                     int min_tree_edges, const Graph& acc, GraphSet& out) {
    if (acc.vertex_count() > 0) out.insert(acc);
    int used = acc.edge_count();
    for (int e = min_tree_edges; used + e <= max_edges; ++e)
        for (const Graph& t : trees_by_edges[e])
            combine_forests(trees_by_edges, max_edges, e, disjoint_union(acc, t), out);
}

GraphSet compute_class_members(ClassId cls, int max_n) {
    GraphSet out;
    switch (cls) {
        case ClassId::F:
        case ClassId::S: {
            ForestConstraint c = cls == ClassId::S ? ForestConstraint::Max3LeavesPerComponent
                                                   : ForestConstraint::None;
            // Base forests without isolated vertices, padded with K1's.
            GraphSet bases = max_n >= 2 ? enumerate_forests(max_n - 1, c) : GraphSet{};
            std::vector<Graph> base_list = bases.to_vector();
            base_list.push_back(Graph(0)); // pad-only members O_k
            for (const Graph& b : base_list)
                for (int total = std::max(1, b.vertex_count()); total <= max_n; ++total) {
                    Graph g = b;
                    for (int i = b.vertex_count(); i < total; ++i) g = disjoint_union(g, Graph(1));
                    out.insert(g);
                }
            break;
        }
        case ClassId::T:
        case ClassId::TPrime: {
            ForestConstraint c = cls == ClassId::T ? ForestConstraint::Max3LeavesPerComponent
                                                   : ForestConstraint::MaxDegree3;
            // A forest with m edges yields an m-vertex line graph.
            for (const Graph& f : enumerate_forests(max_n, c).to_vector())
                out.insert(line_graph(f));
            break;
        }
        case ClassId::CoT:
            for (const Graph& t : class_members(ClassId::T, max_n).to_vector())
                out.insert(complement(t));
            break;
    }
    return out;
}

} // namespace

const char* class_id_name(ClassId cls) {
    switch (cls) {
        case ClassId::F: return "F";
        case ClassId::S: return "S";
        case ClassId::T: return "T";
        case ClassId::TPrime: return "T'";
        case ClassId::CoT: return "co(T)";
    }
    return "?";
}

bool GraphSet::insert(const Graph& g) {
    return members_.emplace(detail::canonical_key(g), g).second;
}

bool GraphSet::contains(const Graph& g) const { return contains_form(detail::canonical_key(g)); }

std::vector<Graph> GraphSet::to_vector() const {
    std::vector<Graph> out;
    out.reserve(members_.size());
    for (const auto& [form, g] : members_) out.push_back(g);
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        return a.vertex_count() < b.vertex_count();
    });
    return out;
}

GraphSet enumerate_connected(int max_n) {
    if (max_n < 1) throw ContractError("max_n must be >= 1");
    if (max_n > kEnumMaxN)
        throw SizeError("enumerate_connected supports max_n <= " + std::to_string(kEnumMaxN));
    GraphSet out;
    std::vector<Graph> layer = {Graph(1)};
    out.insert(layer[0]);
    for (int n = 2; n <= max_n; ++n) {
        layer = augment_layer(layer, true, [](const Graph&) { return true; });
        for (const Graph& g : layer) out.insert(g);
    }
    return out;
}

GraphSet enumerate_forests(int max_edges, ForestConstraint constraint) {
    if (max_edges < 1) throw ContractError("max_edges must be >= 1");
    if (max_edges > kEnumMaxN)
        throw SizeError("enumerate_forests supports max_edges <= " + std::to_string(kEnumMaxN));
    std::vector<std::vector<Graph>> trees_by_edges(max_edges + 1);
    for (int e = 1; e <= max_edges; ++e) trees_by_edges[e] = trees_with_edges(e, constraint);
    GraphSet out;
    combine_forests(trees_by_edges, max_edges, 1, Graph(0), out);
    return out;
}

GraphSet class_members(ClassId cls, int max_n) {
    if (max_n < 1) throw ContractError("max_n must be >= 1");
    if (max_n > kEnumMaxN)
        throw SizeError("class_members supports max_n <= " + std::to_string(kEnumMaxN));
    // Memoized: enumerations are pure and reused heavily by in_class.
    static std::mutex mu;
    static std::map<std::pair<ClassId, int>, GraphSet> cache;
    auto key = std::make_pair(cls, max_n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GraphSet computed = compute_class_members(cls, max_n); // may recurse (CoT -> T)
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(computed)).first->second;
}

bool in_class(const Graph& g, ClassId cls) {
    switch (cls) {
        case ClassId::F:
            return is_forest(g);
        case ClassId::S: {
            if (!is_forest(g)) return false;
            for (const VertexSet& comp : components(g))
                if (leaf_count(g, comp) > 3) return false;
            return true;
        }
        case ClassId::T:
        case ClassId::TPrime:
        case ClassId::CoT: {
            int n = g.vertex_count();
            if (n == 0) return false;
            if (n > kEnumMaxN)
                throw SizeError(std::string("membership in ") + class_id_name(cls) +
                                " is lookup-based and supports at most " +
                                std::to_string(kEnumMaxN) + " vertices");
            return class_members(cls, n).contains(g);
        }
    }
    return false;
}

std::vector<Graph> enumerate_free_connected(const std::vector<Graph>& patterns, int max_n) {
    if (max_n < 1) throw ContractError("max_n must be >= 1");
    if (max_n > kCanonicalMaxN)
        throw SizeError("enumerate_free_connected supports max_n <= " +
                        std::to_string(kCanonicalMaxN));
    std::vector<Graph> all;
    std::vector<Graph> layer = {Graph(1)};
    if (is_free(layer[0], patterns)) all.push_back(layer[0]);
    for (int n = 2; n <= max_n; ++n) {
        layer = augment_layer(layer, true,
                              [&](const Graph& h) { return is_free(h, patterns); });
        all.insert(all.end(), layer.begin(), layer.end());
    }
    return all;
}

} // namespace pairfree
