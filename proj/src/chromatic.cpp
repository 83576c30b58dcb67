#include "pairfree/chromatic.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_map>

#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/matching.hpp"
#include "pairfree/named.hpp"

namespace pairfree {

namespace {

std::string vertex_list(const std::vector<int>& vs) {
    std::string s = "[";
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "]";
}

// Relabels colors by first occurrence so colors are 0..k-1, all used.
Coloring normalized(const std::vector<int>& raw) {
    Coloring c;
    c.color.assign(raw.size(), -1);
    std::map<int, int> relabel;
    for (size_t v = 0; v < raw.size(); ++v) {
        auto [it, fresh] = relabel.emplace(raw[v], (int)relabel.size());
        c.color[v] = it->second;
        (void)fresh;
    }
    c.k = (int)relabel.size();
    return c;
}

void require_proper(const Graph& g, const Coloring& c, const char* who) {
    if (!is_proper(g, c)) throw InternalError(std::string(who) + " produced an improper coloring");
}

// Greedy clique, by descending degree.  Deterministic; a lower bound for
// omega and a sound precoloring seed.
std::vector<int> greedy_clique(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique) ok = ok && g.has_edge(u, v);
        if (ok) clique.push_back(v);
    }
    return clique;
}

struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;
    int max_used = -1;

    KColorSearch(const Graph& gr, int kk) : g(gr), k(kk), color(gr.vertex_count(), -1) {}

    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (color[v] >= 0) continue;
            uint32_t seen = 0;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && color[u] < 32) seen |= 1u << color[u];
            int sat = __builtin_popcount(seen);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve() {
        int v = pick();
        if (v < 0) return true;
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (int u = g.neighbors(v).first(); u >= 0 && !clash; u = g.neighbors(v).next(u))
                clash = color[u] == c;
            if (clash) continue;
            color[v] = c;
            int prev = max_used;
            max_used = std::max(max_used, c);
            if (solve()) return true;
            max_used = prev;
            color[v] = -1;
        }
        return false;
    }
};

// Greedy DSATUR coloring: upper bound with witness.
std::vector<int> greedy_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            uint64_t seen = 0;
            for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
                if (color[u] >= 0 && color[u] < 64) seen |= uint64_t(1) << color[u];
            int sat = __builtin_popcountll(seen);
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        int c = 0;
        while (true) {
            bool clash = false;
            for (int u = g.neighbors(best).first(); u >= 0 && !clash; u = g.neighbors(best).next(u))
                clash = color[u] == c;
            if (!clash) break;
            ++c;
        }
        color[best] = c;
    }
    return color;
}

// First independent triple in index order, if any.
std::optional<std::array<int, 3>> find_O3(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w)
                if (!g.has_edge(u, w) && !g.has_edge(v, w)) return std::array<int, 3>{u, v, w};
        }
    return std::nullopt;
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    int n = g.vertex_count();
    if ((int)c.color.size() != n) return false;
    std::vector<bool> used(std::max(c.k, 0), false);
    for (int v = 0; v < n; ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.k) return false;
        used[c.color[v]] = true;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (c.color[u] == c.color[v]) return false;
    }
    for (bool b : used)
        if (!b) return false;
    return true;
}

std::optional<Coloring> k_color(const Graph& g, int k) {
    if (k < 0) throw ContractError("k must be nonnegative");
    int n = g.vertex_count();
    if (n == 0) return Coloring{{}, 0};
    if (k == 0) return std::nullopt;
    std::vector<int> clique = greedy_clique(g);
    if ((int)clique.size() > k) return std::nullopt;
    KColorSearch s(g, k);
    for (size_t i = 0; i < clique.size(); ++i) {
        s.color[clique[i]] = (int)i;
        s.max_used = (int)i;
    }
    if (!s.solve()) return std::nullopt;
    Coloring c = normalized(s.color);
    require_proper(g, c, "k_color");
    return c;
}

ChromaticResult chromatic_exact(const Graph& g) {
    int n = g.vertex_count();
    if (n > kExactMaxN)
        throw SizeError("chromatic_exact supports at most " + std::to_string(kExactMaxN) +
                        " vertices, got " + std::to_string(n));
    if (n == 0) return {0, Coloring{{}, 0}};
    Coloring greedy = normalized(greedy_coloring(g));
    int lb = (int)greedy_clique(g).size();
    for (int k = lb; k < greedy.k; ++k)
        if (auto c = k_color(g, k)) return {c->k, *c};
    require_proper(g, greedy, "chromatic_exact");
    return {greedy.k, greedy};
}

ChordalityResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    // Maximum cardinality search, selecting the vertex with the most visited
    // neighbors each round; the reverse selection order is the candidate
    // perfect elimination order.
    std::vector<int> weight(n, 0), selected;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        selected.push_back(best);
        for (int u = g.neighbors(best).first(); u >= 0; u = g.neighbors(best).next(u))
            if (!done[u]) ++weight[u];
    }
    std::vector<int> order(selected.rbegin(), selected.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    // Verify: later neighbors of each vertex must form a clique; it suffices
    // to check them against the earliest later neighbor.
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        int anchor = -1;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (pos[u] > i && (anchor < 0 || pos[u] < pos[anchor])) anchor = u;
        if (anchor < 0) continue;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (pos[u] > pos[anchor] && !g.has_edge(anchor, u)) return {false, {}};
    }
    return {true, order};
}

Coloring color_chordal(const Graph& g) {
    auto [chordal, order] = is_chordal(g);
    if (!chordal) throw ContractError("color_chordal requires a chordal graph");
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<char> seen(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (color[u] >= 0) seen[color[u]] = 1;
        int c = 0;
        while (seen[c]) ++c;
        color[v] = c;
        for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u))
            if (color[u] >= 0) seen[color[u]] = 0;
    }
    Coloring c = normalized(color);
    require_proper(g, c, "color_chordal");
    return c;
}

Coloring color_O3_free(const Graph& g) {
    if (auto triple = find_O3(g))
        throw ContractError("input is not O3-free: vertices " +
                            vertex_list({(*triple)[0], (*triple)[1], (*triple)[2]}) +
                            " are pairwise nonadjacent");
    int n = g.vertex_count();
    if (n == 0) return Coloring{{}, 0};
    std::vector<Edge> matching = max_matching(complement(g));
    std::vector<int> partner(n, -1);
    for (auto [u, v] : matching) {
        partner[u] = v;
        partner[v] = u;
    }
    std::vector<int> color(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        color[v] = next;
        if (partner[v] >= 0) color[partner[v]] = next;
        ++next;
    }
    Coloring c = normalized(color);
    require_proper(g, c, "color_O3_free");
    if (c.k != n - (int)matching.size())
        throw InternalError("O3-free coloring size mismatch");
    return c;
}

// ---------------------------------------------------------------------------
// Deletion-set solver.
//
// Families are enumerated per set partition of V into independent parts.
// Outside extensions are tracked as per-twin-group counts: swapping twins is
// an automorphism fixing V, so taking the lowest-indexed members of each
// group loses no family up to isomorphism of the leftover graph.  The
// objective only depends on the union of the family, so a forward DP over
// classes dedups assignments reaching the same count vector, and only
// componentwise-maximal final vectors need an inner-oracle evaluation
// (deleting more never raises chi of a hereditary class).
// ---------------------------------------------------------------------------
namespace {

struct TwinGroups {
    std::vector<std::vector<int>> members; // ascending g-indices
    std::vector<bool> clique;              // true-twin groups are cliques

    int count() const { return (int)members.size(); }
};

TwinGroups twin_groups(const Graph& g, const std::vector<int>& rest) {
    TwinGroups tg;
    std::map<std::vector<uint64_t>, std::vector<int>> closed;
    auto key_of = [&](int v, bool with_self) {
        std::vector<uint64_t> key;
        VertexSet nb = g.neighbors(v);
        if (with_self) nb.set(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) key.push_back(u);
        return key;
    };
    for (int v : rest) closed[key_of(v, true)].push_back(v);
    std::vector<int> leftover;
    for (auto& [key, vs] : closed) {
        if (vs.size() >= 2) {
            tg.members.push_back(vs);
            tg.clique.push_back(true);
        } else {
            leftover.push_back(vs[0]);
        }
    }
    std::map<std::vector<uint64_t>, std::vector<int>> open;
    for (int v : leftover) open[key_of(v, false)].push_back(v);
    for (auto& [key, vs] : open) {
        tg.members.push_back(vs);
        tg.clique.push_back(false);
    }
    // deterministic group order
    std::vector<int> idx(tg.members.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return tg.members[a][0] < tg.members[b][0]; });
    TwinGroups out;
    for (int i : idx) {
        out.members.push_back(tg.members[i]);
        out.clique.push_back(tg.clique[i]);
    }
    return out;
}

using CountVec = std::string; // one byte per group

struct DeletionSearch {
    const Graph& g;
    int p;
    const ChiOracle& inner;
    std::vector<int> v_list;
    std::vector<int> rest;
    TwinGroups groups;
    std::vector<std::vector<bool>> group_adj; // between distinct groups
    std::unordered_map<CountVec, int> inner_chi_memo;

    int best_chi = -1;
    std::vector<std::vector<int>> best_parts; // V-partition of the winner
    std::vector<CountVec> best_deltas;        // per-class extension counts

    DeletionSearch(const Graph& gr, const VertexSet& v, int pp, const ChiOracle& oracle)
        : g(gr), p(pp), inner(oracle) {
        v_list = v.to_vector();
        for (int w = 0; w < g.vertex_count(); ++w)
            if (!v.test(w)) rest.push_back(w);
        groups = twin_groups(g, rest);
        int m = groups.count();
        group_adj.assign(m, std::vector<bool>(m, false));
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                group_adj[a][b] = group_adj[b][a] =
                    g.has_edge(groups.members[a][0], groups.members[b][0]);
    }

    VertexSet union_of(const CountVec& counts) const {
        VertexSet u(g.vertex_count());
        for (int a = 0; a < groups.count(); ++a)
            for (int i = 0; i < (int)(unsigned char)counts[a]; ++i) u.set(groups.members[a][i]);
        return u;
    }

    int inner_chi(const CountVec& counts) {
        auto it = inner_chi_memo.find(counts);
        if (it != inner_chi_memo.end()) return it->second;
        VertexSet drop = union_of(counts);
        for (int w : v_list) drop.set(w);
        Graph remainder = delete_vertices(g, drop).graph;
        int chi = inner(remainder).chi;
        inner_chi_memo.emplace(counts, chi);
        return chi;
    }

    // Enumerate valid extensions for one class (part) given availability.
    // Emits per-group extra counts; total <= p-1; chosen groups pairwise
    // nonadjacent, compatible with the part, cliques capped at one vertex.
    template <typename Emit>
    void extensions(const CountVec& used, const std::vector<bool>& compat, Emit emit) const {
        CountVec delta(groups.count(), (char)0);
        std::vector<int> chosen;
        enumerate_group(0, p - 1, used, compat, delta, chosen, emit);
    }

    template <typename Emit>
    void enumerate_group(int a, int budget, const CountVec& used, const std::vector<bool>& compat,
                         CountVec& delta, std::vector<int>& chosen, Emit emit) const {
        if (a == groups.count()) {
            emit(delta);
            return;
        }
        enumerate_group(a + 1, budget, used, compat, delta, chosen, emit); // take none
        if (!compat[a]) return;
        for (int b : chosen)
            if (group_adj[a][b]) return;
        int avail = (int)groups.members[a].size() - (int)(unsigned char)used[a];
        int cap = std::min(budget, avail);
        if (groups.clique[a]) cap = std::min(cap, 1);
        chosen.push_back(a);
        for (int take = 1; take <= cap; ++take) {
            delta[a] = (char)take;
            enumerate_group(a + 1, budget - take, used, compat, delta, chosen, emit);
        }
        delta[a] = (char)0;
        chosen.pop_back();
    }

    void consider_partition(const std::vector<std::vector<int>>& parts) {
        int t = (int)parts.size();
        // compat[i][a]: group a has no edge towards part i
        std::vector<std::vector<bool>> compat(t, std::vector<bool>(groups.count(), true));
        for (int i = 0; i < t; ++i)
            for (int a = 0; a < groups.count(); ++a)
                for (int w : parts[i])
                    if (g.has_edge(groups.members[a][0], w)) {
                        compat[i][a] = false;
                        break;
                    }
        // forward DP over classes; parent wiring for reconstruction
        CountVec zero(groups.count(), (char)0);
        std::vector<std::map<CountVec, std::pair<CountVec, CountVec>>> layer(t + 1);
        layer[0].emplace(zero, std::make_pair(CountVec{}, CountVec{}));
        for (int i = 0; i < t; ++i) {
            for (const auto& [state, parent] : layer[i]) {
                extensions(state, compat[i], [&](const CountVec& delta) {
                    CountVec next = state;
                    for (int a = 0; a < groups.count(); ++a)
                        next[a] = (char)((unsigned char)next[a] + (unsigned char)delta[a]);
                    layer[i + 1].emplace(next, std::make_pair(state, delta));
                });
            }
        }
        // componentwise-maximal final states only
        std::vector<CountVec> finals;
        for (const auto& [state, parent] : layer[t]) finals.push_back(state);
        auto dominated = [&](const CountVec& s, const CountVec& other) {
            for (int a = 0; a < groups.count(); ++a)
                if ((unsigned char)s[a] > (unsigned char)other[a]) return false;
            return s != other;
        };
        for (const CountVec& state : finals) {
            bool dom = false;
            for (const CountVec& other : finals)
                if (dominated(state, other)) {
                    dom = true;
                    break;
                }
            if (dom) continue;
            int chi = t + inner_chi(state);
            if (best_chi < 0 || chi < best_chi) {
                best_chi = chi;
                best_parts = parts;
                best_deltas.assign(t, CountVec{});
                CountVec cur = state;
                for (int i = t; i > 0; --i) {
                    const auto& [prev, delta] = layer[i].at(cur);
                    best_deltas[i - 1] = delta;
                    cur = prev;
                }
            }
        }
    }

    void run() {
        std::vector<std::vector<int>> parts;
        partitions(0, parts);
        if (best_chi < 0) throw InternalError("deletion-set enumeration found no family");
    }

    void partitions(size_t idx, std::vector<std::vector<int>>& parts) {
        if (idx == v_list.size()) {
            consider_partition(parts);
            return;
        }
        int v = v_list[idx];
        // index-based: recursion below grows and shrinks `parts`
        for (size_t pi = 0; pi < parts.size(); ++pi) {
            bool indep = true;
            for (int w : parts[pi]) indep = indep && !g.has_edge(v, w);
            if (!indep) continue;
            parts[pi].push_back(v);
            partitions(idx + 1, parts);
            parts[pi].pop_back();
        }
        parts.push_back({v});
        partitions(idx + 1, parts);
        parts.pop_back();
    }
};

} // namespace

ChromaticResult solve_with_deletion_set(const Graph& g, const VertexSet& v, int p,
                                        const ChiOracle& inner) {
    if (p < 1) throw ContractError("p must be >= 1");
    if (v.universe() != g.vertex_count()) throw ContractError("deletion set universe mismatch");
    {
        // The inner oracle must accept the plain remainder; surface its
        // complaint as the contract error of this operation.
        Graph remainder = delete_vertices(g, v).graph;
        try {
            inner(remainder);
        } catch (const Error& e) {
            throw ContractError(std::string("deletion remainder rejected by inner oracle: ") +
                                e.what());
        }
    }
    DeletionSearch search(g, v, p, inner);
    search.run();

    // Materialize the winning family and color: family classes first, inner
    // colors after them.
    int t = (int)search.best_parts.size();
    std::vector<int> color(g.vertex_count(), -1);
    CountVec used((size_t)search.groups.count(), (char)0);
    VertexSet all_dropped(g.vertex_count());
    for (int w : search.v_list) all_dropped.set(w);
    for (int i = 0; i < t; ++i) {
        for (int w : search.best_parts[i]) color[w] = i;
        for (int a = 0; a < search.groups.count(); ++a) {
            int take = (int)(unsigned char)search.best_deltas[i][a];
            for (int j = 0; j < take; ++j) {
                int w = search.groups.members[a][(int)(unsigned char)used[a] + j];
                color[w] = i;
                all_dropped.set(w);
            }
            used[a] = (char)((unsigned char)used[a] + take);
        }
    }
    auto [remainder, map] = delete_vertices(g, all_dropped);
    ChromaticResult inner_res = inner(remainder);
    for (int local = 0; local < remainder.vertex_count(); ++local)
        color[map[local]] = t + inner_res.coloring.color[local];
    if (t + inner_res.chi != search.best_chi)
        throw InternalError("deletion-set reconstruction mismatch");
    Coloring c = normalized(color);
    require_proper(g, c, "solve_with_deletion_set");
    if (c.k != search.best_chi) throw InternalError("deletion-set color count mismatch");
    return {search.best_chi, c};
}

PeelResult peel_pendants(const Graph& g) {
    if (!is_connected(g)) throw ContractError("peel_pendants requires a connected graph");
    int n = g.vertex_count();
    VertexSet active = VertexSet::full(n);
    PeelResult out;
    while (active.count() >= 3) {
        int pendant = -1;
        for (int v = active.first(); v >= 0 && pendant < 0; v = active.next(v))
            if ((g.neighbors(v) & active).count() == 1) pendant = v;
        if (pendant < 0) break;
        int nb = (g.neighbors(pendant) & active).first();
        out.steps.emplace_back(pendant, nb);
        active.reset(pendant);
        ++out.removed;
    }
    auto [graph, map] = induced_subgraph(g, active);
    out.graph = std::move(graph);
    out.index_map = std::move(map);
    return out;
}

C5Decomposition decompose_C5(const Graph& g, const VertexSet& c) {
    if (!is_connected(g)) throw ContractError("decompose_C5 requires a connected graph");
    static const std::vector<Graph> obstructions = {named_graph("P5"), named_graph("C4")};
    if (auto w = find_forbidden(g, obstructions))
        throw ContractError(std::string("input is not {P5,C4}-free: induced ") +
                            (w->pattern_index == 0 ? "P5" : "C4") + " at " +
                            vertex_list(w->map));
    if (c.count() != 5) throw ContractError("cycle set must have five vertices");
    Graph cyc = induced_subgraph(g, c).graph;
    if (!is_simple_cycle(cyc)) throw ContractError("given set does not induce a C5");

    int n = g.vertex_count();
    C5Decomposition d{VertexSet(n), VertexSet(n), {}, {}, {}, {}};
    for (int v = 0; v < n; ++v) {
        if (c.test(v)) continue;
        int on_cycle = (g.neighbors(v) & c).count();
        if (on_cycle == 5)
            d.v1.set(v);
        else if (on_cycle == 3)
            d.v2.set(v);
        else if (on_cycle != 0)
            throw InternalError("vertex " + std::to_string(v) + " has " +
                                std::to_string(on_cycle) +
                                " neighbors on the C5; impossible in a {P5,C4}-free graph");
    }
    VertexSet g2set = d.v1 | d.v2 | c;
    auto [g2, map2] = induced_subgraph(g, g2set);
    if (auto triple = find_O3(g2))
        throw ContractError("decomposition block is not O3-free: vertices " +
                            vertex_list({map2[(*triple)[0]], map2[(*triple)[1]],
                                         map2[(*triple)[2]]}));
    auto [g1, map1] = delete_vertices(g, g2set);
    d.g1 = std::move(g1);
    d.g1_map = std::move(map1);
    d.g2 = std::move(g2);
    d.g2_map = std::move(map2);
    return d;
}

// ---------------------------------------------------------------------------
// Structural class solvers
// ---------------------------------------------------------------------------
namespace {

ChiOracle o3_oracle() {
    return [](const Graph& x) {
        Coloring c = color_O3_free(x);
        return ChromaticResult{c.k, c};
    };
}

ChiOracle chordal_oracle() {
    return [](const Graph& x) {
        Coloring c = color_chordal(x);
        return ChromaticResult{c.k, c};
    };
}

void place(std::vector<int>& out, const std::vector<int>& map, const Coloring& c) {
    for (size_t local = 0; local < map.size(); ++local) out[map[local]] = c.color[local];
}

ChromaticResult assemble_components(const Graph& g,
                                    const std::function<Coloring(const Graph&)>& solve_comp) {
    std::vector<int> color(g.vertex_count(), -1);
    int chi = 0;
    for (const VertexSet& comp : components(g)) {
        auto [h, map] = induced_subgraph(g, comp);
        Coloring c = solve_comp(h);
        place(color, map, c);
        chi = std::max(chi, c.k);
    }
    Coloring c = g.vertex_count() ? normalized(color) : Coloring{{}, 0};
    require_proper(g, c, "component assembly");
    if (c.k != chi) throw InternalError("component color count mismatch");
    return {chi, c};
}

void verify_free(const Graph& g, const char* a, const char* b, const char* who) {
    const std::vector<Graph> pats = {named_graph(a), named_graph(b)};
    if (auto w = find_forbidden(g, pats))
        throw ContractError(std::string(who) + ": input contains induced " +
                            (w->pattern_index == 0 ? a : b) + " at " + vertex_list(w->map));
}

Coloring solve_claw_p5_component(const Graph& h) {
    if (auto chordal = is_chordal(h); chordal.chordal) return color_chordal(h);
    std::optional<std::vector<int>> cycle = find_induced_cycle(h, 4);
    if (!cycle) cycle = find_induced_cycle(h, 5);
    if (!cycle)
        throw InternalError("non-chordal {K1,3,P5}-free component without induced C4 or C5");
    VertexSet v(h.vertex_count());
    for (int w : *cycle) v.set(w);
    return solve_with_deletion_set(h, v, 3, o3_oracle()).coloring;
}

Coloring color_cycle(const Graph& h) {
    // h is a simple cycle; walk it and alternate, odd length closes with a
    // third color.
    int n = h.vertex_count();
    std::vector<int> order{0};
    VertexSet seen = VertexSet::single(n, 0);
    while ((int)order.size() < n) {
        int cur = order.back();
        for (int u = h.neighbors(cur).first(); u >= 0; u = h.neighbors(cur).next(u))
            if (!seen.test(u)) {
                order.push_back(u);
                seen.set(u);
                break;
            }
    }
    std::vector<int> color(n);
    for (int i = 0; i < n; ++i) color[order[i]] = i % 2;
    if (n % 2 == 1) color[order[n - 1]] = 2;
    return normalized(color);
}

Coloring solve_claw_hammer_component(const Graph& h) {
    int n = h.vertex_count();
    if (n == 1) return Coloring{{0}, 1};
    if (n == 2) return h.edge_count() ? Coloring{{0, 1}, 2} : Coloring{{0, 0}, 1};
    if (is_simple_cycle(h)) return color_cycle(h);

    PeelResult peeled = peel_pendants(h);
    if (peeled.removed > 0) {
        Coloring base = solve_claw_hammer_component(peeled.graph);
        std::vector<int> color(n, -1);
        place(color, peeled.index_map, base);
        for (auto it = peeled.steps.rbegin(); it != peeled.steps.rend(); ++it) {
            auto [v, nb] = *it;
            color[v] = color[nb] == 0 ? 1 : 0;
        }
        Coloring c = normalized(color);
        require_proper(h, c, "pendant extension");
        if (c.k != base.k) throw InternalError("pendant extension changed the color count");
        return c;
    }

    if (auto c6 = find_induced_cycle(h, 6)) {
        VertexSet v(n);
        for (int w : *c6) v.set(w);
        // Guard for the p = 4 bound: the rest must be at most three cliques.
        Graph rest = delete_vertices(h, v).graph;
        auto comps = components(rest);
        if (comps.size() > 3) throw InternalError("C6 deletion left more than three components");
        for (const VertexSet& comp : comps)
            if (!is_complete(induced_subgraph(rest, comp).graph))
                throw InternalError("C6 deletion left a non-clique component");
        return solve_with_deletion_set(h, v, 4, chordal_oracle()).coloring;
    }

    std::optional<std::vector<int>> p5 = find_induced_path(h, 5);
    if (!p5) return solve_claw_p5_component(h);

    VertexSet v(n);
    for (int w : *p5) v.set(w);
    Graph rest = delete_vertices(h, v).graph;
    if (find_O3(rest))
        throw InternalError(
            "P5 deletion left an independent triple in a {K1,3,hammer}-free component");
    return solve_with_deletion_set(h, v, 3, o3_oracle()).coloring;
}

Coloring solve_p5_c4_component(const Graph& h) {
    if (auto chordal = is_chordal(h); chordal.chordal) return color_chordal(h);
    auto c5 = find_induced_cycle(h, 5);
    if (!c5) throw InternalError("non-chordal {P5,C4}-free component without induced C5");
    VertexSet cyc(h.vertex_count());
    for (int w : *c5) cyc.set(w);
    C5Decomposition d = decompose_C5(h, cyc);

    Coloring c2 = color_O3_free(d.g2);

    // Block side: v1 is a clique universal to g2, and every edge leaving
    // g2 ends in v1, so chi(h) = max over the two sides of the v1 clique
    // cut: g2, and g1 together with v1.
    VertexSet side1 = (VertexSet::full(h.vertex_count()) - d.v2) - cyc;
    auto [g1x, map1x] = induced_subgraph(h, side1);
    Coloring c1 = solve_p5_c4_component(g1x);

    int k = std::max(c1.k, c2.k);
    std::vector<int> color(h.vertex_count(), -1);
    place(color, map1x, c1);

    // Align g2's palette with the colors the v1 clique already has, then map
    // its remaining colors to free ones.
    std::vector<int> pi(c2.k, -1);
    std::vector<bool> taken(k, false);
    std::vector<int> v1_local; // g2-local indices of v1 vertices
    for (int local = 0; local < d.g2.vertex_count(); ++local)
        if (d.v1.test(d.g2_map[local])) v1_local.push_back(local);
    for (int local : v1_local) {
        int src = c2.color[local];
        int dst = color[d.g2_map[local]];
        if (pi[src] >= 0 && pi[src] != dst) throw InternalError("v1 palette alignment conflict");
        pi[src] = dst;
        taken[dst] = true;
    }
    int cursor = 0;
    for (int src = 0; src < c2.k; ++src) {
        if (pi[src] >= 0) continue;
        while (taken[cursor]) ++cursor;
        pi[src] = cursor;
        taken[cursor] = true;
    }
    for (int local = 0; local < d.g2.vertex_count(); ++local) {
        int v = d.g2_map[local];
        if (d.v1.test(v)) continue; // already colored on the g1 side
        color[v] = pi[c2.color[local]];
    }
    Coloring c = normalized(color);
    require_proper(h, c, "C5 decomposition merge");
    if (c.k != k) throw InternalError("C5 decomposition color count mismatch");
    return c;
}

} // namespace

ChromaticResult solve_claw_p5_free(const Graph& g) {
    verify_free(g, "K1,3", "P5", "solve_claw_p5_free");
    return assemble_components(g, solve_claw_p5_component);
}

ChromaticResult solve_claw_hammer_free(const Graph& g) {
    verify_free(g, "K1,3", "hammer", "solve_claw_hammer_free");
    return assemble_components(g, solve_claw_hammer_component);
}

ChromaticResult solve_p5_c4_free(const Graph& g) {
    verify_free(g, "P5", "C4", "solve_p5_c4_free");
    return assemble_components(g, solve_p5_c4_component);
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Chordal: return "chordal";
        case Method::O3Free: return "o3";
        case Method::ClawP5: return "clawp5";
        case Method::ClawHammer: return "clawhammer";
        case Method::P5C4: return "p5c4";
    }
    return "?";
}

AutoResult chromatic_auto(const Graph& g) {
    if (is_chordal(g).chordal) {
        Coloring c = color_chordal(g);
        return {c.k, c, Method::Chordal};
    }
    if (!find_O3(g)) {
        Coloring c = color_O3_free(g);
        return {c.k, c, Method::O3Free};
    }
    if (is_free(g, {named_graph("K1,3"), named_graph("P5")})) {
        ChromaticResult r = solve_claw_p5_free(g);
        return {r.chi, r.coloring, Method::ClawP5};
    }
    if (is_free(g, {named_graph("K1,3"), named_graph("hammer")})) {
        ChromaticResult r = solve_claw_hammer_free(g);
        return {r.chi, r.coloring, Method::ClawHammer};
    }
    if (is_free(g, {named_graph("P5"), named_graph("C4")})) {
        ChromaticResult r = solve_p5_c4_free(g);
        return {r.chi, r.coloring, Method::P5C4};
    }
    if (g.vertex_count() <= kExactMaxN) {
        ChromaticResult r = chromatic_exact(g);
        return {r.chi, r.coloring, Method::Brute};
    }
    throw UnsupportedError("no solver applies: graph is outside the supported classes and "
                           "too large for exact search");
}

} // namespace pairfree
