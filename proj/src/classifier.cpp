#include "pairfree/classifier.hpp"

#include <iostream>
#include <map>
#include <mutex>

#include "pairfree/atlas.hpp"
#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/named.hpp"

namespace pairfree {

namespace {

constexpr int kLimitClassMaxN = 7;

const std::vector<RuleInfo>& npc_rule_table() {
    static const std::vector<RuleInfo> rules = {
        {"N1", Status::NpComplete, "both graphs contain an induced cycle"},
        {"N2", Status::NpComplete, "both graphs contain an induced K1,3"},
        {"N3", Status::NpComplete,
         "one graph contains an induced K1,3 and the other an induced K4 or K4-e"},
        {"N4", Status::NpComplete,
         "one graph contains an induced K1,3 and the other an induced cycle of length >= 4"},
        {"N5", Status::NpComplete,
         "both graphs contain an induced spanning subgraph of 2K2 (2K2, K2+2K1 or O4)"},
        {"N6", Status::NpComplete,
         "one graph contains an induced C3 and the other an induced K1,p with p >= 5"},
        {"N7", Status::NpComplete,
         "one graph contains an induced C3 and the other an induced P164"},
        {"N8", Status::NpComplete,
         "one graph contains an induced cycle of length >= 5 and the other an induced "
         "spanning subgraph of 2K2"},
        {"N9", Status::NpComplete,
         "one graph contains an induced C3+K1, C4+K1 or co(Cq) with q >= 6 and the other an "
         "induced spanning subgraph of 2K2"},
        {"N10", Status::NpComplete,
         "some limit class among F, T' and co(T) contains neither graph"},
        {"N11", Status::NpComplete,
         "one graph contains an induced K1,4 and the other an induced bull"},
    };
    return rules;
}

const std::vector<RuleInfo>& poly_rule_table() {
    static const std::vector<RuleInfo> rules = {
        {"P1", Status::Polynomial,
         "each graph is an induced subgraph of P4 or of P3+K1"},
        {"P2", Status::Polynomial,
         "one graph fits in K1,3 and the other in C3+K1"},
        {"P3", Status::Polynomial,
         "one graph fits in the paw and the other is a forest with at most six vertices "
         "other than K1,5"},
        {"P4", Status::Polynomial,
         "one graph fits in the paw and the other in pK2 or in P5+pK1"},
        {"P5", Status::Polynomial,
         "one graph is complete and the other fits in pK2 or in P5+pK1"},
        {"P6", Status::Polynomial,
         "one graph fits in the gem and the other in P4+K1 or in P5"},
        {"P7", Status::Polynomial,
         "one graph fits in co(P5) and the other in P4+K1 or in 2K2"},
        {"P8", Status::Polynomial, "one of the graphs fits in P4"},
        {"P9", Status::Polynomial, "one graph fits in P5 and the other in K5"},
        {"P10", Status::Polynomial, "one graph fits in P5 and the other in the gem"},
        {"P11", Status::Polynomial, "one graph fits in P5 and the other in C4"},
        {"P12", Status::Polynomial, "one graph fits in P5 and the other in K1,3"},
        {"P13", Status::Polynomial, "one graph fits in K1,4 and the other in the paw"},
        {"P14", Status::Polynomial, "one graph fits in the fork and the other in the paw"},
        {"P15", Status::Polynomial, "one graph fits in K1,3 and the other in the hammer"},
    };
    return rules;
}

struct Pattern {
    const Graph& get(const std::string& spec) const {
        static std::mutex mu;
        static std::map<std::string, Graph> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(spec);
        if (it == cache.end()) it = cache.emplace(spec, named_graph(spec)).first;
        return it->second;
    }
};

bool contains(const Graph& g, const std::string& spec) {
    static const Pattern pat;
    return find_induced_embedding(g, pat.get(spec)).has_value();
}

std::string embedding_witness(const Graph& g, const std::string& spec, const char* side) {
    static const Pattern pat;
    auto m = find_induced_embedding(g, pat.get(spec));
    if (!m) return {};
    std::string s = spec + " in " + side + " at [";
    for (size_t i = 0; i < m->size(); ++i) s += (i ? "," : "") + std::to_string((*m)[i]);
    return s + "]";
}

bool fits(const Graph& g, const std::string& spec) {
    static const Pattern pat;
    return find_induced_embedding(pat.get(spec), g).has_value();
}

struct RuleEval {
    bool fired = false;
    std::string witness;
};

// Symmetric helper: cond1 on one side, cond2 on the other.
template <typename F1, typename F2>
bool cross(const Graph& a, const Graph& b, F1 cond1, F2 cond2) {
    return (cond1(a) && cond2(b)) || (cond1(b) && cond2(a));
}

bool sub_pk2_or_p5k1(const Graph& g) {
    return fits_in_family(g, SubFamily::PK2) || fits_in_family(g, SubFamily::P5PlusK1s);
}

// N10 needs limit-class lookups bounded at 7 vertices.  Returns nullopt when
// the inputs are too large to evaluate.
std::optional<RuleEval> eval_n10(const Graph& a, const Graph& b) {
    if (a.vertex_count() > kLimitClassMaxN || b.vertex_count() > kLimitClassMaxN)
        return std::nullopt;
    for (ClassId cls : {ClassId::F, ClassId::TPrime, ClassId::CoT})
        if (!in_class(a, cls) && !in_class(b, cls))
            return RuleEval{true, std::string("neither graph lies in ") + class_id_name(cls)};
    return RuleEval{false, {}};
}

RuleEval eval_npc(int idx, const Graph& a, const Graph& b, bool& n10_unavailable) {
    auto cyc3 = [](const Graph& g) { return family_contains(g, Family::cycle_ge(3)); };
    auto cyc4 = [](const Graph& g) { return family_contains(g, Family::cycle_ge(4)); };
    auto cyc5 = [](const Graph& g) { return family_contains(g, Family::cycle_ge(5)); };
    auto span = [](const Graph& g) { return family_contains(g, Family::span_2k2()); };
    auto claw = [](const Graph& g) { return contains(g, "K1,3"); };
    auto tri = [](const Graph& g) { return contains(g, "C3"); };
    switch (idx) {
        case 0: return {cyc3(a) && cyc3(b), {}};
        case 1: return {claw(a) && claw(b), {}};
        case 2:
            return {cross(a, b, claw,
                          [](const Graph& g) { return contains(g, "K4") || contains(g, "K4-e"); }),
                    {}};
        case 3: return {cross(a, b, claw, cyc4), {}};
        case 4: return {span(a) && span(b), {}};
        case 5:
            return {cross(a, b, tri,
                          [](const Graph& g) { return family_contains(g, Family::star_ge5()); }),
                    {}};
        case 6:
            return {cross(a, b, tri,
                          [](const Graph& g) { return family_contains(g, Family::path_p164()); }),
                    {}};
        case 7: return {cross(a, b, cyc5, span), {}};
        case 8:
            // span side first: the co-cycle search is the expensive one
            return {cross(a, b, span,
                          [](const Graph& g) {
                              return family_contains(g, Family::cycle_plus_k1()) ||
                                     family_contains(g, Family::co_cycle_ge6());
                          }),
                    {}};
        case 9: {
            auto r = eval_n10(a, b);
            if (!r) {
                n10_unavailable = true;
                return {false, {}};
            }
            return *r;
        }
        case 10:
            return {cross(a, b, [](const Graph& g) { return contains(g, "K1,4"); },
                          [](const Graph& g) { return contains(g, "bull"); }),
                    {}};
    }
    return {false, {}};
}

RuleEval eval_poly(int idx, const Graph& a, const Graph& b) {
    auto pair_rule = [&](const char* s1, const char* s2) {
        return cross(a, b, [&](const Graph& g) { return fits(g, s1); },
                     [&](const Graph& g) { return fits(g, s2); });
    };
    switch (idx) {
        case 0: {
            auto small = [](const Graph& g) { return fits(g, "P4") || fits(g, "P3+K1"); };
            return {small(a) && small(b), {}};
        }
        case 1: return {pair_rule("K1,3", "C3+K1"), {}};
        case 2:
            return {cross(a, b, [](const Graph& g) { return fits(g, "paw"); },
                          [](const Graph& g) {
                              return fits_in_family(g, SubFamily::ForestLe6NotK15);
                          }),
                    {}};
        case 3:
            return {cross(a, b, [](const Graph& g) { return fits(g, "paw"); }, sub_pk2_or_p5k1),
                    {}};
        case 4:
            return {cross(a, b,
                          [](const Graph& g) { return fits_in_family(g, SubFamily::Complete); },
                          sub_pk2_or_p5k1),
                    {}};
        case 5:
            return {cross(a, b, [](const Graph& g) { return fits(g, "gem"); },
                          [](const Graph& g) { return fits(g, "P4+K1") || fits(g, "P5"); }),
                    {}};
        case 6:
            return {cross(a, b, [](const Graph& g) { return fits(g, "co(P5)"); },
                          [](const Graph& g) { return fits(g, "P4+K1") || fits(g, "2*K2"); }),
                    {}};
        case 7: return {fits(a, "P4") || fits(b, "P4"), {}};
        case 8: return {pair_rule("P5", "K5"), {}};
        case 9: return {pair_rule("P5", "gem"), {}};
        case 10: return {pair_rule("P5", "C4"), {}};
        case 11: return {pair_rule("P5", "K1,3"), {}};
        case 12: return {pair_rule("K1,4", "paw"), {}};
        case 13: return {pair_rule("fork", "paw"), {}};
        case 14: return {pair_rule("K1,3", "hammer"), {}};
    }
    return {false, {}};
}

} // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::NpComplete: return "NP_COMPLETE";
        case Status::Polynomial: return "POLYNOMIAL";
        case Status::Open: return "OPEN";
    }
    return "?";
}

const std::vector<RuleInfo>& npc_rules() { return npc_rule_table(); }
const std::vector<RuleInfo>& poly_rules() { return poly_rule_table(); }

Verdict classify_pair(const Graph& h1, const Graph& h2) {
    if (h1.vertex_count() == 0 || h2.vertex_count() == 0)
        throw ContractError("forbidden graphs must be nonempty");

    bool n10_unavailable = false;
    int first_npc = -1;
    std::string npc_witness;
    for (size_t i = 0; i < npc_rule_table().size(); ++i) {
        RuleEval r = eval_npc((int)i, h1, h2, n10_unavailable);
        if (r.fired && first_npc < 0) {
            first_npc = (int)i;
            npc_witness = r.witness;
        }
    }
    if (first_npc >= 0 && npc_witness.empty()) {
        auto both = [&](const std::string& spec) {
            std::string w1 = embedding_witness(h1, spec, "H1");
            std::string w2 = embedding_witness(h2, spec, "H2");
            return w1.empty() || w2.empty() ? std::string{} : w1 + "; " + w2;
        };
        auto either = [&](const std::string& s1, const std::string& s2) {
            std::string w1 = embedding_witness(h1, s1, "H1");
            std::string w2 = embedding_witness(h2, s2, "H2");
            if (!w1.empty() && !w2.empty()) return w1 + "; " + w2;
            w1 = embedding_witness(h2, s1, "H2");
            w2 = embedding_witness(h1, s2, "H1");
            return w1.empty() || w2.empty() ? std::string{} : w1 + "; " + w2;
        };
        switch (first_npc) {
            case 1: npc_witness = both("K1,3"); break;
            case 2:
                npc_witness = either("K1,3", "K4");
                if (npc_witness.empty()) npc_witness = either("K1,3", "K4-e");
                break;
            case 10: npc_witness = either("K1,4", "bull"); break;
            default: break;
        }
    }
    int first_poly = -1;
    std::string poly_witness;
    for (size_t i = 0; i < poly_rule_table().size(); ++i) {
        RuleEval r = eval_poly((int)i, h1, h2);
        if (r.fired && first_poly < 0) {
            first_poly = (int)i;
            poly_witness = r.witness;
        }
    }
    if (first_npc >= 0 && first_poly >= 0)
        throw InternalError(std::string("rule conflict: ") + npc_rule_table()[first_npc].id +
                            " and " + poly_rule_table()[first_poly].id + " both fired");
    if (first_npc >= 0)
        return {Status::NpComplete, &npc_rule_table()[first_npc], npc_witness};
    if (first_poly >= 0)
        return {Status::Polynomial, &poly_rule_table()[first_poly], poly_witness};
    if (n10_unavailable)
        throw SizeError("pair is undecided by the size-free rules and a limit-class "
                        "membership test needs graphs with at most " +
                        std::to_string(kLimitClassMaxN) + " vertices");
    return {Status::Open, nullptr, {}};
}

std::string recognized_name(const Graph& g) {
    static std::mutex mu;
    static std::map<CanonicalForm, std::string> names;
    std::lock_guard<std::mutex> lock(mu);
    if (names.empty()) {
        auto add = [&](const std::string& spec) {
            names.emplace(canonical_form(named_graph(spec)), spec);
        };
        for (int n = 1; n <= 7; ++n) add("K" + std::to_string(n));
        for (int n = 2; n <= 7; ++n) add("P" + std::to_string(n));
        for (int n = 3; n <= 7; ++n) add("C" + std::to_string(n));
        for (int n = 2; n <= 7; ++n) add("O" + std::to_string(n));
        for (int p = 1; p <= 3; ++p)
            for (int q = p; q <= 5; ++q)
                if (p + q <= 7) add("K" + std::to_string(p) + "," + std::to_string(q));
        for (int n = 4; n <= 7; ++n) add("K" + std::to_string(n) + "-e");
        for (const std::string& atom : named_atoms()) add(atom);
        add("co(P5)");
        add("co(fork)");
        add("co(hammer)");
        add("co(bull)");
        add("co(butterfly)");
        add("co(gem)");
        add("co(P4+K1)");
        add("co(P3+P2)");
        add("co(P3+2*K1)");
        add("co(paw+K1)");
        add("co(K3+2*K1)");
        add("co(K3+K2)");
        add("co(2*K2+K1)");
        add("co(K2+3*K1)");
        add("co(C3+K1)");
        add("co(C4+K1)");
    }
    auto it = names.find(canonical_form(g));
    return it == names.end() ? std::string{} : it->second;
}

AtlasTable atlas_table(int max_n) {
    if (max_n < 1) throw ContractError("max_n must be >= 1");
    if (max_n > 7) throw SizeError("atlas universe is bounded at 7 vertices");
    if (max_n > 5)
        std::cerr << "atlas: warning: the tabulated universe stops at 5 vertices; "
                     "results beyond that are rule evaluations only\n";
    std::vector<Graph> universe = enumerate_connected(max_n).to_vector();
    AtlasTable table;
    for (size_t i = 0; i < universe.size(); ++i)
        for (size_t j = i; j < universe.size(); ++j) {
            AtlasRow row;
            row.form1 = canonical_form(universe[i]);
            row.form2 = canonical_form(universe[j]);
            row.name1 = recognized_name(universe[i]);
            row.name2 = recognized_name(universe[j]);
            row.verdict = classify_pair(universe[i], universe[j]);
            switch (row.verdict.status) {
                case Status::NpComplete: ++table.npc; break;
                case Status::Polynomial: ++table.poly; break;
                case Status::Open: ++table.open; break;
            }
            ++table.pairs;
            table.rows.push_back(std::move(row));
        }
    return table;
}

} // namespace pairfree
