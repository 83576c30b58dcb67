#include "pairfree/named.hpp"

#include <cctype>
#include <map>

#include "pairfree/errors.hpp"

namespace pairfree {

namespace {

// Edge tables for the named five-vertex graphs (and paw), 1-indexed.
const std::map<std::string, std::pair<int, std::vector<Edge>>> kFixedAtoms = {
    {"paw", {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}}}},
    {"fork", {5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}}}},
    {"gem", {5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}}},
    {"hammer", {5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}}}},
    {"bull", {5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}}}},
    {"butterfly", {5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}}}},
};

Graph from_1_indexed(int n, const std::vector<Edge>& edges) {
    std::vector<Edge> shifted;
    shifted.reserve(edges.size());
    for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
    return Graph::from_edge_list(n, shifted);
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", (long)pos);
        ++pos;
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw ParseError("expected a number", (long)start);
        return std::stoi(s.substr(start, pos - start));
    }

    Graph parse_expr() {
        Graph g = parse_term();
        while (peek_is('+')) {
            ++pos;
            g = disjoint_union(g, parse_term());
        }
        return g;
    }

    Graph parse_term() {
        skip_ws();
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            size_t save = pos;
            int k = parse_int();
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                if (k < 1) throw ParseError("repetition count must be >= 1", (long)save);
                Graph unit = parse_atom();
                Graph g = unit;
                for (int i = 1; i < k; ++i) g = disjoint_union(g, unit);
                return g;
            }
            throw ParseError("a bare number needs '*'", (long)save);
        }
        return parse_atom();
    }

    Graph parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression", (long)pos);
        if (s[pos] == '(') {
            ++pos;
            Graph g = parse_expr();
            expect(')');
            return g;
        }
        size_t start = pos;
        if (s.compare(pos, 2, "co") == 0) {
            size_t after = pos + 2;
            while (after < s.size() && std::isspace((unsigned char)s[after])) ++after;
            if (after < s.size() && s[after] == '(') {
                pos = after + 1;
                Graph g = parse_expr();
                expect(')');
                return complement(g);
            }
        }
        // Named atom: letters, then optional numeric parameters.
        size_t p = pos;
        while (p < s.size() && std::isalpha((unsigned char)s[p])) ++p;
        std::string word = s.substr(pos, p - pos);
        if (word.empty()) throw ParseError("expected a graph name", (long)pos);
        pos = p;
        if (auto it = kFixedAtoms.find(word); it != kFixedAtoms.end())
            return from_1_indexed(it->second.first, it->second.second);
        if (word == "P" || word == "C" || word == "K" || word == "O") return parse_family(word[0], start);
        throw ParseError("unknown graph name '" + word + "'", (long)start);
    }

    Graph parse_family(char family, size_t start) {
        int a = parse_int();
        if (family == 'K' && pos < s.size() && s[pos] == ',') {
            ++pos;
            int b = parse_int();
            if (a < 1 || b < 1) throw ParseError("K_{p,q} needs p,q >= 1", (long)start);
            Graph g(a + b);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
            return g;
        }
        if (family == 'K' && s.compare(pos, 2, "-e") == 0) {
            pos += 2;
            if (a < 2) throw ParseError("K_n - e needs n >= 2", (long)start);
            Graph g = complement(Graph(a));
            Graph h(a);
            for (auto [u, v] : g.edges())
                if (!(u == 0 && v == 1)) h.add_edge(u, v);
            return h;
        }
        switch (family) {
            case 'P': {
                if (a < 1) throw ParseError("P_n needs n >= 1", (long)start);
                Graph g(a);
                for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
                return g;
            }
            case 'C': {
                if (a < 3) throw ParseError("C_n needs n >= 3", (long)start);
                Graph g(a);
                for (int i = 0; i < a; ++i) g.add_edge(i, (i + 1) % a);
                return g;
            }
            case 'K': {
                if (a < 1) throw ParseError("K_n needs n >= 1", (long)start);
                return complement(Graph(a));
            }
            case 'O': {
                if (a < 1) throw ParseError("O_n needs n >= 1", (long)start);
                return Graph(a);
            }
        }
        throw ParseError("unknown graph family", (long)start);
    }
};

} // namespace

Graph named_graph(const std::string& spec) {
    Parser p(spec);
    Graph g = p.parse_expr();
    p.skip_ws();
    if (p.pos != spec.size()) throw ParseError("trailing input", (long)p.pos);
    return g;
}

const std::vector<std::string>& named_atoms() {
    static const std::vector<std::string> atoms = {"paw",    "fork", "gem",
                                                   "hammer", "bull", "butterfly"};
    return atoms;
}

} // namespace pairfree
