#include "pairfree/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pairfree/atlas.hpp"
#include "pairfree/chromatic.hpp"
#include "pairfree/classifier.hpp"
#include "pairfree/embedding.hpp"
#include "pairfree/errors.hpp"
#include "pairfree/gadgets.hpp"
#include "pairfree/named.hpp"

namespace pairfree::cli {

namespace {

using nlohmann::json;

std::string hex_form(const CanonicalForm& f) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char b : f) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

json edges_json(const Graph& g) {
    json arr = json::array();
    for (auto [u, v] : g.edges()) arr.push_back(json::array({u, v}));
    return arr;
}

json set_json(const VertexSet& s) {
    json arr = json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

int cmd_chromatic(const std::string& garg, const std::string& method, std::ostream& out) {
    Graph g = parse_graph_arg(garg);
    int chi = 0;
    Coloring coloring;
    std::string tag = method;
    if (method == "auto") {
        AutoResult r = chromatic_auto(g);
        chi = r.chi;
        coloring = r.coloring;
        tag = method_name(r.method);
    } else if (method == "brute") {
        ChromaticResult r = chromatic_exact(g);
        chi = r.chi;
        coloring = r.coloring;
    } else if (method == "chordal") {
        coloring = color_chordal(g);
        chi = coloring.k;
    } else if (method == "o3") {
        coloring = color_O3_free(g);
        chi = coloring.k;
    } else if (method == "clawp5") {
        ChromaticResult r = solve_claw_p5_free(g);
        chi = r.chi;
        coloring = r.coloring;
    } else if (method == "clawhammer") {
        ChromaticResult r = solve_claw_hammer_free(g);
        chi = r.chi;
        coloring = r.coloring;
    } else if (method == "p5c4") {
        ChromaticResult r = solve_p5_c4_free(g);
        chi = r.chi;
        coloring = r.coloring;
    } else {
        throw ContractError("unknown method '" + method + "'");
    }
    json j{{"chi", chi}, {"coloring", coloring.color}, {"method", tag}};
    out << j.dump() << "\n";
    return 0;
}

int cmd_check_free(const std::string& garg, const std::vector<std::string>& pattern_args,
                   std::ostream& out) {
    Graph g = parse_graph_arg(garg);
    std::vector<Graph> patterns;
    for (const std::string& p : pattern_args) patterns.push_back(parse_graph_arg(p));
    json j;
    if (auto w = find_forbidden(g, patterns)) {
        j["free"] = false;
        j["witness"] = {{"pattern_index", w->pattern_index},
                        {"pattern", pattern_args[w->pattern_index]},
                        {"vertices", w->map}};
    } else {
        j["free"] = true;
    }
    out << j.dump() << "\n";
    return 0;
}

int cmd_classify(const std::string& a1, const std::string& a2, std::ostream& out) {
    Verdict v = classify_pair(parse_graph_arg(a1), parse_graph_arg(a2));
    json j{{"status", status_name(v.status)}};
    if (v.rule) {
        j["rule"] = v.rule->id;
        j["citation"] = v.rule->citation;
    }
    if (!v.witness.empty()) j["witness"] = v.witness;
    out << j.dump() << "\n";
    return 0;
}

json atlas_row_json(const AtlasRow& row) {
    json j{{"form1", hex_form(row.form1)},
           {"form2", hex_form(row.form2)},
           {"status", status_name(row.verdict.status)}};
    if (!row.name1.empty()) j["name1"] = row.name1;
    if (!row.name2.empty()) j["name2"] = row.name2;
    if (row.verdict.rule) j["rule"] = row.verdict.rule->id;
    return j;
}

int cmd_atlas(int max_n, const std::string& format, std::ostream& out) {
    AtlasTable t = atlas_table(max_n);
    if (format == "json") {
        json rows = json::array();
        for (const AtlasRow& row : t.rows) rows.push_back(atlas_row_json(row));
        json j{{"max_n", max_n}, {"pairs", t.pairs}, {"npc", t.npc},
               {"poly", t.poly},  {"open", t.open},  {"rows", rows}};
        out << j.dump() << "\n";
    } else if (format == "tsv") {
        out << "form1\tname1\tform2\tname2\tstatus\trule\n";
        for (const AtlasRow& row : t.rows)
            out << hex_form(row.form1) << '\t' << row.name1 << '\t' << hex_form(row.form2)
                << '\t' << row.name2 << '\t' << status_name(row.verdict.status) << '\t'
                << (row.verdict.rule ? row.verdict.rule->id : "") << '\n';
        out << "# pairs=" << t.pairs << " npc=" << t.npc << " poly=" << t.poly
            << " open=" << t.open << "\n";
    } else {
        throw ContractError("unknown atlas format '" + format + "'");
    }
    return 0;
}

int cmd_implant(const std::string& garg, std::ostream& out) {
    Graph g = parse_graph_arg(garg);
    ReductionResult r = reduce_to_k14_bull_free(g);
    json trace = json::array();
    for (const ImplantSite& s : r.trace)
        trace.push_back({{"x", s.x}, {"a", set_json(s.a)}, {"b", set_json(s.b)}});
    json j{{"n", r.graph.vertex_count()},
           {"edges", edges_json(r.graph)},
           {"steps", (int)r.trace.size()},
           {"trace", trace}};
    out << j.dump() << "\n";
    return 0;
}

int cmd_recognize(const std::string& garg, std::ostream& out) {
    Graph g = parse_graph_arg(garg);
    json j;
    j["n"] = g.vertex_count();
    j["F"] = in_class(g, ClassId::F);
    j["S"] = in_class(g, ClassId::S);
    if (g.vertex_count() <= 7 && g.vertex_count() >= 1) {
        j["T"] = in_class(g, ClassId::T);
        j["T_prime"] = in_class(g, ClassId::TPrime);
        j["co_T"] = in_class(g, ClassId::CoT);
    } else {
        j["T"] = nullptr;      // lookup classes are bounded at 7 vertices
        j["T_prime"] = nullptr;
        j["co_T"] = nullptr;
    }
    j["chordal"] = is_chordal(g).chordal;
    j["O3_free"] = is_free(g, {named_graph("O3")});
    out << j.dump() << "\n";
    return 0;
}

int cmd_catalog(const std::string& cls_arg, int max_n, std::ostream& out) {
    ClassId cls;
    if (cls_arg == "F")
        cls = ClassId::F;
    else if (cls_arg == "S")
        cls = ClassId::S;
    else if (cls_arg == "T")
        cls = ClassId::T;
    else if (cls_arg == "T'" || cls_arg == "T_prime" || cls_arg == "Tprime")
        cls = ClassId::TPrime;
    else if (cls_arg == "co(T)" || cls_arg == "co_T" || cls_arg == "coT")
        cls = ClassId::CoT;
    else
        throw ContractError("unknown class '" + cls_arg + "'; expected F, S, T, T' or co(T)");
    GraphSet members = class_members(cls, max_n);
    int index = 0;
    for (const Graph& g : members.to_vector()) {
        std::string name = g.vertex_count() <= kCanonicalMaxN ? recognized_name(g) : "";
        out << "# " << index++ << (name.empty() ? "" : " " + name) << "\n"
            << format_edge_list(g);
    }
    out << "# total " << index << "\n";
    return 0;
}

} // namespace

Graph parse_graph_arg(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw ParseError("cannot open edge-list file '" + text.substr(1) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_edge_list_text(buf.str());
    }
    return named_graph(text);
}

RunResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"chromatic-number toolkit for two-obstruction graph classes"};
    app.require_subcommand(1);

    std::string g_arg, method = "auto", h1, h2, format = "json", cls;
    std::vector<std::string> patterns;
    int max_n = 5;

    CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic number of a graph");
    chromatic->add_option("graph", g_arg, "graph expression or @file")->required();
    chromatic->add_option("--method", method, "auto|brute|chordal|o3|clawp5|clawhammer|p5c4")
        ->default_val("auto");

    CLI::App* check = app.add_subcommand("check-free", "test induced-subgraph freeness");
    check->add_option("graph", g_arg, "host graph")->required();
    check->add_option("patterns", patterns, "forbidden graphs")->required();

    CLI::App* classify = app.add_subcommand("classify", "complexity of Free({H1,H2})");
    classify->add_option("h1", h1, "first forbidden graph")->required();
    classify->add_option("h2", h2, "second forbidden graph")->required();

    CLI::App* atlas = app.add_subcommand("atlas", "classify all small connected pairs");
    atlas->add_option("--max-n", max_n, "largest vertex count")->default_val(5);
    atlas->add_option("--format", format, "json|tsv")->default_val("json");

    CLI::App* implant = app.add_subcommand("implant", "diamond-implantation reduction");
    implant->add_option("graph", g_arg, "triangle-free graph with degrees <= 4")->required();

    CLI::App* recognize = app.add_subcommand("recognize", "class memberships of a graph");
    recognize->add_option("graph", g_arg, "graph expression or @file")->required();

    CLI::App* catalog = app.add_subcommand("catalog", "dump class members as edge lists");
    catalog->add_option("class", cls, "F, S, T, T' or co(T)")->required();
    catalog->add_option("--max-n", max_n, "largest member size")->default_val(5);

    std::ostringstream out, err;
    RunResult result;
    try {
        std::vector<const char*> argv;
        argv.push_back("pairfree");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse((int)argv.size(), argv.data());

        if (chromatic->parsed())
            result.code = cmd_chromatic(g_arg, method, out);
        else if (check->parsed())
            result.code = cmd_check_free(g_arg, patterns, out);
        else if (classify->parsed())
            result.code = cmd_classify(h1, h2, out);
        else if (atlas->parsed())
            result.code = cmd_atlas(max_n, format, out);
        else if (implant->parsed())
            result.code = cmd_implant(g_arg, out);
        else if (recognize->parsed())
            result.code = cmd_recognize(g_arg, out);
        else if (catalog->parsed())
            result.code = cmd_catalog(cls, max_n, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            result.code = 0;
        } else {
            err << "error: " << e.what() << "\n";
            result.code = 2;
        }
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        result.code = 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        result.code = 2;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace pairfree::cli
