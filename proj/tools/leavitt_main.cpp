// Command line front end: classify graphs, inspect lattices, series, GK
// dimension, balloons and monoid element order, run the golden corpus, and
// sweep the randomized property suite.
//
// Exit codes: 0 success, 1 verdict-level consistency or property failure,
// 2 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "leavitt/report.hpp"

using namespace leavitt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInputError = 2;

std::vector<int> parse_chars(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(FieldChar(std::stoi(token)).p);
    }
    if (out.empty()) throw std::invalid_argument("no characteristics given");
    return out;
}

void print_report_text(const json& r, std::ostream& out) {
    out << "graph " << r.at("graph").get<std::string>() << " (char " << r.at("char") << ")\n";
    auto flag = [&](const char* name) {
        out << "  " << name << ": " << (r.at(name).get<bool>() ? "yes" : "no") << "\n";
    };
    flag("simple");
    flag("graded_simple");
    flag("lie_solvable");
    flag("lie_nilpotent");
    flag("commutator_zero");
    const auto& ls = r.at("lie_simple");
    out << "  lie_simple: "
        << (ls.at("verdict").is_null() ? "n/a" : ls.at("verdict").get<bool>() ? "yes" : "no")
        << " (branch " << ls.at("branch").get<std::string>() << ")\n";
    out << "  gk: " << (r.at("gk").is_string() ? r.at("gk").get<std::string>()
                                               : std::to_string(r.at("gk").get<int>()))
        << "\n";
    out << "  series types:";
    for (const auto& t : r.at("series_types")) out << " " << t.get<std::string>();
    out << "\n";
    int bad = 0;
    for (const auto& c : r.at("consistency"))
        if (!c.at("ok").get<bool>()) ++bad;
    out << "  consistency: " << (bad == 0 ? "all checks hold" : std::to_string(bad) + " violated")
        << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classify finite directed graphs by the algebraic structure of their "
                 "Leavitt path algebras and talented monoids"};
    app.require_subcommand(1);

    std::string path, format = "json";
    int characteristic = 0;
    int depth = 10;

    auto* classify = app.add_subcommand("classify", "full classification report");
    classify->add_option("file", path)->required();
    classify->add_option("--char", characteristic, "field characteristic (0 or a prime)");
    classify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* gkdim = app.add_subcommand("gkdim", "Gelfand-Kirillov dimension and cycle chains");
    gkdim->add_option("file", path)->required();

    auto* lattice = app.add_subcommand("lattice", "hereditary saturated lattice");
    lattice->add_option("file", path)->required();

    auto* series = app.add_subcommand("series", "composition series of the talented monoid");
    series->add_option("file", path)->required();

    std::string balloon_vertex, balloon_over;
    auto* balloon = app.add_subcommand("balloon", "balloon test by both characterizations");
    balloon->add_option("file", path)->required();
    balloon->add_option("--vertex", balloon_vertex)->required();
    balloon->add_option("--over", balloon_over, "comma-separated base vertices")->required();

    std::string lhs, rhs;
    auto* monoid = app.add_subcommand("monoid", "bounded order decisions in the talented monoid");
    monoid->require_subcommand(1);
    auto* monoid_leq = monoid->add_subcommand("leq", "is lhs <= rhs?");
    auto* monoid_eq = monoid->add_subcommand("eq", "are lhs and rhs equal?");
    for (auto* sub : {monoid_leq, monoid_eq}) {
        sub->add_option("lhs", lhs)->required();
        sub->add_option("rhs", rhs)->required();
        sub->add_option("file", path)->required();
        sub->add_option("--depth", depth);
    }

    std::string corpus_dir;
    auto* corpus = app.add_subcommand("corpus", "golden corpus tools");
    auto* corpus_run = corpus->add_subcommand("run", "compare reports against goldens");
    corpus_run->add_option("dir", corpus_dir)->required();
    corpus->require_subcommand(1);

    int prop_n = 1000;
    std::uint64_t prop_seed = 42;
    int prop_max_vertices = 8, prop_max_edges = 16;
    std::string prop_chars = "0,2,3", prop_out = ".";
    auto* prop = app.add_subcommand("prop", "randomized paired-characterization property suite");
    prop->add_option("--n", prop_n);
    prop->add_option("--seed", prop_seed);
    prop->add_option("--chars", prop_chars);
    prop->add_option("--max-vertices", prop_max_vertices);
    prop->add_option("--max-edges", prop_max_edges);
    prop->add_option("--out", prop_out, "directory for counterexample graph files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) {
            Graph g = load_graph_file(path);
            ReportOptions opts;
            opts.k = FieldChar(characteristic);
            json report = build_report(g, std::filesystem::path(path).stem().string(), opts);
            if (format == "text")
                print_report_text(report, std::cout);
            else
                std::cout << report.dump(2) << "\n";
            return report_consistency_clean(report) ? kExitOk : kExitInconsistent;
        }
        if (*gkdim) {
            std::cout << gk_to_json(gk_analysis(load_graph_file(path))).dump(2) << "\n";
            return kExitOk;
        }
        if (*lattice) {
            Graph g = load_graph_file(path);
            std::cout << lattice_to_json(g, hsat_lattice(g)).dump(2) << "\n";
            return kExitOk;
        }
        if (*series) {
            Graph g = load_graph_file(path);
            std::cout << series_to_json(g, composition_series(g)).dump(2) << "\n";
            return kExitOk;
        }
        if (*balloon) {
            Graph g = load_graph_file(path);
            int v = g.require_vertex(balloon_vertex);
            VertexSet base(g.order());
            std::istringstream in(balloon_over);
            std::string token;
            while (std::getline(in, token, ','))
                if (!token.empty()) base.add(g.require_vertex(token));
            json j;
            j["vertex"] = balloon_vertex;
            j["over"] = member_ids(g, base);
            j["balloon"] = is_balloon(g, v, base);
            j["balloon_monoid"] = is_balloon_monoid(g, v, base);
            j["agree"] = j["balloon"] == j["balloon_monoid"];
            std::cout << j.dump(2) << "\n";
            return j["agree"].get<bool>() ? kExitOk : kExitInconsistent;
        }
        if (*monoid) {
            Graph g = load_graph_file(path);
            MonoidElement a = parse_monoid_element(g, lhs);
            MonoidElement b = parse_monoid_element(g, rhs);
            TriState result = *monoid_leq ? bounded_leq(g, a, b, depth) : bounded_equal(g, a, b, depth);
            json j;
            j["op"] = *monoid_leq ? "leq" : "eq";
            j["depth"] = depth;
            j["lhs"] = lhs;
            j["rhs"] = rhs;
            j["result"] = to_string(result);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*corpus_run) {
            CorpusResult result = run_corpus(corpus_dir);
            for (const CorpusEntry& e : result.entries)
                std::cout << (e.ok ? "PASS " : "FAIL ") << e.name
                          << (e.note.empty() ? "" : " (" + e.note + ")") << "\n";
            std::cout << "passed " << result.passed << "/" << result.total << "\n";
            return result.passed == result.total ? kExitOk : kExitInconsistent;
        }
        if (*prop) {
            PropConfig config;
            config.cases = prop_n;
            config.seed = prop_seed;
            config.max_vertices = prop_max_vertices;
            config.max_edges = prop_max_edges;
            config.chars = parse_chars(prop_chars);
            PropReport report = run_property_suite(config);
            std::cout << prop_to_json(report).dump(2) << "\n";
            int index = 0;
            for (const PropFinding& f : report.findings) {
                auto file = std::filesystem::path(prop_out) /
                            ("counterexample_" + f.check + "_" + std::to_string(index++) + ".graph");
                std::ofstream out(file);
                out << f.graph_text;
                std::cerr << "counterexample written to " << file.string() << "\n";
            }
            return report.findings.empty() ? kExitOk : kExitInconsistent;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
