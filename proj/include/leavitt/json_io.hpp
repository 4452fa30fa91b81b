#pragma once

// JSON forms of graphs, lattices and series, shared by the CLI and the golden
// corpus. nlohmann::json keeps object keys sorted, which makes every dump
// byte-deterministic.

#include <fstream>

#include "json.hpp"
#include "leavitt/closures.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/monoid.hpp"

namespace leavitt {

using nlohmann::json;

inline Graph parse_graph_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<EdgeDecl> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges"))
            edges.push_back({e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                             e.at("dst").get<std::string>()});
    return Graph::from_parts(std::move(vertices), edges);
}

inline json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_ids();
    j["edges"] = json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({{"id", e.id}, {"src", g.vertex_id(e.src)}, {"dst", g.vertex_id(e.dst)}});
    return j;
}

// Accepts both the line format and the JSON form; a leading '{' selects JSON.
inline Graph parse_graph_any(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_graph_json(text) : parse_graph(text);
    }
    return Graph{};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph_file(const std::string& path) { return parse_graph_any(read_file(path)); }

inline json lattice_to_json(const Graph& g, const HsatLattice& lat) {
    json j;
    j["elements"] = json::array();
    for (const VertexSet& h : lat.elements) j["elements"].push_back(member_ids(g, h));
    j["hasse"] = json::array();
    for (auto [a, b] : lat.hasse) j["hasse"].push_back({a, b});
    j["minimal"] = lat.minimal_nonempty;
    return j;
}

inline json series_to_json(const Graph& g, const CompositionSeries& series) {
    json j;
    j["chain"] = json::array();
    for (const VertexSet& h : series.chain) j["chain"].push_back(member_ids(g, h));
    j["types"] = json::array();
    for (IdealType t : series.types) j["types"].push_back(to_string(t));
    return j;
}

inline json gk_to_json(const GkAnalysis& a) {
    json j;
    j["d1"] = a.d1;
    j["d2"] = a.d2;
    if (a.gk.infinite)
        j["gk"] = "inf";
    else
        j["gk"] = a.gk.value;
    j["disjoint_cycles"] = a.disjoint_cycles;
    j["no_exit"] = a.no_exit;
    return j;
}

}  // namespace leavitt
