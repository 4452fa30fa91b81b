#pragma once

// Finite directed multigraphs with named vertices and edges, the line-based
// text format used by the tools, and the elementary constructions everything
// else builds on (vertex classification, trees, quotients, restrictions,
// covering graphs).
//
// Graphs are immutable after construction and all operations are pure
// functions, so values are safely shareable between concurrent tasks.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace leavitt {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

struct EdgeDecl {
    std::string id;
    std::string src;
    std::string dst;
};

struct Edge {
    std::string id;
    int src;
    int dst;
};

class Graph {
public:
    Graph() = default;

    // Validates uniqueness of ids and that every edge endpoint is declared.
    // Vertex and edge indices follow declaration order; every set produced by
    // the library is emitted in that order for determinism.
    static Graph from_parts(std::vector<std::string> vertices, const std::vector<EdgeDecl>& edges) {
        Graph g;
        g.vertex_ids_ = std::move(vertices);
        for (int i = 0; i < static_cast<int>(g.vertex_ids_.size()); ++i) {
            auto [it, fresh] = g.vertex_index_.emplace(g.vertex_ids_[i], i);
            if (!fresh)
                throw std::invalid_argument("duplicate vertex id: " + g.vertex_ids_[i]);
        }
        g.out_.assign(g.vertex_ids_.size(), {});
        g.in_.assign(g.vertex_ids_.size(), {});
        std::unordered_map<std::string, int> edge_ids;
        for (const auto& decl : edges) {
            if (!edge_ids.emplace(decl.id, static_cast<int>(g.edges_.size())).second)
                throw std::invalid_argument("duplicate edge id: " + decl.id);
            int s = g.vertex_index(decl.src);
            if (s < 0)
                throw std::invalid_argument("edge " + decl.id + " references undeclared vertex " + decl.src);
            int r = g.vertex_index(decl.dst);
            if (r < 0)
                throw std::invalid_argument("edge " + decl.id + " references undeclared vertex " + decl.dst);
            int e = static_cast<int>(g.edges_.size());
            g.edges_.push_back(Edge{decl.id, s, r});
            g.out_[s].push_back(e);
            g.in_[r].push_back(e);
        }
        return g;
    }

    int order() const noexcept { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    bool empty() const noexcept { return vertex_ids_.empty(); }

    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int e) const { return edges_.at(e); }

    int vertex_index(std::string_view id) const {
        auto it = vertex_index_.find(std::string(id));
        return it == vertex_index_.end() ? -1 : it->second;
    }

    int require_vertex(std::string_view id) const {
        int v = vertex_index(id);
        if (v < 0)
            throw std::invalid_argument("unknown vertex: " + std::string(id));
        return v;
    }

    // Edge indices leaving / entering a vertex, in declaration order.
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }
    const std::vector<int>& in_edges(int v) const { return in_.at(v); }
    int out_degree(int v) const { return static_cast<int>(out_.at(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

    bool operator==(const Graph& other) const {
        if (vertex_ids_ != other.vertex_ids_ || edges_.size() != other.edges_.size())
            return false;
        for (size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].id != other.edges_[i].id || edges_[i].src != other.edges_[i].src ||
                edges_[i].dst != other.edges_[i].dst)
                return false;
        return true;
    }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, int> vertex_index_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Subset of a specific graph's vertices, tied to it by universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(universe, false) {}

    static VertexSet all(int universe) {
        VertexSet s(universe);
        s.bits_.assign(universe, true);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const noexcept { return static_cast<int>(bits_.size()); }
    bool contains(int v) const { return v >= 0 && v < universe() && bits_[v]; }

    void add(int v) { bits_.at(v) = true; }
    void remove(int v) { bits_.at(v) = false; }

    int size() const {
        return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
    }
    bool empty() const { return size() == 0; }
    bool full() const { return size() == universe(); }

    bool subset_of(const VertexSet& other) const {
        check_universe(other);
        for (int v = 0; v < universe(); ++v)
            if (bits_[v] && !other.bits_[v]) return false;
        return true;
    }

    VertexSet united(const VertexSet& other) const {
        check_universe(other);
        VertexSet r(universe());
        for (int v = 0; v < universe(); ++v) r.bits_[v] = bits_[v] || other.bits_[v];
        return r;
    }

    VertexSet intersected(const VertexSet& other) const {
        check_universe(other);
        VertexSet r(universe());
        for (int v = 0; v < universe(); ++v) r.bits_[v] = bits_[v] && other.bits_[v];
        return r;
    }

    VertexSet complement() const {
        VertexSet r(universe());
        for (int v = 0; v < universe(); ++v) r.bits_[v] = !bits_[v];
        return r;
    }

    // Ascending index = declaration order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 0; v < universe(); ++v)
            if (bits_[v]) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& other) const { return bits_ == other.bits_; }
    bool operator<(const VertexSet& other) const { return bits_ < other.bits_; }

private:
    void check_universe(const VertexSet& other) const {
        if (other.universe() != universe())
            throw std::invalid_argument("vertex sets belong to different graphs");
    }

    std::vector<bool> bits_;
};

inline VertexSet vertex_set_from_ids(const Graph& g, const std::vector<std::string>& ids) {
    VertexSet s(g.order());
    for (const auto& id : ids) s.add(g.require_vertex(id));
    return s;
}

inline std::vector<std::string> member_ids(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    for (int v : s.members()) out.push_back(g.vertex_id(v));
    return out;
}

struct VertexClassification {
    VertexSet sinks;     // no outgoing edges
    VertexSet sources;   // no incoming edges
    VertexSet regular;   // complement of sinks (all graphs here are finite)
    VertexSet isolated;  // sinks ∩ sources
};

inline VertexClassification classify_vertices(const Graph& g) {
    VertexClassification c{VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order()),
                           VertexSet(g.order())};
    for (int v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) == 0)
            c.sinks.add(v);
        else
            c.regular.add(v);
        if (g.in_degree(v) == 0) c.sources.add(v);
    }
    c.isolated = c.sinks.intersected(c.sources);
    return c;
}

// E(X,Y): edges with source in X and range in Y, in declaration order.
inline std::vector<int> edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.universe() != g.order() || y.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (x.contains(g.edge(e).src) && y.contains(g.edge(e).dst)) out.push_back(e);
    return out;
}

// T(v): v together with everything reachable from it by a directed path.
// Reflexive by convention; every use downstream relies on v ∈ T(v).
inline VertexSet tree(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    VertexSet seen(g.order());
    std::vector<int> stack{v};
    seen.add(v);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : g.out_edges(x)) {
            int w = g.edge(e).dst;
            if (!seen.contains(w)) {
                seen.add(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

// Connectivity of the underlying undirected graph.
inline bool is_connected(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("connectivity is undefined for the empty graph");
    std::vector<std::vector<int>> adj(g.order());
    for (const Edge& e : g.edges()) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<bool> seen(g.order(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : adj[x])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.order();
}

// H hereditary: no edge leaves H.
inline bool is_hereditary(const Graph& g, const VertexSet& h) {
    if (h.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
    for (const Edge& e : g.edges())
        if (h.contains(e.src) && !h.contains(e.dst)) return false;
    return true;
}

// H saturated: every regular vertex whose out-edge ranges all lie in H is in H.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
    if (h.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
    for (int v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) == 0 || h.contains(v)) continue;
        bool all_in = true;
        for (int e : g.out_edges(v))
            if (!h.contains(g.edge(e).dst)) {
                all_in = false;
                break;
            }
        if (all_in) return false;
    }
    return true;
}

namespace detail {
inline void require_hsat(const Graph& g, const VertexSet& h, const char* name) {
    if (!is_hereditary(g, h))
        throw std::invalid_argument(std::string(name) + " is not hereditary");
    if (!is_saturated(g, h))
        throw std::invalid_argument(std::string(name) + " is not saturated");
}
}  // namespace detail

// Quotient graph H2/H1: vertices H2∖H1, edges {e : s(e) ∈ H2, r(e) ∉ H1}.
// Both sets must be hereditary saturated with H1 ⊆ H2, which guarantees all
// surviving edge endpoints lie in H2∖H1.
inline Graph quotient_graph(const Graph& g, const VertexSet& h2, const VertexSet& h1) {
    detail::require_hsat(g, h2, "H2");
    detail::require_hsat(g, h1, "H1");
    if (!h1.subset_of(h2)) throw std::invalid_argument("H1 is not contained in H2");
    std::vector<std::string> vertices;
    for (int v : h2.members())
        if (!h1.contains(v)) vertices.push_back(g.vertex_id(v));
    std::vector<EdgeDecl> edges;
    for (const Edge& e : g.edges())
        if (h2.contains(e.src) && !h1.contains(e.dst))
            edges.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.dst)});
    return Graph::from_parts(std::move(vertices), edges);
}

// Subgraph on a hereditary set: vertices H and every edge with source in H.
inline Graph restriction(const Graph& g, const VertexSet& h) {
    if (h.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
    if (!is_hereditary(g, h)) throw std::invalid_argument("restriction requires a hereditary set");
    std::vector<std::string> vertices = member_ids(g, h);
    std::vector<EdgeDecl> edges;
    for (const Edge& e : g.edges())
        if (h.contains(e.src)) edges.push_back({e.id, g.vertex_id(e.src), g.vertex_id(e.dst)});
    return Graph::from_parts(std::move(vertices), edges);
}

// Finite window [lo,hi] of the Z-indexed covering graph: vertices v@n, edges
// e@n from s(e)@n to r(e)@(n+1); edges whose range index would exceed hi are
// omitted. Always acyclic since every edge strictly increases the index.
inline Graph covering_graph(const Graph& g, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("covering window is empty (lo > hi)");
    auto tag = [](const std::string& id, int n) { return id + "@" + std::to_string(n); };
    std::vector<std::string> vertices;
    for (int n = lo; n <= hi; ++n)
        for (const auto& id : g.vertex_ids()) vertices.push_back(tag(id, n));
    std::vector<EdgeDecl> edges;
    for (int n = lo; n + 1 <= hi; ++n)
        for (const Edge& e : g.edges())
            edges.push_back({tag(e.id, n), tag(g.vertex_id(e.src), n), tag(g.vertex_id(e.dst), n + 1)});
    return Graph::from_parts(std::move(vertices), edges);
}

// Line format: `vertex <id>`, `edge <id> <src> <dst>`, `#` comments and blank
// lines ignored. Ids are arbitrary non-whitespace tokens; vertices must be
// declared before an edge references them.
inline Graph parse_graph(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<EdgeDecl> edges;
    std::unordered_map<std::string, int> seen_vertices;
    std::unordered_map<std::string, int> seen_edges;

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword) || keyword[0] == '#') continue;
        if (keyword == "vertex") {
            std::string id, extra;
            if (!(ls >> id)) throw parse_error(lineno, "vertex declaration needs an id");
            if (ls >> extra) throw parse_error(lineno, "trailing tokens after vertex id");
            if (!seen_vertices.emplace(id, lineno).second)
                throw parse_error(lineno, "duplicate vertex id: " + id);
            vertices.push_back(id);
        } else if (keyword == "edge") {
            std::string id, src, dst, extra;
            if (!(ls >> id >> src >> dst))
                throw parse_error(lineno, "edge declaration needs an id, a source and a range");
            if (ls >> extra) throw parse_error(lineno, "trailing tokens after edge declaration");
            if (!seen_edges.emplace(id, lineno).second)
                throw parse_error(lineno, "duplicate edge id: " + id);
            if (!seen_vertices.count(src))
                throw parse_error(lineno, "edge " + id + " references undeclared vertex " + src);
            if (!seen_vertices.count(dst))
                throw parse_error(lineno, "edge " + id + " references undeclared vertex " + dst);
            edges.push_back({id, src, dst});
        } else {
            throw parse_error(lineno, "unknown declaration: " + keyword);
        }
    }
    return Graph::from_parts(std::move(vertices), edges);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& id : g.vertex_ids()) out << "vertex " << id << "\n";
    for (const Edge& e : g.edges())
        out << "edge " << e.id << " " << g.vertex_id(e.src) << " " << g.vertex_id(e.dst) << "\n";
    return out.str();
}

}  // namespace leavitt
