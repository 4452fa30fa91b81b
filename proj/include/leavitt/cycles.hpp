#pragma once

// Simple-cycle enumeration over directed multigraphs and the combinatorial
// Gelfand-Kirillov dimension, plus the structural graph classes built from
// cycles (no-exit graphs, disjoint cycles, comets, disjoint unions of
// isolated vertices and loops).
//
// GKdim L_K(E) is finite exactly when the cycles of E are pairwise disjoint,
// and then equals max(2*d1 - 1, 2*d2) where d1 is the maximal number of
// cycles in a chain (reachability order) and d2 the maximal number in a chain
// whose terminal cycle has an exit.

#include <optional>
#include <string>

#include "leavitt/graph.hpp"

namespace leavitt {

// Edge sequence e1..en with r(ei) = s(e(i+1)), closing back to s(e1), all
// source vertices distinct. Canonical representative: rooted at the cycle
// vertex with the smallest declaration index. Parallel edges yield cycles
// that share a vertex set but differ as edge sequences.
struct Cycle {
    std::vector<int> edge_seq;
    VertexSet vertices;
    bool has_exit = false;

    int length() const { return static_cast<int>(edge_seq.size()); }
    bool is_loop() const { return length() == 1; }
};

// Tiernan-style enumeration: grow simple paths from each root in index order,
// visiting only vertices above the root, and close when an edge returns to
// it. Each cycle is reported exactly once, rooted at its minimal vertex.
inline std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(g.order(), false);

    auto extend = [&](auto&& self, int root, int at) -> void {
        for (int e : g.out_edges(at)) {
            int w = g.edge(e).dst;
            if (w == root) {
                Cycle c;
                c.edge_seq = path;
                c.edge_seq.push_back(e);
                c.vertices = VertexSet(g.order());
                for (int ce : c.edge_seq) c.vertices.add(g.edge(ce).src);
                cycles.push_back(std::move(c));
            } else if (w > root && !on_path[w]) {
                path.push_back(e);
                on_path[w] = true;
                self(self, root, w);
                on_path[w] = false;
                path.pop_back();
            }
        }
    };

    for (int root = 0; root < g.order(); ++root) {
        on_path[root] = true;
        extend(extend, root, root);
        on_path[root] = false;
    }
    // A cycle vertex occurs exactly once as a source, so any extra out-edge
    // at a cycle vertex is an exit.
    for (Cycle& c : cycles)
        for (int v : c.vertices.members())
            if (g.out_degree(v) > 1) {
                c.has_exit = true;
                break;
            }
    return cycles;
}

// No two distinct cycles share a vertex (cycles from parallel edges count as
// distinct even though their vertex sets coincide).
inline bool has_disjoint_cycles(const Graph& g) {
    auto cycles = enumerate_cycles(g);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j)
            if (!cycles[i].vertices.intersected(cycles[j].vertices).empty()) return false;
    return true;
}

inline bool is_no_exit(const Graph& g) {
    for (const Cycle& c : enumerate_cycles(g))
        if (c.has_exit) return false;
    return true;
}

// Reachability order among the cycles: an arc C -> D when the vertex sets
// differ and some vertex of D is reachable from some vertex of C.
struct CycleChainDag {
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> arcs;  // successor indices per cycle
};

inline CycleChainDag cycle_chain_dag(const Graph& g) {
    CycleChainDag dag;
    dag.cycles = enumerate_cycles(g);
    dag.arcs.assign(dag.cycles.size(), {});
    std::vector<VertexSet> reach;
    reach.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) reach.push_back(tree(g, v));
    for (size_t i = 0; i < dag.cycles.size(); ++i)
        for (size_t j = 0; j < dag.cycles.size(); ++j) {
            if (i == j || dag.cycles[i].vertices == dag.cycles[j].vertices) continue;
            bool reaches = false;
            for (int v : dag.cycles[i].vertices.members()) {
                if (!reach[v].intersected(dag.cycles[j].vertices).empty()) {
                    reaches = true;
                    break;
                }
            }
            if (reaches) dag.arcs[i].push_back(static_cast<int>(j));
        }
    return dag;
}

struct GkValue {
    bool infinite = false;
    int value = 0;  // meaningful only when finite

    bool operator==(const GkValue&) const = default;
    bool leq(int bound) const { return !infinite && value <= bound; }
};

struct GkAnalysis {
    bool disjoint_cycles = true;
    bool no_exit = true;
    int d1 = 0;
    int d2 = 0;
    GkValue gk;
};

inline GkAnalysis gk_analysis(const Graph& g) {
    GkAnalysis a;
    a.disjoint_cycles = has_disjoint_cycles(g);
    a.no_exit = is_no_exit(g);
    if (!a.disjoint_cycles) {
        a.gk.infinite = true;
        return a;
    }
    CycleChainDag dag = cycle_chain_dag(g);
    int n = static_cast<int>(dag.cycles.size());
    // Longest chain ending at each cycle; the reachability order is
    // transitive and, with disjoint cycles, antisymmetric, so memoized DFS
    // terminates.
    std::vector<int> best(n, 0);
    auto longest_to = [&](auto&& self, int i) -> int {
        if (best[i]) return best[i];
        int in_best = 0;
        for (int j = 0; j < n; ++j)
            for (int succ : dag.arcs[j])
                if (succ == i) in_best = std::max(in_best, self(self, j));
        return best[i] = in_best + 1;
    };
    for (int i = 0; i < n; ++i) {
        int len = longest_to(longest_to, i);
        a.d1 = std::max(a.d1, len);
        if (dag.cycles[i].has_exit) a.d2 = std::max(a.d2, len);
    }
    a.gk.value = std::max(2 * a.d1 - 1, 2 * a.d2);
    if (a.gk.value < 0) a.gk.value = 0;
    return a;
}

inline GkValue gk_dimension(const Graph& g) { return gk_analysis(g).gk; }

// Every vertex is isolated or carries exactly one loop and nothing else.
inline bool is_disjoint_vertices_and_loops(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        int out = g.out_degree(v), in = g.in_degree(v);
        if (out == 0 && in == 0) continue;
        if (out == 1 && in == 1) {
            int e = g.out_edges(v)[0];
            if (g.edge(e).dst == v && g.in_edges(v)[0] == e) continue;
        }
        return false;
    }
    return true;
}

// Exactly one cycle, reachable from every vertex, with no exits.
inline bool is_comet(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("comet classification needs a nonempty graph");
    auto cycles = enumerate_cycles(g);
    if (cycles.size() != 1 || cycles[0].has_exit) return false;
    for (int v = 0; v < g.order(); ++v)
        if (tree(g, v).intersected(cycles[0].vertices).empty()) return false;
    return true;
}

// Mutually disjoint cycles, every vertex reaches one of them, no exits.
inline bool is_multiheaded_comet(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("comet classification needs a nonempty graph");
    auto cycles = enumerate_cycles(g);
    if (cycles.empty() || !has_disjoint_cycles(g) || !is_no_exit(g)) return false;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet reach = tree(g, v);
        bool hits = false;
        for (const Cycle& c : cycles)
            if (!reach.intersected(c.vertices).empty()) {
                hits = true;
                break;
            }
        if (!hits) return false;
    }
    return true;
}

}  // namespace leavitt
