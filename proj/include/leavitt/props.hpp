#pragma once

// Per-graph consistency checks pairing the graph-level and monoid-level
// characterizations, and the randomized property suite that sweeps them over
// seeded graphs. Any failure comes with the offending graph serialized
// verbatim so it can be replayed.

#include <map>

#include "leavitt/lie.hpp"
#include "leavitt/random.hpp"

namespace leavitt {

struct CheckOptions {
    std::vector<int> chars = {0, 2, 3};
    int balloon_max_vertices = 6;
    int lattice_max_vertices = 10;
};

struct CheckResult {
    std::string check;
    bool ok = true;
    std::string note;
};

namespace detail {

inline bool all_singleton_ideals(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (order_ideal_vertices(g, v).size() != 1) return false;
    return true;
}

inline bool no_cross_edges(const Graph& g) {
    for (const Edge& e : g.edges())
        if (e.src != e.dst) return false;
    return true;
}

}  // namespace detail

// Every paired characterization evaluated on one graph. Connected-only checks
// are skipped (with a note) on disconnected input.
inline std::vector<CheckResult> run_graph_checks(const Graph& g, const CheckOptions& opts = {}) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string note = "") {
        out.push_back({std::move(name), ok, std::move(note)});
    };

    for (int p : opts.chars) {
        bool graph_route = is_lie_solvable(g, FieldChar(p)).verdict;
        bool monoid_route = is_lie_solvable_monoid(g, FieldChar(p)).verdict;
        add("solvable_routes_agree_char_" + std::to_string(p), graph_route == monoid_route);
        if (graph_route)
            add("solvable_implies_gk_le_1_char_" + std::to_string(p), gk_dimension(g).leq(1));
        if (p != 2)
            add("odd_char_solvable_iff_zero_commutator_char_" + std::to_string(p),
                graph_route == commutator_zero(g));
    }

    try {
        is_lie_nilpotent(g);
        add("nilpotency_routes_agree", true);
    } catch (const std::logic_error&) {
        add("nilpotency_routes_agree", false);
    }

    add("no_exit_iff_gk_le_1", is_no_exit(g) == gk_dimension(g).leq(1));
    add("singleton_ideals_iff_loops_only",
        detail::all_singleton_ideals(g) == detail::no_cross_edges(g));
    add("vertices_and_loops_iff_gk_and_singletons",
        is_disjoint_vertices_and_loops(g) ==
            (gk_dimension(g).leq(1) && detail::all_singleton_ideals(g)));

    if (!g.empty()) {
        CompositionSeries series = composition_series(g);
        bool tame = true, all_cyclic = true;
        for (IdealType t : series.types) {
            if (t == IdealType::comparable) tame = false;
            if (t != IdealType::cyclic) all_cyclic = false;
        }
        bool disjoint = has_disjoint_cycles(g);
        add("disjoint_iff_tame_series", disjoint == tame);
        add("tame_series_iff_finite_gk", tame == !gk_dimension(g).infinite);
        add("cyclic_series_iff_disjoint_no_sinks",
            all_cyclic == (disjoint && classify_vertices(g).sinks.empty()));
    }

    if (!g.empty()) {
        int sinks = classify_vertices(g).sinks.size();
        HsatLattice lat = hsat_lattice(g);
        int acyclic_minimal = 0;
        for (int idx : lat.minimal_nonempty)
            if (enumerate_cycles(restriction(g, lat.elements[idx])).empty()) ++acyclic_minimal;
        add("sinks_match_acyclic_minimal_ideals", sinks == acyclic_minimal);
    }

    if (g.order() <= opts.lattice_max_vertices)
        add("lattice_brute_vs_generated",
            hsat_lattice_brute(g, opts.lattice_max_vertices).elements ==
                hsat_lattice_generated(g).elements);

    bool connected = !g.empty() && is_connected(g);
    if (connected) {
        for (int p : opts.chars)
            for (const ConsistencyEntry& entry : cross_check_simplicity(g, FieldChar(p)))
                add(entry.check + "_char_" + std::to_string(p), entry.ok, entry.note);
    } else {
        add("simplicity_crosschecks", true, "skipped: disconnected graph");
    }

    if (connected && g.order() >= 2 && g.order() <= opts.balloon_max_vertices) {
        bool agree = true;
        for (int v = 0; v < g.order() && agree; ++v) {
            int others = g.order() - 1;
            for (int mask = 1; mask < (1 << others) && agree; ++mask) {
                VertexSet w(g.order());
                int bit = 0;
                for (int x = 0; x < g.order(); ++x) {
                    if (x == v) continue;
                    if (mask & (1 << bit)) w.add(x);
                    ++bit;
                }
                agree = is_balloon(g, v, w) == is_balloon_monoid(g, v, w);
            }
        }
        add("balloon_routes_agree", agree);
    }

    return out;
}

struct PropConfig {
    int cases = 1000;
    std::uint64_t seed = 42;
    int max_vertices = 8;
    int max_edges = 16;
    std::vector<int> chars = {0, 2, 3};
};

struct PropFinding {
    std::string check;
    int case_index = 0;
    std::string graph_text;
    std::string note;
};

struct PropReport {
    int cases = 0;
    std::map<std::string, int> runs;  // check name -> evaluations
    std::vector<PropFinding> findings;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1))).next();
}

// Each case evaluates the full check battery on one unconstrained and one
// connected random graph.
inline PropReport run_property_suite(const PropConfig& config) {
    PropReport report;
    report.cases = config.cases;
    CheckOptions opts;
    opts.chars = config.chars;
    for (int i = 0; i < config.cases; ++i) {
        for (bool connected : {false, true}) {
            RandomGraphSpec spec{derive_seed(config.seed, 2 * i + (connected ? 1 : 0)),
                                 config.max_vertices, config.max_edges, connected};
            Graph g = random_graph(spec);
            for (const CheckResult& r : run_graph_checks(g, opts)) {
                ++report.runs[r.check];
                if (!r.ok)
                    report.findings.push_back({r.check, i, serialize_graph(g), r.note});
            }
        }
    }
    return report;
}

}  // namespace leavitt
