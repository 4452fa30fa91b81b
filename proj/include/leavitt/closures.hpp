#pragma once

// Hereditary saturated closures and the full lattice of hereditary saturated
// subsets. Via the standard lattice isomorphism these are also the Z-order
// ideals of the talented monoid and the graded ideals of the Leavitt path
// algebra, so everything downstream (ideal structure, composition series,
// graded simplicity) reads off this lattice.
//
// Two lattice algorithms are provided and cross-checked against each other:
//   - brute force over all 2^|E0| subsets (exact, default bound 16 vertices);
//   - generation from singleton closures, closed under pairwise intersection
//     and closure-of-union until fixpoint.
// The generated form is complete: any hereditary saturated H equals the
// closure of the union of the singleton closures of its members, and iterated
// pairwise closure-of-union reaches every finite union.

#include <cstdlib>
#include <set>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

// Least hereditary saturated superset: alternate adding edge ranges of
// members (hereditary step) and regular vertices all of whose ranges are
// already present (saturation step) until nothing changes.
inline VertexSet hsat_closure(const Graph& g, const VertexSet& start) {
    if (start.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph");
    VertexSet h = start;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : g.edges())
            if (h.contains(e.src) && !h.contains(e.dst)) {
                h.add(e.dst);
                changed = true;
            }
        for (int v = 0; v < g.order(); ++v) {
            if (h.contains(v) || g.out_degree(v) == 0) continue;
            bool all_in = true;
            for (int e : g.out_edges(v))
                if (!h.contains(g.edge(e).dst)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                h.add(v);
                changed = true;
            }
        }
    }
    return h;
}

// ⟨v⟩ ∩ E0: the vertices of the Z-order-ideal generated by v.
inline VertexSet order_ideal_vertices(const Graph& g, int v) {
    VertexSet s(g.order());
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    s.add(v);
    return hsat_closure(g, s);
}

struct HsatLattice {
    std::vector<VertexSet> elements;          // sorted by (size, member indices)
    std::vector<std::pair<int, int>> hasse;   // covering pairs (i, j): elements[i] ⊊ elements[j]
    std::vector<int> minimal_nonempty;        // indices of minimal nonempty elements
};

namespace detail {

inline HsatLattice assemble_lattice(std::set<VertexSet> sets) {
    HsatLattice lat;
    lat.elements.assign(sets.begin(), sets.end());
    std::sort(lat.elements.begin(), lat.elements.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    int n = static_cast<int>(lat.elements.size());
    // Covers of i are the inclusion-minimal strict supersets; scanning the
    // supersets in size order, a candidate is a cover exactly when it
    // contains no already accepted cover. Size sorting puts every strict
    // subset before its supersets, so only j > i needs a look.
    std::vector<std::pair<int, int>> hasse;
    for (int i = 0; i < n; ++i) {
        std::vector<int> covers;
        for (int j = i + 1; j < n; ++j) {
            if (!lat.elements[i].subset_of(lat.elements[j])) continue;
            bool minimal = true;
            for (int c : covers)
                if (lat.elements[c].subset_of(lat.elements[j])) {
                    minimal = false;
                    break;
                }
            if (minimal) covers.push_back(j);
        }
        for (int j : covers) hasse.emplace_back(i, j);
        if (i == 0 && !lat.elements[0].empty())
            throw std::logic_error("lattice is missing the empty set");
        if (i == 0) lat.minimal_nonempty = covers;  // covers of ∅
    }
    std::sort(hasse.begin(), hasse.end());
    lat.hasse = std::move(hasse);
    return lat;
}

}  // namespace detail

inline constexpr int kDefaultBruteBound = 16;

// Exhaustive filter of all 2^|E0| subsets. Exact; refuses graphs above the
// bound since the scan is exponential.
inline HsatLattice hsat_lattice_brute(const Graph& g, int bound = kDefaultBruteBound) {
    if (g.order() > bound)
        throw std::invalid_argument("graph exceeds the brute-force lattice bound");
    std::set<VertexSet> sets;
    const std::uint64_t total = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet h(g.order());
        for (int v = 0; v < g.order(); ++v)
            if (mask & (std::uint64_t{1} << v)) h.add(v);
        if (is_hereditary(g, h) && is_saturated(g, h)) sets.insert(h);
    }
    return detail::assemble_lattice(std::move(sets));
}

// Generated lattice with a pluggable closure, so tests can inject a broken
// closure and watch the brute-force oracle catch it.
template <typename ClosureFn>
HsatLattice hsat_lattice_generated_with(const Graph& g, ClosureFn&& closure) {
    std::set<VertexSet> seen;
    std::vector<VertexSet> all;
    auto insert = [&](const VertexSet& s) {
        if (seen.insert(s).second) all.push_back(s);
    };
    insert(VertexSet(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        VertexSet s(g.order());
        s.add(v);
        insert(closure(g, s));
    }
    // Each unordered pair is combined exactly once; new elements are appended
    // and picked up by the outer index.
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            VertexSet a = all[i], b = all[j];
            insert(a.intersected(b));
            insert(closure(g, a.united(b)));
        }
    return detail::assemble_lattice(std::move(seen));
}

inline HsatLattice hsat_lattice_generated(const Graph& g) {
    return hsat_lattice_generated_with(g, [](const Graph& gr, const VertexSet& s) {
        return hsat_closure(gr, s);
    });
}

// Brute-force bound, overridable through the environment once per process.
// Clamped to 24: the scan is exponential, and anything larger would never
// finish anyway.
inline int lattice_brute_bound() {
    static const int bound = [] {
        if (const char* env = std::getenv("LEAVITT_BRUTE_BOUND")) {
            int b = std::atoi(env);
            if (b > 0) return std::min(b, 24);
        }
        return kDefaultBruteBound;
    }();
    return bound;
}

inline HsatLattice hsat_lattice(const Graph& g) {
    if (g.order() <= lattice_brute_bound()) return hsat_lattice_brute(g, lattice_brute_bound());
    return hsat_lattice_generated(g);
}

}  // namespace leavitt
