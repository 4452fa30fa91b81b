#pragma once

// Elements of the talented monoid T_E and the graph monoid M_E, with bounded
// decision procedures for the natural order, plus the ideal-level structure:
// simplicity of T_E, typed simple quotients, and composition series.
//
// T_E is generated by v(i) for vertices v and integer shifts i, subject to
// v(i) = sum of r(e)(i+1) over the out-edges of a non-sink v; M_E is the
// shift-free analogue. Oriented left to right this relation set is an
// orthogonal rewriting system (one rule per non-sink generator), hence
// confluent: two elements are equal iff their forward-expansion closures
// meet, and a <= b iff some expansion of b contains an expansion of a as a
// sub-multiset. The bounded procedures explore those closures to a depth and
// answer yes/no/unknown; "no" is only ever reported when both closures were
// exhausted, so definite answers are exact.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "leavitt/closures.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

enum class TriState { no, yes, unknown };

inline const char* to_string(TriState t) {
    switch (t) {
        case TriState::no: return "false";
        case TriState::yes: return "true";
        default: return "unknown";
    }
}

// Finite multiset of (vertex, shift) pairs; the empty multiset is 0. The M_E
// variant keeps every shift at 0.
struct MonoidElement {
    std::vector<std::pair<int, int>> pairs;  // sorted (vertex, shift) with multiplicity

    void normalize() { std::sort(pairs.begin(), pairs.end()); }

    static MonoidElement single(int vertex, int shift_value) {
        MonoidElement e;
        e.pairs.emplace_back(vertex, shift_value);
        return e;
    }

    bool is_zero() const { return pairs.empty(); }

    bool operator==(const MonoidElement&) const = default;
    auto operator<=>(const MonoidElement&) const = default;

    bool submultiset_of(const MonoidElement& other) const {
        size_t i = 0, j = 0;
        while (i < pairs.size() && j < other.pairs.size()) {
            if (pairs[i] == other.pairs[j]) {
                ++i;
                ++j;
            } else if (other.pairs[j] < pairs[i]) {
                ++j;
            } else {
                return false;
            }
        }
        return i == pairs.size();
    }
};

inline MonoidElement shift(const MonoidElement& a, int n) {
    MonoidElement out = a;
    for (auto& [v, i] : out.pairs) i += n;
    out.normalize();
    return out;
}

inline MonoidElement sum(const MonoidElement& a, const MonoidElement& b) {
    MonoidElement out = a;
    out.pairs.insert(out.pairs.end(), b.pairs.begin(), b.pairs.end());
    out.normalize();
    return out;
}

enum class MonoidMode { talented, shiftless };

// All single-step expansions: one occurrence of a non-sink generator v(i) is
// replaced by the sum of r(e)(i+1) over its out-edges (i unchanged in the
// shiftless mode). Sinks are irreducible.
inline std::vector<MonoidElement> expand_once(const Graph& g, const MonoidElement& a,
                                              MonoidMode mode = MonoidMode::talented) {
    std::set<MonoidElement> out;
    for (size_t occ = 0; occ < a.pairs.size(); ++occ) {
        if (occ > 0 && a.pairs[occ] == a.pairs[occ - 1]) continue;  // same result
        auto [v, i] = a.pairs[occ];
        if (g.out_degree(v) == 0) continue;
        MonoidElement next;
        next.pairs.reserve(a.pairs.size() - 1 + g.out_degree(v));
        for (size_t k = 0; k < a.pairs.size(); ++k)
            if (k != occ) next.pairs.push_back(a.pairs[k]);
        int step = mode == MonoidMode::talented ? 1 : 0;
        for (int e : g.out_edges(v)) next.pairs.emplace_back(g.edge(e).dst, i + step);
        next.normalize();
        out.insert(std::move(next));
    }
    return {out.begin(), out.end()};
}

inline constexpr int kClosureElementCap = 50000;

struct ExpansionClosure {
    std::set<MonoidElement> elements;
    bool complete = false;  // frontier emptied below the depth and cap
};

inline ExpansionClosure bounded_closure(const Graph& g, const MonoidElement& start, int depth,
                                        MonoidMode mode = MonoidMode::talented,
                                        int cap = kClosureElementCap) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    ExpansionClosure cl;
    MonoidElement s = start;
    s.normalize();
    cl.elements.insert(s);
    std::vector<MonoidElement> frontier{std::move(s)};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<MonoidElement> next;
        for (const MonoidElement& e : frontier)
            for (MonoidElement& x : expand_once(g, e, mode)) {
                if (static_cast<int>(cl.elements.size()) >= cap) return cl;  // incomplete
                if (cl.elements.insert(x).second) next.push_back(std::move(x));
            }
        frontier = std::move(next);
    }
    cl.complete = frontier.empty();
    return cl;
}

namespace detail {

inline TriState closure_equal(const ExpansionClosure& a, const ExpansionClosure& b) {
    const auto& small = a.elements.size() <= b.elements.size() ? a : b;
    const auto& large = a.elements.size() <= b.elements.size() ? b : a;
    for (const auto& e : small.elements)
        if (large.elements.count(e)) return TriState::yes;
    return a.complete && b.complete ? TriState::no : TriState::unknown;
}

inline TriState closure_leq(const ExpansionClosure& a, const ExpansionClosure& b) {
    for (const auto& bigger : b.elements)
        for (const auto& smaller : a.elements)
            if (smaller.pairs.size() <= bigger.pairs.size() && smaller.submultiset_of(bigger))
                return TriState::yes;
    return a.complete && b.complete ? TriState::no : TriState::unknown;
}

}  // namespace detail

inline TriState bounded_equal(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                              int depth, MonoidMode mode = MonoidMode::talented) {
    return detail::closure_equal(bounded_closure(g, a, depth, mode),
                                 bounded_closure(g, b, depth, mode));
}

// a <= b in the natural pre-order (b = a + c for some c).
inline TriState bounded_leq(const Graph& g, const MonoidElement& a, const MonoidElement& b,
                            int depth, MonoidMode mode = MonoidMode::talented) {
    return detail::closure_leq(bounded_closure(g, a, depth, mode),
                               bounded_closure(g, b, depth, mode));
}

// Comparability of two distinct vertices as elements of M_E.
inline TriState comparable_in_ME(const Graph& g, int v, int w, int depth) {
    if (v == w) throw std::invalid_argument("comparability asks for distinct vertices");
    auto cv = bounded_closure(g, MonoidElement::single(v, 0), depth, MonoidMode::shiftless);
    auto cw = bounded_closure(g, MonoidElement::single(w, 0), depth, MonoidMode::shiftless);
    TriState vw = detail::closure_leq(cv, cw);
    if (vw == TriState::yes) return TriState::yes;
    TriState wv = detail::closure_leq(cw, cv);
    if (wv == TriState::yes) return TriState::yes;
    if (vw == TriState::no && wv == TriState::no) return TriState::no;
    return TriState::unknown;
}

// Monoid-level route to the vertices of <v>, independent of the
// hereditary/saturation fixpoint. u belongs to <v> iff some expansion A of
// u(0) is a sub-multiset of a finite sum of shifted copies of v; since
// expansion acts per occurrence, that holds iff every member w(k) of A lands
// inside an expansion of some v(j), and a singleton lands inside an expansion
// exactly when (w, k - j) occurs among its members. So the decision
// decomposes into: (1) the occurrence set of v — every (vertex, shift) seen
// among members of bounded expansions of v(0) — and (2) a search through the
// expansion closure of u(0) for an element supported on those vertices.
inline VertexSet monoid_occurrence_set(const Graph& g, int v, int depth) {
    std::set<std::pair<int, int>> occur{{v, 0}};
    std::vector<std::pair<int, int>> frontier{{v, 0}};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<std::pair<int, int>> next;
        for (auto [w, s] : frontier)
            for (int e : g.out_edges(w)) {
                auto p = std::make_pair(g.edge(e).dst, s + 1);
                if (occur.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    VertexSet support(g.order());
    for (auto [w, s] : occur) support.add(w);
    return support;
}

inline std::vector<VertexSet> monoid_order_ideals(const Graph& g, int depth = 10,
                                                  int cap = kClosureElementCap) {
    std::vector<ExpansionClosure> cl;
    cl.reserve(g.order());
    for (int u = 0; u < g.order(); ++u)
        cl.push_back(bounded_closure(g, MonoidElement::single(u, 0), depth, MonoidMode::talented, cap));

    std::vector<VertexSet> ideals;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet embeds = monoid_occurrence_set(g, v, depth);
        VertexSet members(g.order());
        for (int u = 0; u < g.order(); ++u) {
            for (const MonoidElement& a : cl[u].elements) {
                bool all_embed = true;
                for (const auto& [w, i] : a.pairs)
                    if (!embeds.contains(w)) {
                        all_embed = false;
                        break;
                    }
                if (all_embed) {
                    members.add(u);
                    break;
                }
            }
        }
        ideals.push_back(members);
    }
    return ideals;
}

inline VertexSet monoid_order_ideal_vertices(const Graph& g, int v, int depth = 10) {
    return monoid_order_ideals(g, depth).at(v);
}

// T_E is simple iff the only hereditary saturated sets are ∅ and E0.
inline bool is_T_simple(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("simplicity of T needs a nonempty graph");
    return hsat_lattice(g).elements.size() == 2;
}

// The graph whose talented monoid realizes T_E / <H>.
inline Graph quotient_monoid_vertices(const Graph& g, const VertexSet& h) {
    return quotient_graph(g, VertexSet::all(g.order()), h);
}

enum class IdealType { cyclic, non_comparable, comparable };

inline const char* to_string(IdealType t) {
    switch (t) {
        case IdealType::cyclic: return "cyclic";
        case IdealType::non_comparable: return "non-comparable";
        default: return "comparable";
    }
}

// Type of the simple quotient ideal <H_hi>/<H_lo>, read off the quotient
// graph: cyclic when it is a comet (simple cyclic T), non-comparable when it
// is acyclic (sink-generated simple T), comparable otherwise (a cycle with an
// exit inside a simple quotient).
inline IdealType simple_quotient_type(const Graph& g, const VertexSet& h_lo, const VertexSet& h_hi) {
    if (!h_lo.subset_of(h_hi) || h_lo == h_hi)
        throw std::invalid_argument("needs H_lo strictly inside H_hi");
    Graph q = quotient_graph(g, h_hi, h_lo);
    if (hsat_lattice(q).elements.size() != 2)
        throw std::invalid_argument("quotient is not simple");
    if (is_comet(q)) return IdealType::cyclic;
    if (enumerate_cycles(q).empty()) return IdealType::non_comparable;
    return IdealType::comparable;
}

struct CompositionSeries {
    std::vector<VertexSet> chain;   // ∅ = H0 ⊊ H1 ⊊ ... ⊊ Hn = E0
    std::vector<IdealType> types;   // one tag per step
};

// Maximal chain through the hsat lattice, built by repeatedly lifting the
// lexicographically least minimal nonempty hsat set of the current quotient.
// Minimality of the lifted set makes each quotient ideal simple.
inline CompositionSeries composition_series(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("composition series needs a nonempty graph");
    VertexSet empty(g.order());
    if (!is_saturated(g, empty))
        throw std::logic_error("empty set not saturated; regular vertices must have ranges");
    const VertexSet everything = VertexSet::all(g.order());

    CompositionSeries series;
    VertexSet h = empty;
    series.chain.push_back(h);
    while (!(h == everything)) {
        Graph q = quotient_graph(g, everything, h);
        HsatLattice lat = hsat_lattice(q);
        if (lat.minimal_nonempty.empty())
            throw std::logic_error("finite lattice without minimal nonempty element");
        const VertexSet* pick = nullptr;
        std::vector<int> pick_members;
        for (int idx : lat.minimal_nonempty) {
            std::vector<int> members = lat.elements[idx].members();
            if (!pick || members < pick_members) {
                pick = &lat.elements[idx];
                pick_members = std::move(members);
            }
        }
        VertexSet next = h;
        for (int qv : pick_members) next.add(g.require_vertex(q.vertex_id(qv)));
        series.types.push_back(simple_quotient_type(g, h, next));
        series.chain.push_back(next);
        h = next;
    }
    return series;
}

// Lengths of all maximal chains of the hsat lattice; used to report whether
// the series length is invariant under the tie-breaking order.
inline std::set<int> all_series_lengths(const Graph& g) {
    HsatLattice lat = hsat_lattice(g);
    std::vector<std::vector<int>> covers(lat.elements.size());
    for (auto [i, j] : lat.hasse) covers[i].push_back(j);
    std::set<int> lengths;
    auto dfs = [&](auto&& self, size_t at, int steps) -> void {
        if (covers[at].empty()) {
            lengths.insert(steps);
            return;
        }
        for (int next : covers[at]) self(self, next, steps + 1);
    };
    if (!lat.elements.empty()) dfs(dfs, 0, 0);
    return lengths;
}

// Element grammar: `<vertex>@<shift>` joined by `+`; the last `@` splits the
// token so vertex ids may themselves contain `@`.
inline MonoidElement parse_monoid_element(const Graph& g, std::string_view text) {
    MonoidElement out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t plus = text.find('+', start);
        std::string_view token = text.substr(start, plus == std::string_view::npos ? plus : plus - start);
        if (token.empty()) throw std::invalid_argument("empty term in monoid element");
        size_t at = token.rfind('@');
        if (at == std::string_view::npos)
            throw std::invalid_argument("term missing '@shift': " + std::string(token));
        int v = g.require_vertex(token.substr(0, at));
        int shift_value;
        try {
            shift_value = std::stoi(std::string(token.substr(at + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad shift in term: " + std::string(token));
        }
        out.pairs.emplace_back(v, shift_value);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    out.normalize();
    return out;
}

inline std::string format_monoid_element(const Graph& g, const MonoidElement& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        if (i) out += "+";
        out += g.vertex_id(a.pairs[i].first) + "@" + std::to_string(a.pairs[i].second);
    }
    return out;
}

}  // namespace leavitt
