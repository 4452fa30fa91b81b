#pragma once

// Lie-theoretic verdicts for the commutator algebra [L_K(E), L_K(E)]:
// solvability, nilpotency, triviality and simplicity, plus simplicity and
// graded simplicity of L_K(E) itself. Each verdict that the theory
// characterizes twice (graph level and talented-monoid level) is implemented
// twice so the pair can be cross-validated.
//
// Scalars only enter through the characteristic of the coefficient field:
// membership of a vertex-weight vector in the commutator subspace reduces to
// exact linear algebra over the prime field (rationals for characteristic 0)
// against the relation vectors δ_v − Σ_{e ∈ s⁻¹(v)} δ_{r(e)} of the regular
// vertices. No floating point anywhere.

#include <numeric>
#include <optional>
#include <string>

#include "leavitt/closures.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/monoid.hpp"

namespace leavitt {

struct FieldChar {
    int p = 0;  // 0 or a prime

    FieldChar() = default;
    explicit FieldChar(int characteristic) : p(characteristic) {
        if (p == 0) return;
        if (p < 2) throw std::invalid_argument("characteristic must be 0 or a prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime");
    }
};

// Vertex -> scalar map, represented as integers and interpreted in the prime
// field of the given characteristic.
using VertexWeightVector = std::vector<long long>;

struct LieVerdict {
    bool verdict = false;
    std::string branch;
    std::vector<std::string> witnesses;
};

namespace detail {

struct Fraction {
    long long num = 0;
    long long den = 1;

    static Fraction of(long long n, long long d = 1) {
        Fraction f{n, d};
        f.reduce();
        return f;
    }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool zero() const { return num == 0; }
};

inline long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

inline Fraction add(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.num = checked(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den);
    r.den = checked(static_cast<__int128>(a.den) * b.den);
    r.reduce();
    return r;
}

inline Fraction mul(const Fraction& a, const Fraction& b) {
    Fraction r;
    r.num = checked(static_cast<__int128>(a.num) * b.num);
    r.den = checked(static_cast<__int128>(a.den) * b.den);
    r.reduce();
    return r;
}

inline Fraction neg(const Fraction& a) { return Fraction{-a.num, a.den}; }

inline Fraction inv(const Fraction& a) {
    if (a.zero()) throw std::domain_error("division by zero");
    Fraction r{a.den, a.num};
    r.reduce();
    return r;
}

inline long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::domain_error("not invertible");
    return ((t % p) + p) % p;
}

// Row-reduce the relation rows and then the target; membership in the row
// span means the target reduces to zero. Instantiated for rationals and for
// prime fields through the callbacks: multiply(a, pivot, factor) computes
// a - pivot*factor, scale_inverse(a, lead) computes a/lead.
template <typename Scalar, typename IsZero, typename Mul, typename AddTo>
bool in_row_span(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> target, IsZero zero,
                 Mul multiply, AddTo scale_inverse) {
    size_t cols = target.size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t found = pivot_row;
        while (found < rows.size() && zero(rows[found][col])) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        Scalar lead = rows[pivot_row][col];
        for (size_t c = 0; c < cols; ++c) rows[pivot_row][c] = scale_inverse(rows[pivot_row][c], lead);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || zero(rows[r][col])) continue;
            Scalar factor = rows[r][col];
            for (size_t c = 0; c < cols; ++c)
                rows[r][c] = multiply(rows[r][c], rows[pivot_row][c], factor);
        }
        Scalar tf = target[col];
        if (!zero(tf))
            for (size_t c = 0; c < cols; ++c) target[c] = multiply(target[c], rows[pivot_row][c], tf);
        ++pivot_row;
    }
    for (const Scalar& t : target)
        if (!zero(t)) return false;
    return true;
}

}  // namespace detail

// Does the weight vector lie in the span of the commutator relation vectors
// {δ_v − Σ_{e ∈ s⁻¹(v)} δ_{r(e)} : v regular} over the prime field?
inline bool commutator_span_membership(const Graph& g, const VertexWeightVector& weights,
                                       FieldChar k) {
    if (static_cast<int>(weights.size()) != g.order())
        throw std::invalid_argument("weight vector does not match graph");

    std::vector<std::vector<long long>> relations;
    for (int v = 0; v < g.order(); ++v) {
        if (g.out_degree(v) == 0) continue;
        std::vector<long long> row(g.order(), 0);
        row[v] += 1;
        for (int e : g.out_edges(v)) row[g.edge(e).dst] -= 1;
        relations.push_back(std::move(row));
    }

    if (k.p == 0) {
        using detail::Fraction;
        std::vector<std::vector<Fraction>> rows;
        for (auto& rel : relations) {
            std::vector<Fraction> row;
            for (long long x : rel) row.push_back(Fraction::of(x));
            rows.push_back(std::move(row));
        }
        std::vector<Fraction> target;
        for (long long x : weights) target.push_back(Fraction::of(x));
        return detail::in_row_span<Fraction>(
            std::move(rows), std::move(target), [](const Fraction& f) { return f.zero(); },
            [](const Fraction& a, const Fraction& pivot, const Fraction& factor) {
                return detail::add(a, detail::neg(detail::mul(pivot, factor)));
            },
            [](const Fraction& a, const Fraction& lead) { return detail::mul(a, detail::inv(lead)); });
    }

    const long long p = k.p;
    auto norm = [p](long long x) { return ((x % p) + p) % p; };
    std::vector<std::vector<long long>> rows;
    for (auto& rel : relations) {
        std::vector<long long> row;
        for (long long x : rel) row.push_back(norm(x));
        rows.push_back(std::move(row));
    }
    std::vector<long long> target;
    for (long long x : weights) target.push_back(norm(x));
    return detail::in_row_span<long long>(
        std::move(rows), std::move(target), [](long long x) { return x == 0; },
        [p](long long a, long long pivot, long long factor) { return ((a - pivot * factor) % p + p) % p; },
        [p](long long a, long long lead) { return a * detail::mod_inverse(lead, p) % p; });
}

// 1 = Σ_v v inside [L,L]?
inline bool one_in_commutator(const Graph& g, FieldChar k) {
    return commutator_span_membership(g, VertexWeightVector(g.order(), 1), k);
}

// [L,L] = 0 exactly for disjoint unions of vertices and loops.
inline bool commutator_zero(const Graph& g) { return is_disjoint_vertices_and_loops(g); }

// Finite-graph simplicity of L_K(E): every vertex connects to every sink and
// to every cycle, and every cycle has an exit.
inline LieVerdict is_simple_lpa(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("simplicity needs a nonempty graph");
    LieVerdict v;
    v.branch = "finite simplicity criterion";
    auto cycles = enumerate_cycles(g);
    for (const Cycle& c : cycles)
        if (!c.has_exit) {
            v.verdict = false;
            v.witnesses.push_back("cycle without exit through " +
                                  g.vertex_id(c.vertices.members().front()));
            return v;
        }
    VertexSet sinks = classify_vertices(g).sinks;
    for (int x = 0; x < g.order(); ++x) {
        VertexSet reach = tree(g, x);
        for (int s : sinks.members())
            if (!reach.contains(s)) {
                v.verdict = false;
                v.witnesses.push_back(g.vertex_id(x) + " does not connect to sink " + g.vertex_id(s));
                return v;
            }
        for (const Cycle& c : cycles)
            if (reach.intersected(c.vertices).empty()) {
                v.verdict = false;
                v.witnesses.push_back(g.vertex_id(x) + " does not connect to a cycle");
                return v;
            }
    }
    v.verdict = true;
    return v;
}

inline bool is_graded_simple(const Graph& g) { return is_T_simple(g); }

// Per-edge local condition used by both solvability routes: the range of e is
// a sink whose only incoming edge is e, or sits on a loop f with incoming
// edges exactly {e, f}. For no-exit graphs this is the structural counterpart
// of the range being incomparable, inside M_E, to every vertex other than the
// edge's source; the bounded monoid search cross-checks that reading.
inline bool edge_range_private(const Graph& g, int e) {
    int u = g.edge(e).dst;
    const auto& in = g.in_edges(u);
    if (g.out_degree(u) == 0)
        return in.size() == 1 && in[0] == e;
    int loop = -1;
    for (int f : g.out_edges(u))
        if (g.edge(f).dst == u) {
            loop = f;
            break;
        }
    if (loop < 0) return false;
    if (e == loop) return in.size() == 1 && in[0] == e;
    return in.size() == 2 && ((in[0] == e && in[1] == loop) || (in[0] == loop && in[1] == e));
}

inline bool vertex_edges_private(const Graph& g, int v) {
    for (int e : g.out_edges(v))
        if (!edge_range_private(g, e)) return false;
    return true;
}

namespace detail {

inline bool on_cycle_of_length_at_most(const Graph& g, int v, int bound) {
    for (const Cycle& c : enumerate_cycles(g))
        if (c.length() <= bound && c.vertices.contains(v)) return true;
    return false;
}

}  // namespace detail

// Graph-level solvability. Characteristic 2: a no-exit graph where every
// vertex is a sink, or on a cycle of length at most 2, or all its out-edges
// have private ranges in the sense above. Other characteristics: a disjoint
// union of isolated vertices and loops.
inline LieVerdict is_lie_solvable(const Graph& g, FieldChar k) {
    LieVerdict v;
    if (k.p != 2) {
        v.branch = "odd or zero characteristic: disjoint vertices and loops";
        v.verdict = is_disjoint_vertices_and_loops(g);
        return v;
    }
    v.branch = "characteristic 2: no-exit with local vertex conditions";
    if (!is_no_exit(g)) {
        v.verdict = false;
        v.witnesses.push_back("a cycle has an exit");
        return v;
    }
    for (int x = 0; x < g.order(); ++x) {
        if (g.out_degree(x) == 0) continue;
        if (detail::on_cycle_of_length_at_most(g, x, 2)) continue;
        if (vertex_edges_private(g, x)) continue;
        v.verdict = false;
        v.witnesses.push_back("vertex " + g.vertex_id(x) + " fails every clause");
        return v;
    }
    v.verdict = true;
    return v;
}

// Monoid-level solvability, phrased through the ideal structure of T_E.
// Characteristic 2: GK dimension at most 1, and every vertex either is a sink
// generating a minimal ideal with acyclic restriction (the non-comparable
// minimal ideals), or generates a cyclic ideal on at most two vertices while
// sitting on a cycle of length at most 2, or has all out-edge ranges
// incomparable to other vertices in M_E (decided by the structural test,
// which bounded monoid search cross-checks). Other characteristics: GK at
// most 1 with all singleton ideals.
inline LieVerdict is_lie_solvable_monoid(const Graph& g, FieldChar k) {
    LieVerdict v;
    GkAnalysis gk = gk_analysis(g);
    if (k.p != 2) {
        v.branch = "odd or zero characteristic: GK <= 1 and singleton ideals";
        if (!gk.gk.leq(1)) {
            v.verdict = false;
            v.witnesses.push_back("GK dimension exceeds 1");
            return v;
        }
        for (int x = 0; x < g.order(); ++x)
            if (order_ideal_vertices(g, x).size() != 1) {
                v.verdict = false;
                v.witnesses.push_back("ideal of " + g.vertex_id(x) + " is not a singleton");
                return v;
            }
        v.verdict = true;
        return v;
    }
    v.branch = "characteristic 2: GK <= 1 with per-vertex ideal conditions";
    if (!gk.gk.leq(1)) {
        v.verdict = false;
        v.witnesses.push_back("GK dimension exceeds 1");
        return v;
    }
    HsatLattice lat = hsat_lattice(g);
    for (int x = 0; x < g.order(); ++x) {
        VertexSet ideal = order_ideal_vertices(g, x);
        bool clause = false;
        if (g.out_degree(x) == 0) {
            // sink: its ideal must be minimal with acyclic restriction
            bool minimal = false;
            for (int idx : lat.minimal_nonempty)
                if (lat.elements[idx] == ideal) minimal = true;
            clause = minimal && enumerate_cycles(restriction(g, ideal)).empty();
            if (!clause)
                v.witnesses.push_back("sink " + g.vertex_id(x) + " without minimal acyclic ideal");
        }
        if (!clause && detail::on_cycle_of_length_at_most(g, x, 2)) {
            // cyclic ideal on at most two vertices; both quantities recorded
            Graph r = restriction(g, ideal);
            bool cyclic = is_multiheaded_comet(r);
            clause = cyclic && ideal.size() <= 2;
            v.witnesses.push_back("vertex " + g.vertex_id(x) + ": |ideal|=" +
                                  std::to_string(ideal.size()) + (cyclic ? ", cyclic" : ", not cyclic"));
        }
        if (!clause) clause = vertex_edges_private(g, x);
        if (!clause) {
            v.verdict = false;
            v.witnesses.push_back("vertex " + g.vertex_id(x) + " fails every clause");
            return v;
        }
    }
    v.verdict = true;
    return v;
}

// Nilpotency of the commutator algebra [L,L] coincides with Lie solvability
// of L itself; exposed under its own name so the odd-characteristic corollary
// (equivalence with GK <= 1 plus singleton ideals) can be asserted against an
// independent computation.
inline LieVerdict is_commutator_nilpotent(const Graph& g, FieldChar k) {
    LieVerdict v = is_lie_solvable(g, k);
    v.branch = "identified with Lie solvability; " + v.branch;
    return v;
}

// Nilpotency has one graph-level and one monoid-level characterization; both
// are computed and must agree, so a mismatch is an implementation bug.
inline LieVerdict is_lie_nilpotent(const Graph& g) {
    bool structural = is_disjoint_vertices_and_loops(g);
    bool singles = true;
    for (int x = 0; x < g.order() && singles; ++x)
        singles = order_ideal_vertices(g, x).size() == 1;
    bool monoid = gk_dimension(g).leq(1) && singles;
    if (structural != monoid)
        throw std::logic_error("nilpotency characterizations disagree; implementation bug");
    LieVerdict v;
    v.verdict = structural;
    v.branch = "disjoint vertices and loops == GK <= 1 with singleton ideals";
    return v;
}

// Balloon over W, by the edge-level definition.
inline bool is_balloon(const Graph& g, int v, const VertexSet& w) {
    if (!is_connected(g)) throw std::invalid_argument("balloons live in connected graphs");
    if (w.empty()) throw std::invalid_argument("balloon base must be nonempty");
    if (w.contains(v)) throw std::invalid_argument("balloon vertex cannot lie in its base");
    VertexSet only_v = VertexSet(g.order());
    only_v.add(v);
    auto loops = edges_between(g, only_v, only_v);
    if (loops.size() != 1) return false;                     // one loop C
    int loop_edge = loops[0];
    auto into_w = edges_between(g, only_v, w);
    if (into_w.empty()) return false;                        // E(v,W) nonempty
    if (g.out_degree(v) != static_cast<int>(into_w.size()) + 1) return false;  // E(v,E0) = {C} ∪ E(v,W)
    const auto& in = g.in_edges(v);
    return in.size() == 1 && in[0] == loop_edge;             // E(E0,v) = {C}
}

// Balloon over W, by the monoid-level conditions: E0 ∖ {v} hereditary
// saturated, r(s⁻¹(v)) ∖ W = {v}, and the quotient by it has a simple cyclic
// talented monoid (a comet quotient).
inline bool is_balloon_monoid(const Graph& g, int v, const VertexSet& w) {
    if (!is_connected(g)) throw std::invalid_argument("balloons live in connected graphs");
    if (w.empty()) throw std::invalid_argument("balloon base must be nonempty");
    if (w.contains(v)) throw std::invalid_argument("balloon vertex cannot lie in its base");
    VertexSet h = VertexSet::all(g.order());
    h.remove(v);
    if (!is_hereditary(g, h) || !is_saturated(g, h)) return false;
    VertexSet ranges(g.order());
    for (int e : g.out_edges(v)) ranges.add(g.edge(e).dst);
    VertexSet leftover = ranges.intersected(w.complement());
    VertexSet just_v(g.order());
    just_v.add(v);
    if (!(leftover == just_v)) return false;
    Graph q = quotient_monoid_vertices(g, h);
    return is_T_simple(q) && is_comet(q);
}

// Intersection of all nonempty hereditary saturated subsets; empty means no
// simple core exists.
inline std::optional<VertexSet> simple_core(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("simple core needs a connected graph");
    VertexSet core = VertexSet::all(g.order());
    for (const VertexSet& h : hsat_lattice(g).elements)
        if (!h.empty()) core = core.intersected(h);
    if (core.empty()) return std::nullopt;
    return core;
}

// Simplicity of the commutator algebra. Branch A (L_K(E) simple): simple
// exactly when 1 stays outside [L,L]. Branch B: a simple core W whose
// restriction is simple, every outside vertex a balloon over W, and each
// balloon's range sum inside [L_K(W), L_K(W)]. The zero commutator algebra is
// not simple. Branch B additionally records whether the core restriction is a
// comet, which would contradict the minimal-non-cyclic-ideal consequence.
inline LieVerdict is_lie_simple(const Graph& g, FieldChar k) {
    if (g.empty()) throw std::invalid_argument("Lie simplicity needs a nonempty graph");
    if (!is_connected(g))
        throw std::invalid_argument("Lie simplicity is classified for connected graphs only");
    LieVerdict v;
    if (commutator_zero(g)) {
        v.branch = "degenerate";
        v.verdict = false;
        v.witnesses.push_back("commutator algebra is zero");
        return v;
    }
    if (is_simple_lpa(g).verdict) {
        v.branch = "A";
        v.verdict = !one_in_commutator(g, k);
        if (!v.verdict) v.witnesses.push_back("1 lies in the commutator subspace");
        return v;
    }
    v.branch = "B";
    auto core = simple_core(g);
    if (!core) {
        v.verdict = false;
        v.witnesses.push_back("no simple core: intersection of nonempty ideals is empty");
        return v;
    }
    std::string core_ids;
    for (int x : core->members()) {
        if (!core_ids.empty()) core_ids += ",";
        core_ids += g.vertex_id(x);
    }
    v.witnesses.push_back("W = {" + core_ids + "}");
    Graph inner = restriction(g, *core);
    if (!is_simple_lpa(inner).verdict) {
        v.verdict = false;
        v.witnesses.push_back("core restriction is not simple");
        return v;
    }
    for (int x = 0; x < g.order(); ++x) {
        if (core->contains(x)) continue;
        if (!is_balloon(g, x, *core)) {
            v.verdict = false;
            v.witnesses.push_back("vertex " + g.vertex_id(x) + " is not a balloon over the core");
            return v;
        }
        VertexSet only_x(g.order());
        only_x.add(x);
        VertexWeightVector target(inner.order(), 0);
        for (int e : edges_between(g, only_x, *core))
            target[inner.require_vertex(g.vertex_id(g.edge(e).dst))] += 1;
        for (auto& c : target) c = c == 0 ? 0 : 1;  // the sum ranges over the set r(E(v,W))
        if (!commutator_span_membership(inner, target, k)) {
            v.verdict = false;
            v.witnesses.push_back("range sum of " + g.vertex_id(x) + " escapes the core commutator");
            return v;
        }
    }
    v.verdict = true;
    if (is_comet(inner))
        v.witnesses.push_back("warning: core ideal is cyclic, contradicting minimality consequence");
    return v;
}

struct ConsistencyEntry {
    std::string check;
    bool ok = true;
    std::string note;
};

// Cross-checks tying Lie simplicity, graded simplicity and simplicity of
// L_K(E) together. Violations are reported, not thrown. The equivalence (c)
// is skipped for zero commutator algebras, where the convention that the zero
// Lie algebra is not simple departs from the bare unit criterion.
inline std::vector<ConsistencyEntry> cross_check_simplicity(const Graph& g, FieldChar k) {
    std::vector<ConsistencyEntry> out;
    bool lie = is_lie_simple(g, k).verdict;
    bool graded = is_graded_simple(g);
    bool simple = is_simple_lpa(g).verdict;
    bool unit_inside = one_in_commutator(g, k);

    out.push_back({"lie_simple_and_graded_implies_simple", !(lie && graded) || simple, ""});
    out.push_back({"graded_iff_simple_under_lie_simple", !lie || (graded == simple), ""});
    if (commutator_zero(g))
        out.push_back({"lie_simple_graded_iff_simple_unit_outside", true, "skipped: zero commutator algebra"});
    else
        out.push_back({"lie_simple_graded_iff_simple_unit_outside",
                       (lie && graded) == (simple && !unit_inside), ""});
    return out;
}

}  // namespace leavitt
