#include <catch2/catch.hpp>

#include "leavitt/closures.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/random.hpp"
#include "support.hpp"

using namespace leavitt;
using namespace testsupport;

TEST_CASE("cycle enumeration on corpus graphs") {
    auto rose_cycles = enumerate_cycles(rose(2));
    REQUIRE(rose_cycles.size() == 2);
    CHECK(rose_cycles[0].is_loop());
    CHECK(rose_cycles[1].is_loop());
    CHECK(rose_cycles[0].edge_seq != rose_cycles[1].edge_seq);
    CHECK(rose_cycles[0].vertices == rose_cycles[1].vertices);

    auto two = enumerate_cycles(two_cycle());
    REQUIRE(two.size() == 1);
    CHECK(two[0].length() == 2);
    // Canonical representative starts at the smallest vertex.
    Graph tc = two_cycle();
    CHECK(tc.edge(two[0].edge_seq[0]).src == 0);

    CHECK(enumerate_cycles(two_sink()).empty());

    auto comet = enumerate_cycles(comet3());
    REQUIRE(comet.size() == 1);
    CHECK(comet[0].length() == 3);
    CHECK_FALSE(comet[0].has_exit);

    auto t = enumerate_cycles(toep());
    REQUIRE(t.size() == 1);
    CHECK(t[0].is_loop());
    CHECK(t[0].has_exit);
}

TEST_CASE("disjoint cycles predicate") {
    CHECK_FALSE(has_disjoint_cycles(rose(2)));
    CHECK(has_disjoint_cycles(two_chain()));
    CHECK(has_disjoint_cycles(two_sink()));
    CHECK_FALSE(has_disjoint_cycles(balloon()));
    CHECK(has_disjoint_cycles(comet3()));
}

TEST_CASE("no-exit predicate") {
    CHECK_FALSE(is_no_exit(toep()));
    CHECK(is_no_exit(two_cycle()));
    CHECK(is_no_exit(sink_fan()));
    CHECK(is_no_exit(pt()));
    CHECK_FALSE(is_no_exit(two_chain()));
}

TEST_CASE("GK dimension of corpus graphs") {
    auto a = gk_analysis(loop());
    CHECK(a.d1 == 1);
    CHECK(a.d2 == 0);
    CHECK(a.gk == GkValue{false, 1});

    auto t = gk_analysis(toep());
    CHECK(t.d1 == 1);
    CHECK(t.d2 == 1);
    CHECK(t.gk == GkValue{false, 2});

    auto c = gk_analysis(two_chain());
    CHECK(c.d1 == 2);
    CHECK(c.d2 == 1);
    CHECK(c.gk == GkValue{false, 3});

    CHECK(gk_dimension(rose(2)).infinite);
    CHECK(gk_dimension(balloon()).infinite);
    CHECK(gk_dimension(pt()) == GkValue{false, 0});
    CHECK(gk_dimension(two_sink()) == GkValue{false, 0});
    CHECK(gk_dimension(comet3()) == GkValue{false, 1});
    CHECK(gk_dimension(sink_fan()) == GkValue{false, 1});
    CHECK(gk_dimension(two_cycle()) == GkValue{false, 1});
}

TEST_CASE("disjoint union of isolated vertices and loops") {
    CHECK(is_disjoint_vertices_and_loops(pt_plus_loop()));
    CHECK(is_disjoint_vertices_and_loops(two_loops()));
    CHECK(is_disjoint_vertices_and_loops(pt()));
    CHECK(is_disjoint_vertices_and_loops(loop()));
    CHECK_FALSE(is_disjoint_vertices_and_loops(two_cycle()));
    CHECK_FALSE(is_disjoint_vertices_and_loops(toep()));
    CHECK_FALSE(is_disjoint_vertices_and_loops(rose(2)));
    CHECK_FALSE(is_disjoint_vertices_and_loops(two_sink()));
}

TEST_CASE("comets and multi-headed comets") {
    CHECK(is_comet(comet3()));
    CHECK(is_comet(loop()));
    CHECK_FALSE(is_comet(two_loops()));
    CHECK(is_multiheaded_comet(two_loops()));
    CHECK_FALSE(is_comet(toep()));
    CHECK_FALSE(is_multiheaded_comet(toep()));
    CHECK_FALSE(is_comet(pt()));
    CHECK_FALSE(is_multiheaded_comet(pt()));
    // The connecting edge of the two-loop chain is an exit, so it is not a
    // multi-headed comet even though every vertex reaches a cycle.
    CHECK_FALSE(is_multiheaded_comet(two_chain()));
    CHECK(is_multiheaded_comet(comet3()));
    CHECK_THROWS_AS(is_comet(Graph{}), std::invalid_argument);
}

TEST_CASE("no-exit graphs have GK dimension at most 1, and conversely") {
    for (const char* text : {kPt, kLoop, kToep, kTwoChain, kTwoCycle, kSinkFan, kBalloon, kComet3, kTwoSink}) {
        Graph g = parse_graph(text);
        CHECK(is_no_exit(g) == gk_dimension(g).leq(1));
    }
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Graph g = random_graph({seed, 8, 16, false});
        CHECK(is_no_exit(g) == gk_dimension(g).leq(1));
    }
}

TEST_CASE("vertices-and-loops iff GK at most 1 with singleton ideals") {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Graph g = random_graph({seed, 8, 16, false});
        bool singles = true;
        for (int v = 0; v < g.order() && singles; ++v)
            singles = order_ideal_vertices(g, v).size() == 1;
        CHECK(is_disjoint_vertices_and_loops(g) == (gk_dimension(g).leq(1) && singles));
    }
}

namespace {

// Test-local oracle: enumerate every sequence of pairwise distinct cycles
// where each reaches the next, by plain DFS over the reachability relation.
std::pair<int, int> brute_chain_lengths(const Graph& g) {
    auto cycles = enumerate_cycles(g);
    int n = static_cast<int>(cycles.size());
    std::vector<std::vector<bool>> reaches(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || cycles[i].vertices == cycles[j].vertices) continue;
            for (int v : cycles[i].vertices.members())
                if (!tree(g, v).intersected(cycles[j].vertices).empty()) {
                    reaches[i][j] = true;
                    break;
                }
        }
    int d1 = 0, d2 = 0;
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, int at, int length) -> void {
        d1 = std::max(d1, length);
        if (cycles[at].has_exit) d2 = std::max(d2, length);
        for (int next = 0; next < n; ++next)
            if (!used[next] && reaches[at][next]) {
                used[next] = true;
                self(self, next, length + 1);
                used[next] = false;
            }
    };
    for (int start = 0; start < n; ++start) {
        used[start] = true;
        dfs(dfs, start, 1);
        used[start] = false;
    }
    return {d1, d2};
}

}  // namespace

TEST_CASE("chain lengths agree with exhaustive chain enumeration") {
    for (const char* text : {kLoop, kToep, kTwoChain, kTwoCycle, kSinkFan, kComet3, kTwoSink}) {
        Graph g = parse_graph(text);
        auto [d1, d2] = brute_chain_lengths(g);
        auto a = gk_analysis(g);
        CHECK(a.d1 == d1);
        CHECK(a.d2 == d2);
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        Graph g = random_graph({seed, 7, 12, false});
        if (!has_disjoint_cycles(g)) continue;
        auto [d1, d2] = brute_chain_lengths(g);
        auto a = gk_analysis(g);
        INFO(serialize_graph(g));
        CHECK(a.d1 == d1);
        CHECK(a.d2 == d2);
    }
}

TEST_CASE("chain structure invariants") {
    for (std::uint64_t seed = 1; seed <= 400; ++seed) {
        Graph g = random_graph({seed, 8, 16, false});
        auto a = gk_analysis(g);
        CHECK(a.gk.infinite != a.disjoint_cycles);  // finite iff disjoint
        if (a.no_exit) CHECK(a.disjoint_cycles);
        if (!a.gk.infinite) {
            CHECK(a.d2 <= a.d1);
            CHECK((a.gk.value % 2 == 1) == (2 * a.d1 - 1 > 2 * a.d2));
        }
    }
}
