#pragma once

// Seeded random graph generation for the property suites. The generator is a
// hand-rolled splitmix64 so byte-identical output does not depend on any
// standard library distribution implementation.

#include <cstdint>

#include "leavitt/graph.hpp"

namespace leavitt {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, n); n is tiny here so modulo bias is noise.
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::uint64_t state_;
};

struct RandomGraphSpec {
    std::uint64_t seed = 1;
    int max_vertices = 8;
    int max_edges = 16;
    bool connected = false;
};

// Reproducible from the seed. With the connectivity flag the undirected graph
// is connected by construction: a spanning attachment is laid down first and
// the vertex count is capped so the spanning edges fit the edge budget.
inline Graph random_graph(const RandomGraphSpec& spec) {
    if (spec.max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
    if (spec.max_edges < 0) throw std::invalid_argument("max_edges must be nonnegative");
    SplitMix64 rng(spec.seed);
    int n = 1 + rng.below(spec.max_vertices);
    if (spec.connected && n - 1 > spec.max_edges) n = spec.max_edges + 1;
    int m = rng.below(spec.max_edges + 1);

    std::vector<std::string> vertices;
    for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));

    std::vector<EdgeDecl> edges;
    auto add_edge = [&](int a, int b) {
        std::string id = "e" + std::to_string(edges.size() + 1);
        edges.push_back({id, vertices[a], vertices[b]});
    };
    if (spec.connected) {
        for (int i = 1; i < n; ++i) {
            int j = rng.below(i);
            if (rng.below(2) == 0)
                add_edge(i, j);
            else
                add_edge(j, i);
        }
    }
    while (static_cast<int>(edges.size()) < m) add_edge(rng.below(n), rng.below(n));
    return Graph::from_parts(std::move(vertices), edges);
}

}  // namespace leavitt
