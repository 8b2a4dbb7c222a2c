#include "kdom/random.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace kdom {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo;
    if (span == std::numeric_limits<std::uint64_t>::max()) return next();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return lo + x % range;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_gnp(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return Graph::from_edge_list(n, edges);
}

namespace {

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    // Fisher–Yates.
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
    return perm;
}

std::vector<Edge> tree_edges(Rng& rng, std::size_t n) {
    auto perm = random_permutation(rng, n);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({perm[i], perm[rng.uniform(0, i - 1)]});
    return edges;
}

}  // namespace

Graph random_tree(Rng& rng, std::size_t n) { return Graph::from_edge_list(n, tree_edges(rng, n)); }

ConnectedSample random_connected_graph(Rng& rng, std::size_t n, double p, std::size_t attempts) {
    for (std::size_t i = 0; i < attempts; ++i) {
        Graph g = random_gnp(rng, n, p);
        if (g.metrics().connected) return {std::move(g), false};
    }
    auto edges = tree_edges(rng, n);
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (const Edge& e : edges) present[e.u][e.v] = present[e.v][e.u] = true;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!present[u][v] && rng.bernoulli(p)) edges.push_back({u, v});
        }
    }
    return {Graph::from_edge_list(n, edges), true};
}

}  // namespace kdom
