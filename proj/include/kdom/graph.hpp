#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kdom/vertex_set.hpp"

namespace kdom {

using Dist = std::uint32_t;

/// Hop distance to an unreachable vertex. Larger than any realizable distance.
inline constexpr Dist kInfinity = std::numeric_limits<Dist>::max();

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Metrics;

struct BuildOptions {
    /// Reject duplicate edges and self-loops instead of dropping them.
    bool strict = true;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored twice: sorted neighbor lists for traversal and one
/// bitset row per vertex for the word-parallel cover tests in the solver.
/// Metrics are computed on first request and shared between copies.
class Graph {
public:
    Graph() : Graph(0, {}, BuildOptions{}, nullptr) {}

    /// Builds the canonical graph. Throws IndexOutOfRange for an endpoint
    /// outside [0, n), and in strict mode SimplenessViolation for a loop or a
    /// repeated pair. In lenient mode offending pairs are dropped and counted
    /// in `dropped` when it is non-null.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs,
                                BuildOptions options = {}, std::size_t* dropped = nullptr);

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    const VertexSet& neighbor_bits(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;

    /// All-pairs metrics; computed once per graph, thread-safe.
    const Metrics& metrics() const&;
    /// On a temporary graph, returns a copy so the result cannot dangle.
    Metrics metrics() const&&;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    struct MetricsCache;

    Graph(std::size_t n, std::vector<Edge> edges, BuildOptions options, std::size_t* dropped);

    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSet> adjacency_bits_;
    std::shared_ptr<MetricsCache> cache_;
};

struct Metrics {
    std::size_t n = 0;
    /// Row-major n×n hop distances, kInfinity for unreachable pairs.
    std::vector<Dist> dist;
    std::vector<Dist> eccentricity;
    Dist diameter = kInfinity;
    Dist radius = kInfinity;
    Dist girth = kInfinity;
    bool connected = true;

    Dist distance(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

/// d(v, ·) by breadth-first search.
std::vector<Dist> bfs_distances(const Graph& g, Vertex v);

/// Breadth-first parents from `root`; the root and unreachable vertices map
/// to themselves. Neighbors are scanned in increasing order, so the result is
/// the lowest-index shortest-path tree.
std::vector<Vertex> bfs_parents(const Graph& g, Vertex root);

/// N_k[v] = { u : d(u, v) <= k }.
VertexSet closed_k_neighborhood(const Graph& g, Vertex v, Dist k);

Metrics compute_metrics(const Graph& g);

/// One cycle of length girth(g) as an ordered vertex list, or nullopt when g
/// is acyclic. The cycle comes from the lowest root that lies on a shortest
/// cycle, closed by the first non-tree edge found in BFS order.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

/// Connected components, each sorted, listed by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Lowest-index shortest path from `from` to `to` (both endpoints included),
/// or an empty vector if `to` is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// The graph with one edge removed. Throws PreconditionViolated if absent.
Graph remove_edge(const Graph& g, Edge e);

}  // namespace kdom
