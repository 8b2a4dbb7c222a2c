#include "kdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "kdom/error.hpp"

namespace kdom {

struct Graph::MetricsCache {
    std::once_flag once;
    std::unique_ptr<Metrics> metrics;
};

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.order()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(v) + " not in [0, " + std::to_string(g.order()) + ")");
    }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges, BuildOptions options, std::size_t* dropped)
    : adjacency_(n), adjacency_bits_(n, VertexSet(n)), cache_(std::make_shared<MetricsCache>()) {
    std::size_t discarded = 0;
    for (Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                            std::to_string(n));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::vector<Edge> canonical;
    canonical.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            if (options.strict) {
                throw Error(ErrorCode::SimplenessViolation, "self-loop at vertex " + std::to_string(e.u));
            }
            ++discarded;
            continue;
        }
        canonical.push_back(e);
    }
    std::sort(canonical.begin(), canonical.end());
    auto dup = std::adjacent_find(canonical.begin(), canonical.end());
    if (dup != canonical.end()) {
        if (options.strict) {
            throw Error(ErrorCode::SimplenessViolation,
                        "repeated edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        }
        auto last = std::unique(canonical.begin(), canonical.end());
        discarded += static_cast<std::size_t>(canonical.end() - last);
        canonical.erase(last, canonical.end());
    }
    edges_ = std::move(canonical);
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
        adjacency_bits_[e.u].insert(e.v);
        adjacency_bits_[e.v].insert(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    if (dropped != nullptr) *dropped = discarded;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs, BuildOptions options,
                            std::size_t* dropped) {
    return Graph(n, std::vector<Edge>(pairs.begin(), pairs.end()), options, dropped);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(*this, v);
    return adjacency_[v];
}

const VertexSet& Graph::neighbor_bits(Vertex v) const {
    check_vertex(*this, v);
    return adjacency_bits_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    return adjacency_bits_[u].contains(v);
}

std::size_t Graph::min_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        if (v == 0 || adjacency_[v].size() < best) best = adjacency_[v].size();
    }
    return best;
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

const Metrics& Graph::metrics() const& {
    std::call_once(cache_->once, [this] { cache_->metrics = std::make_unique<Metrics>(compute_metrics(*this)); });
    return *cache_->metrics;
}

Metrics Graph::metrics() const&& { return static_cast<const Graph&>(*this).metrics(); }

std::vector<Dist> bfs_distances(const Graph& g, Vertex v) {
    check_vertex(g, v);
    std::vector<Dist> dist(g.order(), kInfinity);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    dist[v] = 0;
    queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> bfs_parents(const Graph& g, Vertex root) {
    check_vertex(g, root);
    std::vector<Vertex> parent(g.order());
    std::vector<bool> seen(g.order(), false);
    for (std::size_t v = 0; v < g.order(); ++v) parent[v] = static_cast<Vertex>(v);
    std::vector<Vertex> queue{root};
    seen[root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return parent;
}

VertexSet closed_k_neighborhood(const Graph& g, Vertex v, Dist k) {
    check_vertex(g, v);
    VertexSet ball(g.order());
    ball.insert(v);
    std::vector<Vertex> frontier{v};
    for (Dist depth = 0; depth < k && !frontier.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                if (!ball.contains(w)) {
                    ball.insert(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return ball;
}

namespace {

// Shortest cycle through the BFS tree of `root`: the minimum of
// d(a) + d(b) + 1 over non-tree edges ab. Returns the closing edge of the
// first minimum in scan order.
struct RootCycle {
    Dist length = kInfinity;
    Vertex a = 0;
    Vertex b = 0;
};

RootCycle shortest_cycle_from(const Graph& g, Vertex root, std::vector<Dist>& dist, std::vector<Vertex>& parent) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    RootCycle best;
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = root;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        // Any cycle closed from here on is at least 2*dist[u]+1 long.
        if (best.length != kInfinity && 2 * dist[u] + 1 >= best.length) break;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (parent[u] != w && parent[w] != u) {
                Dist len = dist[u] + dist[w] + 1;
                if (len < best.length) best = {len, u, w};
            }
        }
    }
    return best;
}

}  // namespace

Metrics compute_metrics(const Graph& g) {
    const std::size_t n = g.order();
    Metrics m;
    m.n = n;
    m.dist.assign(n * n, kInfinity);
    m.eccentricity.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        auto row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(), m.dist.begin() + static_cast<std::ptrdiff_t>(v * n));
        m.eccentricity[v] = *std::max_element(row.begin(), row.end());
        if (m.eccentricity[v] == kInfinity) m.connected = false;
    }
    if (n == 0) {
        m.diameter = m.radius = 0;
    } else if (m.connected) {
        m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
        m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    }
    std::vector<Dist> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        m.girth = std::min(m.girth, shortest_cycle_from(g, root, dist, parent).length);
    }
    return m;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    const Dist girth = g.metrics().girth;
    if (girth == kInfinity) return std::nullopt;
    const std::size_t n = g.order();
    std::vector<Dist> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        RootCycle c = shortest_cycle_from(g, root, dist, parent);
        if (c.length != girth) continue;
        // At the minimum length the two tree paths meet only at the root,
        // otherwise a strictly shorter cycle would exist.
        std::vector<Vertex> down;
        for (Vertex x = c.a; x != root; x = parent[x]) down.push_back(x);
        std::vector<Vertex> cycle{root};
        cycle.insert(cycle.end(), down.rbegin(), down.rend());
        for (Vertex x = c.b; x != root; x = parent[x]) cycle.push_back(x);
        return cycle;
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
    check_vertex(g, to);
    auto parent = bfs_parents(g, from);
    if (to != from && parent[to] == to) return {};
    std::vector<Vertex> path;
    for (Vertex x = to; x != from; x = parent[x]) path.push_back(x);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> relabel(g.order(), kInfinity);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(g, keep[i]);
        relabel[keep[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (relabel[e.u] != kInfinity && relabel[e.v] != kInfinity) edges.push_back({relabel[e.u], relabel[e.v]});
    }
    return Graph::from_edge_list(keep.size(), edges);
}

Graph remove_edge(const Graph& g, Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    bool found = false;
    for (const Edge& f : g.edges()) {
        if (f == e) {
            found = true;
        } else {
            edges.push_back(f);
        }
    }
    if (!found) {
        throw Error(ErrorCode::PreconditionViolated,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    }
    return Graph::from_edge_list(g.order(), edges);
}

}  // namespace kdom
