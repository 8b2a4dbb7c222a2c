#include "kdom/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "kdom/error.hpp"

namespace kdom {

Graph path(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidOrder, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidOrder, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph::from_edge_list(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph::from_edge_list(n, edges);
}

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, 5 + i});
    }
    return Graph::from_edge_list(10, edges);
}

Graph clique_expanded_path(std::size_t n_base, std::size_t delta) {
    if (n_base < 3) throw Error(ErrorCode::InvalidOrder, "clique-expanded path needs n_base >= 3");
    if (delta < 1) throw Error(ErrorCode::InvalidOrder, "clique size must be at least 1");
    const std::size_t cells = n_base - 2;
    const std::size_t n = 2 + cells * delta;
    const auto last = static_cast<Vertex>(n - 1);
    // Vertices of cell c (0-based over the internal path vertices).
    auto member = [&](std::size_t c, std::size_t j) { return static_cast<Vertex>(1 + c * delta + j); };

    std::vector<Edge> edges;
    for (std::size_t c = 0; c < cells; ++c) {
        for (std::size_t a = 0; a < delta; ++a) {
            for (std::size_t b = a + 1; b < delta; ++b) edges.push_back({member(c, a), member(c, b)});
            if (c + 1 < cells) {
                for (std::size_t b = 0; b < delta; ++b) edges.push_back({member(c, a), member(c + 1, b)});
            }
        }
    }
    for (std::size_t a = 0; a < delta; ++a) {
        edges.push_back({0, member(0, a)});
        edges.push_back({member(cells - 1, a), last});
    }
    return Graph::from_edge_list(n, edges);
}

DirectProduct direct_product(const Graph& left, const Graph& right) {
    if (left.order() == 0 || right.order() == 0) {
        throw Error(ErrorCode::EmptyFactor, "direct product of an empty graph");
    }
    ProductShape shape{left.order(), right.order()};
    std::vector<Edge> edges;
    edges.reserve(2 * left.size() * right.size());
    for (const Edge& a : left.edges()) {
        for (const Edge& b : right.edges()) {
            edges.push_back({shape.flat({a.u, b.u}), shape.flat({a.v, b.v})});
            edges.push_back({shape.flat({a.u, b.v}), shape.flat({a.v, b.u})});
        }
    }
    return {Graph::from_edge_list(shape.order(), edges), shape};
}

std::vector<Vertex> project(std::span<const ProductVertex> set, Side side) {
    std::set<Vertex> out;
    for (const ProductVertex& p : set) out.insert(side == Side::Left ? p.g : p.h);
    return {out.begin(), out.end()};
}

VertexSet project(const VertexSet& flat_set, const ProductShape& shape, Side side) {
    VertexSet out(side == Side::Left ? shape.left_order : shape.right_order);
    flat_set.for_each([&](Vertex f) {
        ProductVertex p = shape.decode(f);
        out.insert(side == Side::Left ? p.g : p.h);
    });
    return out;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

SpanningTreeResult preserving_spanning_tree(const Graph& g, Dist k, const Budget& budget) {
    const Metrics& m = g.metrics();
    if (!m.connected) throw Error(ErrorCode::DisconnectedInput, "spanning tree needs a connected graph");
    const std::size_t n = g.order();
    SpanningTreeResult result;
    if (n == 0) return result;

    Certificate cert = gamma_k_exact(g, k, budget);
    if (cert.status != CertificateStatus::Exact) {
        throw Error(ErrorCode::BudgetExceeded, "could not prove the dominating set minimum");
    }
    result.dominating_set = cert.set.to_vector();
    const auto& roots = result.dominating_set;

    // Nearest root, lowest cell index on ties. A neighbor one step closer to
    // v's root along a shortest path has the same nearest lowest root, so
    // every cell induces a connected subgraph.
    result.partition.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < roots.size(); ++i) {
            if (m.distance(v, roots[i]) < m.distance(v, roots[best])) best = i;
        }
        result.partition[v] = best;
    }

    std::vector<Edge> tree_edges;
    std::vector<bool> reached(n, false);
    for (std::size_t cell = 0; cell < roots.size(); ++cell) {
        std::vector<Vertex> queue{roots[cell]};
        reached[roots[cell]] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (!reached[w] && result.partition[w] == cell) {
                    reached[w] = true;
                    tree_edges.push_back({u, w});
                    queue.push_back(w);
                }
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
        throw std::logic_error("cell not connected to its root");
    }

    DisjointSets cells(roots.size());
    for (const Edge& e : g.edges()) {
        std::size_t a = result.partition[e.u];
        std::size_t b = result.partition[e.v];
        if (a != b && cells.unite(a, b)) {
            result.connectors.push_back(e);
            tree_edges.push_back(e);
        }
    }
    result.tree = Graph::from_edge_list(n, tree_edges);
    return result;
}

namespace {

[[noreturn]] void witness_precondition(const std::string& what) {
    throw Error(ErrorCode::PreconditionViolated, what);
}

void check_shortest_cycle(const Graph& g, std::span<const Vertex> cycle) {
    const std::size_t len = cycle.size();
    if (len < 3) witness_precondition("cycle needs at least 3 vertices");
    std::set<Vertex> distinct;
    for (std::size_t i = 0; i < len; ++i) {
        if (cycle[i] >= g.order()) {
            throw Error(ErrorCode::IndexOutOfRange, "cycle vertex " + std::to_string(cycle[i]));
        }
        distinct.insert(cycle[i]);
        if (!g.adjacent(cycle[i], cycle[(i + 1) % len])) witness_precondition("consecutive cycle vertices not adjacent");
    }
    if (distinct.size() != len) witness_precondition("cycle repeats a vertex");
    if (len != g.metrics().girth) witness_precondition("cycle is not a shortest cycle");
}

}  // namespace

CycleWitness cycle_outsider_witness(const Graph& g, std::span<const Vertex> cycle, Vertex v, Dist k,
                                    WitnessMode mode) {
    if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be at least 1");
    if (v >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
    check_shortest_cycle(g, cycle);
    const std::size_t len = cycle.size();
    if (std::find(cycle.begin(), cycle.end(), v) != cycle.end()) witness_precondition("v lies on the cycle");

    const auto dist = bfs_distances(g, v);
    std::size_t dominated = 0;
    for (Vertex c : cycle) dominated += dist[c] <= k ? 1 : 0;
    if (dominated < 2 * static_cast<std::size_t>(k)) {
        witness_precondition("v k-dominates " + std::to_string(dominated) + " cycle vertices, fewer than 2k");
    }

    // Positions on C; ties in every choice below go to the lowest vertex index.
    auto better = [&](std::size_t i, std::size_t j, auto key) {
        return key(i) != key(j) ? key(i) < key(j) : cycle[i] < cycle[j];
    };
    auto on_cycle_distance = [&](std::size_t i, std::size_t j) {
        std::size_t d = i > j ? i - j : j - i;
        return std::min(d, len - d);
    };

    std::size_t u_pos = 0;
    std::size_t w_pos = 0;
    std::vector<Vertex> path_w;
    if (mode == WitnessMode::Basic) {
        auto by_distance = [&](std::size_t i) { return dist[cycle[i]]; };
        for (std::size_t i = 1; i < len; ++i) {
            if (better(i, u_pos, by_distance)) u_pos = i;
        }
        // Farther from u along C wins.
        auto by_spread = [&](std::size_t i) { return -static_cast<long long>(on_cycle_distance(i, u_pos)); };
        bool found = false;
        for (std::size_t i = 0; i < len; ++i) {
            if (dist[cycle[i]] > k) continue;
            if (!found || better(i, w_pos, by_spread)) w_pos = i;
            found = true;
        }
    } else {
        for (Vertex c : cycle) {
            if (dist[c] > k) witness_precondition("adjacent-pair mode needs v to k-dominate all of C");
        }
        auto by_far = [&](std::size_t i) { return -static_cast<long long>(dist[cycle[i]]); };
        for (std::size_t i = 1; i < len; ++i) {
            if (better(i, w_pos, by_far)) w_pos = i;
        }
        std::size_t a = (w_pos + len - 1) % len;
        std::size_t b = (w_pos + 1) % len;
        if (cycle[b] < cycle[a]) std::swap(a, b);
        const Dist far = dist[cycle[w_pos]];
        if (dist[cycle[a]] == far) {
            u_pos = a;
        } else if (dist[cycle[b]] == far) {
            u_pos = b;
        } else {
            // Both cycle neighbors are one step closer; at most one lies on P_w.
            path_w = shortest_path(g, v, cycle[w_pos]);
            bool a_on_path = std::find(path_w.begin(), path_w.end(), cycle[a]) != path_w.end();
            u_pos = a_on_path ? b : a;
        }
    }

    CycleWitness out;
    out.u = cycle[u_pos];
    out.w = cycle[w_pos];
    out.path_u = shortest_path(g, v, out.u);
    out.path_w = path_w.empty() ? shortest_path(g, v, out.w) : std::move(path_w);

    // Re-verify the returned paths explicitly.
    auto contains = [](const std::vector<Vertex>& p, Vertex x) { return std::find(p.begin(), p.end(), x) != p.end(); };
    bool ok = out.u != out.w && dist[out.u] <= k && dist[out.w] <= k &&
              out.path_u.size() == static_cast<std::size_t>(dist[out.u]) + 1 &&
              out.path_w.size() == static_cast<std::size_t>(dist[out.w]) + 1 && !contains(out.path_u, out.w) &&
              !contains(out.path_w, out.u);
    for (std::size_t i = 0; ok && i + 1 < out.path_u.size(); ++i) ok = g.adjacent(out.path_u[i], out.path_u[i + 1]);
    for (std::size_t i = 0; ok && i + 1 < out.path_w.size(); ++i) ok = g.adjacent(out.path_w[i], out.path_w[i + 1]);
    if (!ok) throw std::logic_error("cycle witness failed verification");
    return out;
}

}  // namespace kdom
