#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kdom/graph.hpp"
#include "kdom/solver.hpp"

namespace kdom {

// ---------------------------------------------------------------------------
// Generators. Vertices are labelled 0..n-1 in the natural order.
// ---------------------------------------------------------------------------

/// P_n. Throws InvalidOrder for n < 1.
Graph path(std::size_t n);
/// C_n. Throws InvalidOrder for n < 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// K_{1,leaves} with the centre at 0.
Graph star(std::size_t leaves);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();

/// Path v_1..v_{n_base} whose internal vertices are blown up into cliques
/// of size `delta`, with complete joins between consecutive cells. Vertex 0
/// is v_1, the last vertex is v_{n_base}, and cell V_i (2 <= i < n_base)
/// occupies indices 1 + (i-2)*delta .. (i-1)*delta.
/// Throws InvalidOrder for n_base < 3 or delta < 1.
Graph clique_expanded_path(std::size_t n_base, std::size_t delta);

// ---------------------------------------------------------------------------
// Direct product.
// ---------------------------------------------------------------------------

struct ProductVertex {
    Vertex g;
    Vertex h;
    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Flattening (g, h) <-> g * right_order + h.
struct ProductShape {
    std::size_t left_order = 0;
    std::size_t right_order = 0;

    std::size_t order() const { return left_order * right_order; }
    Vertex flat(ProductVertex p) const { return static_cast<Vertex>(p.g * right_order + p.h); }
    ProductVertex decode(Vertex flat) const {
        return {static_cast<Vertex>(flat / right_order), static_cast<Vertex>(flat % right_order)};
    }
};

struct DirectProduct {
    Graph graph;
    ProductShape shape;
};

/// G × H: (g1,h1) ~ (g2,h2) iff g1 ~ g2 in G and h1 ~ h2 in H.
/// Throws EmptyFactor if either factor has no vertices.
DirectProduct direct_product(const Graph& left, const Graph& right);

enum class Side { Left, Right };

std::vector<Vertex> project(std::span<const ProductVertex> set, Side side);
/// Projection of a set of flat product vertices onto one factor.
VertexSet project(const VertexSet& flat_set, const ProductShape& shape, Side side);

// ---------------------------------------------------------------------------
// Spanning tree with the same k-domination number.
// ---------------------------------------------------------------------------

struct SpanningTreeResult {
    Graph tree;
    /// Minimum k-dominating set of the input; member i roots cell i.
    std::vector<Vertex> dominating_set;
    /// Cell index of every vertex.
    std::vector<std::size_t> partition;
    /// The inter-cell edges joining the cell trees, in the order chosen.
    std::vector<Edge> connectors;
};

/// Partitions V around a minimum k-dominating set S by nearest member of S
/// (lowest index on ties), grows a BFS tree inside every cell from its root,
/// then joins the cells with the lexicographically first crossing edges.
/// Every vertex keeps its distance to its cell root, so S still k-dominates
/// the tree.
/// Throws DisconnectedInput, or BudgetExceeded if S cannot be proven minimum.
SpanningTreeResult preserving_spanning_tree(const Graph& g, Dist k, const Budget& budget = {});

// ---------------------------------------------------------------------------
// Vertices outside a shortest cycle.
// ---------------------------------------------------------------------------

struct CycleWitness {
    Vertex u;
    Vertex w;
    /// Shortest (v, u)- and (v, w)-paths, starting at v.
    std::vector<Vertex> path_u;
    std::vector<Vertex> path_w;
};

enum class WitnessMode {
    /// u nearest to v on C, w the k-dominated cycle vertex farthest from u along C.
    Basic,
    /// u and w adjacent on C; requires v to k-dominate every vertex of C.
    AdjacentPair,
};

/// Given a shortest cycle C (as an ordered vertex list) and a vertex v off C
/// that k-dominates at least 2k vertices of C, returns u, w on C, both within
/// distance k of v, with w not on the returned shortest (v,u)-path and u not
/// on the returned shortest (v,w)-path. Throws PreconditionViolated.
CycleWitness cycle_outsider_witness(const Graph& g, std::span<const Vertex> cycle, Vertex v, Dist k,
                                    WitnessMode mode = WitnessMode::Basic);

}  // namespace kdom
