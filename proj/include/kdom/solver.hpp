#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "kdom/graph.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

enum class CertificateStatus { Exact, UpperBoundOnly };
enum class SolveMethod { Oracle, BranchAndBound, Greedy, ClosedForm };

std::string_view to_string(CertificateStatus status);
std::string_view to_string(SolveMethod method);

/// A k-dominating set together with what is known about its optimality.
struct Certificate {
    Dist k = 1;
    VertexSet set;
    std::size_t value = 0;
    CertificateStatus status = CertificateStatus::UpperBoundOnly;
    std::size_t lower_bound_used = 0;
    std::uint64_t nodes_explored = 0;
    SolveMethod method = SolveMethod::Greedy;
    /// Number of connected components solved independently.
    std::size_t components = 1;
};

/// Search limits for the exact solver; whichever is hit first ends the search.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;
    double max_seconds = 30.0;
};

inline constexpr std::size_t kDefaultOracleCap = 16;

/// True iff every vertex lies within distance k of some member of `set`.
bool is_k_dominating(const Graph& g, const VertexSet& set, Dist k);

/// Ground truth by enumerating vertex subsets in order of size, then
/// lexicographically. Returns the first minimum k-dominating set.
/// Throws TooLarge if the graph has more than `max_n` vertices.
Certificate gamma_k_oracle(const Graph& g, Dist k, std::size_t max_n = kDefaultOracleCap);

/// Set-cover greedy: repeatedly take the vertex whose k-ball covers the most
/// uncovered vertices, lowest index on ties.
Certificate greedy_upper(const Graph& g, Dist k);

/// Size of a greedy maximal set of vertices pairwise at distance >= 2k+1.
/// No vertex k-dominates two of them, so this lower-bounds gamma_k.
/// Throws DisconnectedInput.
std::size_t packing_lower(const Graph& g, Dist k);

/// Exact gamma_k by branch and bound over the k-ball set cover. Disconnected
/// graphs are solved per component. If the budget runs out the best
/// incumbent is returned with status UpperBoundOnly.
Certificate gamma_k_exact(const Graph& g, Dist k, const Budget& budget = {});

enum class PathOrCycle { Path, Cycle };

/// gamma_k(P_n) = gamma_k(C_n) = ceil(n / (2k+1)).
/// Throws InvalidOrder for n < 1 (path) or n < 3 (cycle).
std::size_t gamma_path_cycle(std::size_t n, Dist k, PathOrCycle shape);

}  // namespace kdom
