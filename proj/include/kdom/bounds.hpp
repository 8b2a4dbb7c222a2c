#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kdom/constructions.hpp"
#include "kdom/graph.hpp"
#include "kdom/solver.hpp"

namespace kdom {

/// A bound formula value p/q before rounding.
struct Fraction {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    std::uint64_t ceil() const { return (numerator + denominator - 1) / denominator; }
    std::uint64_t floor() const { return numerator / denominator; }
    double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// One bound in a report: the raw formula and its integer rounding
/// (ceiling for lower bounds, floor for upper bounds). An empty optional
/// means the bound's hypotheses do not hold for this graph.
struct BoundEntry {
    Fraction raw;
    std::uint64_t value = 0;
};

// Lower bounds, all ceil'd; gamma_k is an integer.

/// ceil((d+1)/(2k+1)). Throws InfiniteDiameter when d == kInfinity.
std::uint64_t lb_diameter(Dist diameter, Dist k);
/// ceil(2r/(2k+1)), which is 0 for r = 0. Throws InfiniteRadius.
std::uint64_t lb_radius(Dist radius, Dist k);
/// ceil(g/(2k+1)); 1 for an acyclic graph (girth kInfinity).
std::uint64_t lb_girth(Dist girth, Dist k);

/// max(1, bound): every non-empty graph needs at least one dominator.
inline std::uint64_t effective_lower(std::uint64_t bound) { return bound < 1 ? 1 : bound; }

// Upper bounds for connected graphs, all floor'd; nullopt when inapplicable.

/// n/(k+1); needs n >= k+1.
std::optional<std::uint64_t> ub_meir_moon(std::size_t n, Dist k);
/// (n - Δ + k - 1)/k; needs n >= k+1.
std::optional<std::uint64_t> ub_tian_xu(std::size_t n, std::size_t max_degree, Dist k);
/// (n + δ - Δ)/(δ + k - 1); needs k >= 2, δ >= 2, n >= Δ + k - 1.
std::optional<std::uint64_t> ub_henning_lichiardopol(std::size_t n, std::size_t min_degree, std::size_t max_degree,
                                                     Dist k);

enum class Verdict { Consistent, ViolationDetected, ExactUnavailable };
std::string_view to_string(Verdict verdict);

struct BoundsReport {
    Dist k = 1;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    bool connected = true;
    Dist diameter = kInfinity;
    Dist radius = kInfinity;
    Dist girth = kInfinity;

    std::optional<BoundEntry> lb_diameter;
    std::optional<BoundEntry> lb_radius;
    std::optional<BoundEntry> lb_girth;
    std::optional<BoundEntry> lb_packing;
    std::optional<BoundEntry> ub_meir_moon;
    std::optional<BoundEntry> ub_tian_xu;
    std::optional<BoundEntry> ub_henning_lichiardopol;
    BoundEntry ub_greedy;

    std::optional<Certificate> exact;
    Verdict verdict = Verdict::ExactUnavailable;

    /// Largest applicable lower bound, at least 1 for a non-empty graph.
    std::uint64_t best_lower() const;
    /// Smallest applicable upper bound (the greedy one always applies).
    std::uint64_t best_upper() const;
};

/// Computes every applicable bound and, if `solve_exact`, gamma_k within
/// budget. The verdict is Consistent iff max(lower) <= gamma_k <= min(upper).
BoundsReport bounds_report(const Graph& g, Dist k, const Budget& budget = {}, bool solve_exact = true);

struct ProductBoundReport {
    Dist k = 1;
    std::size_t gamma_left = 0;
    std::size_t gamma_right = 0;
    /// gamma_k of the product; summed over components if disconnected.
    std::size_t gamma_product = 0;
    bool product_connected = true;
    std::size_t product_components = 1;
    /// gamma_left + gamma_right - 1.
    std::size_t bound = 0;
    /// Whether gamma_product >= bound. Empty when the product is disconnected
    /// and therefore outside the set of checked instances.
    std::optional<bool> bound_holds;
    /// Both projections of the product's minimum set are k-dominating.
    bool left_projection_dominates = false;
    bool right_projection_dominates = false;
    Certificate product_certificate;
};

/// Solves G, H and G×H exactly and checks the direct product lower bound
/// together with the projection property of the product's minimum set.
/// Throws DisconnectedInput for a disconnected factor, BudgetExceeded if any
/// of the three solves does not finish.
ProductBoundReport product_bound_check(const Graph& left, const Graph& right, Dist k, const Budget& budget = {});

}  // namespace kdom
