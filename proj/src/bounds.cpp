#include "kdom/bounds.hpp"

#include <algorithm>

#include "kdom/error.hpp"

namespace kdom {

namespace {

std::uint64_t odd_width(Dist k) { return 2 * std::uint64_t{k} + 1; }

BoundEntry lower_entry(Fraction raw) { return {raw, raw.ceil()}; }
BoundEntry upper_entry(Fraction raw) { return {raw, raw.floor()}; }

}  // namespace

std::uint64_t lb_diameter(Dist diameter, Dist k) {
    if (diameter == kInfinity) throw Error(ErrorCode::InfiniteDiameter, "graph is disconnected");
    return Fraction{std::uint64_t{diameter} + 1, odd_width(k)}.ceil();
}

std::uint64_t lb_radius(Dist radius, Dist k) {
    if (radius == kInfinity) throw Error(ErrorCode::InfiniteRadius, "graph is disconnected");
    return Fraction{2 * std::uint64_t{radius}, odd_width(k)}.ceil();
}

std::uint64_t lb_girth(Dist girth, Dist k) {
    if (girth == kInfinity) return 1;
    return Fraction{girth, odd_width(k)}.ceil();
}

std::optional<std::uint64_t> ub_meir_moon(std::size_t n, Dist k) {
    if (n < std::size_t{k} + 1) return std::nullopt;
    return n / (std::uint64_t{k} + 1);
}

std::optional<std::uint64_t> ub_tian_xu(std::size_t n, std::size_t max_degree, Dist k) {
    if (k == 0 || n < std::size_t{k} + 1 || max_degree >= n) return std::nullopt;
    return (n - max_degree + k - 1) / k;
}

std::optional<std::uint64_t> ub_henning_lichiardopol(std::size_t n, std::size_t min_degree, std::size_t max_degree,
                                                     Dist k) {
    if (k < 2 || min_degree < 2 || n + 1 < max_degree + k) return std::nullopt;
    return (n + min_degree - max_degree) / (min_degree + k - 1);
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Consistent: return "Consistent";
        case Verdict::ViolationDetected: return "ViolationDetected";
        case Verdict::ExactUnavailable: return "ExactUnavailable";
    }
    return "Unknown";
}

std::uint64_t BoundsReport::best_lower() const {
    std::uint64_t best = n == 0 ? 0 : 1;
    for (const auto* b : {&lb_diameter, &lb_radius, &lb_girth, &lb_packing}) {
        if (b->has_value()) best = std::max(best, (*b)->value);
    }
    return best;
}

std::uint64_t BoundsReport::best_upper() const {
    std::uint64_t best = ub_greedy.value;
    for (const auto* b : {&ub_meir_moon, &ub_tian_xu, &ub_henning_lichiardopol}) {
        if (b->has_value()) best = std::min(best, (*b)->value);
    }
    return best;
}

BoundsReport bounds_report(const Graph& g, Dist k, const Budget& budget, bool solve_exact) {
    if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be at least 1");
    const Metrics& met = g.metrics();
    BoundsReport r;
    r.k = k;
    r.n = g.order();
    r.m = g.size();
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.connected = met.connected;
    r.diameter = met.diameter;
    r.radius = met.radius;
    r.girth = met.girth;

    if (r.n > 0 && r.connected) {
        r.lb_diameter = lower_entry({std::uint64_t{r.diameter} + 1, odd_width(k)});
        r.lb_radius = lower_entry({2 * std::uint64_t{r.radius}, odd_width(k)});
        r.lb_packing = lower_entry({packing_lower(g, k), 1});
        // The cited upper bounds are all stated for connected graphs.
        if (ub_meir_moon(r.n, k)) r.ub_meir_moon = upper_entry({r.n, std::uint64_t{k} + 1});
        if (ub_tian_xu(r.n, r.max_degree, k)) {
            r.ub_tian_xu = upper_entry({r.n - r.max_degree + k - 1, k});
        }
        if (ub_henning_lichiardopol(r.n, r.min_degree, r.max_degree, k)) {
            r.ub_henning_lichiardopol = upper_entry({r.n + r.min_degree - r.max_degree, r.min_degree + k - 1});
        }
    }
    // The component holding a shortest cycle already needs this many, so the
    // girth bound survives disconnection.
    if (r.girth != kInfinity) r.lb_girth = lower_entry({r.girth, odd_width(k)});

    Certificate greedy = greedy_upper(g, k);
    r.ub_greedy = {{greedy.value, 1}, greedy.value};

    bool ordered = r.best_lower() <= r.best_upper();
    if (solve_exact) {
        r.exact = gamma_k_exact(g, k, budget);
        ordered = ordered && r.best_lower() <= r.exact->value;
        if (r.exact->status == CertificateStatus::Exact) {
            ordered = ordered && r.exact->value <= r.best_upper();
            r.verdict = ordered ? Verdict::Consistent : Verdict::ViolationDetected;
            return r;
        }
    }
    r.verdict = ordered ? Verdict::ExactUnavailable : Verdict::ViolationDetected;
    return r;
}

ProductBoundReport product_bound_check(const Graph& left, const Graph& right, Dist k, const Budget& budget) {
    if (!left.metrics().connected || !right.metrics().connected) {
        throw Error(ErrorCode::DisconnectedInput, "product bound needs connected factors");
    }
    auto solve = [&](const Graph& g, const char* which) {
        Certificate c = gamma_k_exact(g, k, budget);
        if (c.status != CertificateStatus::Exact) {
            throw Error(ErrorCode::BudgetExceeded, std::string("exact solve of ") + which + " did not finish");
        }
        return c;
    };
    DirectProduct product = direct_product(left, right);

    ProductBoundReport r;
    r.k = k;
    r.gamma_left = solve(left, "left factor").value;
    r.gamma_right = solve(right, "right factor").value;
    r.product_certificate = solve(product.graph, "product");
    r.gamma_product = r.product_certificate.value;
    r.product_connected = product.graph.metrics().connected;
    r.product_components = r.product_certificate.components;
    r.bound = r.gamma_left + r.gamma_right - 1;
    if (r.product_connected) r.bound_holds = r.gamma_product >= r.bound;
    r.left_projection_dominates =
        is_k_dominating(left, project(r.product_certificate.set, product.shape, Side::Left), k);
    r.right_projection_dominates =
        is_k_dominating(right, project(r.product_certificate.set, product.shape, Side::Right), k);
    return r;
}

}  // namespace kdom
