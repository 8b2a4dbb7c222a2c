#include "kdom/report_json.hpp"

namespace kdom {

namespace {

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json bound_json(const std::optional<BoundEntry>& b) {
    if (!b) return nullptr;
    return Json{{"value", b->value}, {"numerator", b->raw.numerator}, {"denominator", b->raw.denominator}};
}

}  // namespace

Json distance_json(Dist d) { return d == kInfinity ? Json(nullptr) : Json(d); }

Json to_json(const Certificate& cert) {
    return Json{
        {"k", cert.k},
        {"gamma_k", cert.value},
        {"status", to_string(cert.status)},
        {"method", to_string(cert.method)},
        {"set", cert.set.to_vector()},
        {"lower_bound_used", cert.lower_bound_used},
        {"nodes_explored", cert.nodes_explored},
        {"components", cert.components},
    };
}

Json to_json(const Metrics& m, const Graph& g) {
    Json ecc = Json::array();
    for (Dist e : m.eccentricity) ecc.push_back(distance_json(e));
    Json cycle = nullptr;
    if (auto c = shortest_cycle(g)) cycle = *c;
    return Json{
        {"n", g.order()},
        {"m", g.size()},
        {"min_degree", g.min_degree()},
        {"max_degree", g.max_degree()},
        {"connected", m.connected},
        {"diameter", distance_json(m.diameter)},
        {"radius", distance_json(m.radius)},
        {"girth", distance_json(m.girth)},
        {"eccentricity", ecc},
        {"shortest_cycle", cycle},
    };
}

Json to_json(const BoundsReport& r) {
    return Json{
        {"k", r.k},
        {"n", r.n},
        {"m", r.m},
        {"min_degree", r.min_degree},
        {"max_degree", r.max_degree},
        {"connected", r.connected},
        {"diameter", distance_json(r.diameter)},
        {"radius", distance_json(r.radius)},
        {"girth", distance_json(r.girth)},
        {"lower",
         {{"diameter", bound_json(r.lb_diameter)},
          {"radius", bound_json(r.lb_radius)},
          {"girth", bound_json(r.lb_girth)},
          {"packing", bound_json(r.lb_packing)},
          {"best", r.best_lower()}}},
        {"upper",
         {{"meir_moon", bound_json(r.ub_meir_moon)},
          {"tian_xu", bound_json(r.ub_tian_xu)},
          {"henning_lichiardopol", bound_json(r.ub_henning_lichiardopol)},
          {"greedy", bound_json(r.ub_greedy)},
          {"best", r.best_upper()}}},
        {"exact", r.exact ? to_json(*r.exact) : Json(nullptr)},
        {"verdict", to_string(r.verdict)},
    };
}

Json to_json(const ProductBoundReport& r) {
    return Json{
        {"k", r.k},
        {"gamma_left", r.gamma_left},
        {"gamma_right", r.gamma_right},
        {"gamma_product", r.gamma_product},
        {"product_connected", r.product_connected},
        {"product_components", r.product_components},
        {"bound", r.bound},
        {"bound_holds", r.bound_holds ? Json(*r.bound_holds) : Json(nullptr)},
        {"left_projection_dominates", r.left_projection_dominates},
        {"right_projection_dominates", r.right_projection_dominates},
        {"product_set", r.product_certificate.set.to_vector()},
    };
}

Json to_json(const SpanningTreeResult& r) {
    return Json{
        {"n", r.tree.order()},
        {"tree_edges", edges_json(r.tree.edges())},
        {"dominating_set", r.dominating_set},
        {"partition", r.partition},
        {"connectors", edges_json(r.connectors)},
    };
}

Json to_json(const CycleWitness& w) {
    return Json{{"u", w.u}, {"w", w.w}, {"path_u", w.path_u}, {"path_w", w.path_w}};
}

Json to_json(const FuzzReport& r) {
    const FuzzConfig& c = r.config;
    Json checks = Json::object();
    for (const auto& [name, counts] : r.checks) {
        checks[name] = {{"pass", counts.pass}, {"fail", counts.fail}, {"skip", counts.skip}};
    }
    Json skipped = Json::object();
    for (const auto& [reason, count] : r.skipped) skipped[reason] = count;
    Json failures = Json::array();
    for (const FuzzFailure& f : r.failures) {
        Json entry{{"trial", f.trial}, {"invariant", f.invariant}, {"k", f.k}, {"graph", f.graph}};
        if (f.second_graph) entry["second_graph"] = *f.second_graph;
        entry["detail"] = f.detail;
        failures.push_back(std::move(entry));
    }
    return Json{
        {"schema", kSchema},
        {"command", "fuzz"},
        {"seed", c.seed},
        {"trials", c.trials},
        {"trials_run", r.trials_run},
        {"generator_params",
         {{"n_min", c.n_min},
          {"n_max", c.n_max},
          {"p_min", c.p_min},
          {"p_max", c.p_max},
          {"k", c.ks},
          {"factor_n_max", c.factor_n_max},
          {"rng", "mt19937_64"}}},
        {"fallback_graphs", r.fallback_graphs},
        {"checks_run", checks},
        {"skipped", skipped},
        {"failures", failures},
        {"timing", {{"wall_seconds", r.wall_seconds}}},
    };
}

}  // namespace kdom
