#include "kdom/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <thread>

#include "kdom/bounds.hpp"
#include "kdom/constructions.hpp"
#include "kdom/edge_list.hpp"
#include "kdom/error.hpp"
#include "kdom/random.hpp"

namespace kdom {

namespace {

const char* const kSolverEquivalence = "solver_equivalence";
const char* const kSandwich = "sandwich";
const char* const kDiameterBound = "diameter_bound";
const char* const kRadiusBound = "radius_bound";
const char* const kGirthBound = "girth_bound";
const char* const kUpperBounds = "upper_bounds";
const char* const kRadiusOne = "radius_one";
const char* const kMonotoneInK = "monotone_in_k";
const char* const kSpanningTree = "spanning_tree";
const char* const kEdgeDeletion = "edge_deletion";
const char* const kCycleWitness = "cycle_witness";
const char* const kProjectionDominates = "projection_dominates";
const char* const kDirectProductBound = "direct_product_bound";

// Per-trial, per-check outcome folded over all k.
struct Tally {
    bool passed = false;
    bool failed = false;
};

struct TrialResult {
    bool fallback = false;
    std::map<std::string, Tally> tallies;
    std::map<std::string, std::size_t> skip_reasons;
    std::vector<FuzzFailure> failures;
};

class Trial {
public:
    Trial(const FuzzConfig& config, std::size_t index)
        : config_(config), index_(index), rng_(mix_seed(config.seed, index)) {}

    TrialResult run() {
        std::size_t n = rng_.uniform(config_.n_min, config_.n_max);
        double p = rng_.uniform_real(config_.p_min, config_.p_max);
        ConnectedSample sample = random_connected_graph(rng_, n, p);
        result_.fallback = sample.used_fallback;
        graph_text_ = serialize_edge_list(sample.graph);

        std::size_t left_n = rng_.uniform(2, config_.factor_n_max);
        std::size_t right_n = rng_.uniform(2, config_.factor_n_max);
        Graph left = random_connected_graph(rng_, left_n, p).graph;
        Graph right = random_connected_graph(rng_, right_n, p).graph;

        for (Dist k : config_.ks) {
            guarded(kSolverEquivalence, k, [&] { check_graph(sample.graph, k); });
            guarded(kProjectionDominates, k, [&] { check_product(left, right, k); }, &left, &right);
        }
        return std::move(result_);
    }

private:
    void pass(const std::string& check) { result_.tallies[check].passed = true; }
    void skip(const std::string& check, const std::string& reason) {
        result_.tallies[check];
        ++result_.skip_reasons[reason];
    }
    void fail(const std::string& check, Dist k, const std::string& detail, const Graph* left = nullptr,
              const Graph* right = nullptr) {
        result_.tallies[check].failed = true;
        FuzzFailure f;
        f.trial = index_;
        f.invariant = check;
        f.k = k;
        f.graph = left != nullptr ? serialize_edge_list(*left) : graph_text_;
        if (right != nullptr) f.second_graph = serialize_edge_list(*right);
        f.detail = detail;
        result_.failures.push_back(std::move(f));
    }
    void expect(const std::string& check, Dist k, bool ok, const std::string& detail) {
        if (ok) {
            pass(check);
        } else {
            fail(check, k, detail);
        }
    }

    // An unexpected exception is itself a failure of the check being run.
    void guarded(const std::string& check, Dist k, const std::function<void()>& body, const Graph* left = nullptr,
                 const Graph* right = nullptr) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(check, k, std::string("exception: ") + e.what(), left, right);
        }
    }

    void check_graph(const Graph& g, Dist k) {
        const Metrics& m = g.metrics();
        const Certificate oracle = gamma_k_oracle(g, k);
        const std::size_t gamma = oracle.value;
        const auto tag = [&](const std::string& what) { return what + " (gamma_k=" + std::to_string(gamma) + ")"; };

        const Certificate exact = gamma_k_exact(g, k, config_.budget);
        if (exact.status != CertificateStatus::Exact) {
            skip(kSolverEquivalence, "budget");
        } else {
            expect(kSolverEquivalence, k,
                   exact.value == gamma && is_k_dominating(g, exact.set, k) && is_k_dominating(g, oracle.set, k),
                   tag("branch and bound found " + std::to_string(exact.value)));
        }

        const std::size_t packing = packing_lower(g, k);
        const Certificate greedy = greedy_upper(g, k);
        expect(kSandwich, k, packing <= gamma && gamma <= greedy.value && is_k_dominating(g, greedy.set, k),
               tag("packing " + std::to_string(packing) + ", greedy " + std::to_string(greedy.value)));

        expect(kDiameterBound, k, gamma >= lb_diameter(m.diameter, k), tag("diameter " + std::to_string(m.diameter)));
        expect(kRadiusBound, k, gamma >= effective_lower(lb_radius(m.radius, k)),
               tag("radius " + std::to_string(m.radius)));
        if (m.girth == kInfinity) {
            skip(kGirthBound, "acyclic");
        } else {
            expect(kGirthBound, k, gamma >= lb_girth(m.girth, k), tag("girth " + std::to_string(m.girth)));
        }

        bool upper_ok = true;
        for (auto ub : {ub_meir_moon(g.order(), k), ub_tian_xu(g.order(), g.max_degree(), k),
                        ub_henning_lichiardopol(g.order(), g.min_degree(), g.max_degree(), k)}) {
            if (ub && gamma > *ub) upper_ok = false;
        }
        expect(kUpperBounds, k, upper_ok, tag("a cited upper bound is exceeded"));

        expect(kRadiusOne, k, (gamma == 1) == (m.radius <= k), tag("radius " + std::to_string(m.radius)));

        const std::size_t next_gamma = gamma_k_oracle(g, k + 1).value;
        expect(kMonotoneInK, k, next_gamma <= gamma, tag("gamma_{k+1}=" + std::to_string(next_gamma)));

        guarded(kSpanningTree, k, [&] { check_spanning_tree(g, k, gamma); });
        guarded(kEdgeDeletion, k, [&] { check_edge_deletion(g, k, gamma); });
        guarded(kCycleWitness, k, [&] { check_cycle_witness(g, k); });
    }

    void check_spanning_tree(const Graph& g, Dist k, std::size_t gamma) {
        SpanningTreeResult st;
        try {
            st = preserving_spanning_tree(g, k, config_.budget);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            skip(kSpanningTree, "budget");
            return;
        }
        const Graph& t = st.tree;
        bool ok = t.order() == g.order() && t.size() + 1 == g.order() && t.metrics().connected;
        for (const Edge& e : t.edges()) ok = ok && g.adjacent(e.u, e.v);
        const Metrics& gm = g.metrics();
        const Metrics& tm = t.metrics();
        for (Vertex v = 0; ok && v < g.order(); ++v) {
            Vertex root = st.dominating_set[st.partition[v]];
            ok = tm.distance(v, root) <= k && tm.distance(v, root) == gm.distance(v, root);
        }
        const std::size_t tree_gamma = ok ? gamma_k_oracle(t, k).value : 0;
        expect(kSpanningTree, k, ok && tree_gamma == gamma,
               "tree gamma_k=" + std::to_string(tree_gamma) + ", graph gamma_k=" + std::to_string(gamma));
    }

    void check_edge_deletion(const Graph& g, Dist k, std::size_t gamma) {
        std::vector<Edge> removable;
        for (const Edge& e : g.edges()) {
            if (remove_edge(g, e).metrics().connected) removable.push_back(e);
        }
        if (removable.empty()) {
            skip(kEdgeDeletion, "acyclic");
            return;
        }
        const Edge e = removable[rng_.uniform(0, removable.size() - 1)];
        const std::size_t smaller = gamma_k_oracle(remove_edge(g, e), k).value;
        expect(kEdgeDeletion, k, gamma <= smaller,
               "removing " + std::to_string(e.u) + "-" + std::to_string(e.v) + " gives gamma_k=" +
                   std::to_string(smaller) + " < " + std::to_string(gamma));
    }

    void check_cycle_witness(const Graph& g, Dist k) {
        auto cycle = shortest_cycle(g);
        if (!cycle) {
            skip(kCycleWitness, "acyclic");
            return;
        }
        const Metrics& m = g.metrics();
        std::vector<bool> on_cycle(g.order(), false);
        for (Vertex c : *cycle) on_cycle[c] = true;
        bool any = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (on_cycle[v]) continue;
            std::size_t dominated = 0;
            for (Vertex c : *cycle) dominated += m.distance(v, c) <= k ? 1 : 0;
            if (dominated < 2 * std::size_t{k}) continue;
            any = true;
            std::vector<WitnessMode> modes{WitnessMode::Basic};
            if (dominated == cycle->size()) modes.push_back(WitnessMode::AdjacentPair);
            for (WitnessMode mode : modes) {
                CycleWitness w = cycle_outsider_witness(g, *cycle, v, k, mode);
                auto has = [](const std::vector<Vertex>& p, Vertex x) {
                    return std::find(p.begin(), p.end(), x) != p.end();
                };
                bool ok = m.distance(v, w.u) <= k && m.distance(v, w.w) <= k && !has(w.path_u, w.w) &&
                          !has(w.path_w, w.u) && w.path_u.size() == m.distance(v, w.u) + 1 &&
                          w.path_w.size() == m.distance(v, w.w) + 1;
                if (mode == WitnessMode::AdjacentPair) ok = ok && g.adjacent(w.u, w.w);
                expect(kCycleWitness, k, ok, "vertex " + std::to_string(v));
            }
        }
        if (!any) skip(kCycleWitness, "no_eligible_vertex");
    }

    void check_product(const Graph& left, const Graph& right, Dist k) {
        ProductBoundReport r;
        try {
            r = product_bound_check(left, right, k, config_.budget);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            skip(kProjectionDominates, "budget");
            skip(kDirectProductBound, "budget");
            return;
        }
        const std::string detail = "gamma_k(G)=" + std::to_string(r.gamma_left) + ", gamma_k(H)=" +
                                   std::to_string(r.gamma_right) + ", gamma_k(GxH)=" + std::to_string(r.gamma_product);
        if (r.left_projection_dominates && r.right_projection_dominates) {
            pass(kProjectionDominates);
        } else {
            fail(kProjectionDominates, k, detail, &left, &right);
        }
        if (!r.bound_holds) {
            skip(kDirectProductBound, "disconnected_product");
        } else if (*r.bound_holds) {
            pass(kDirectProductBound);
        } else {
            fail(kDirectProductBound, k, detail, &left, &right);
        }
    }

    const FuzzConfig& config_;
    std::size_t index_;
    Rng rng_;
    std::string graph_text_;
    TrialResult result_;
};

void validate(const FuzzConfig& c) {
    auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidParameter, what); };
    if (c.n_min < 1 || c.n_min > c.n_max) bad("need 1 <= n-min <= n-max");
    if (c.n_max > kDefaultOracleCap) bad("n-max above the oracle cap of " + std::to_string(kDefaultOracleCap));
    if (!(c.p_min >= 0.0 && c.p_min <= c.p_max && c.p_max <= 1.0)) bad("need 0 <= p-min <= p-max <= 1");
    if (c.ks.empty()) bad("need at least one k");
    if (std::find(c.ks.begin(), c.ks.end(), Dist{0}) != c.ks.end()) bad("k must be at least 1");
    if (c.factor_n_max < 2) bad("product factors need at least 2 vertices");
}

}  // namespace

const std::vector<std::string>& fuzz_check_names() {
    static const std::vector<std::string> names{
        kSolverEquivalence, kSandwich,      kDiameterBound, kRadiusBound,  kGirthBound,
        kUpperBounds,       kRadiusOne,     kMonotoneInK,   kSpanningTree, kEdgeDeletion,
        kCycleWitness,      kProjectionDominates, kDirectProductBound,
    };
    return names;
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();

    std::vector<TrialResult> results(config.trials);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= config.trials || i > first_failure.load()) return;
            results[i] = Trial(config, i).run();
            if (!results[i].failures.empty()) {
                std::size_t seen = first_failure.load();
                while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    std::size_t threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(config.trials, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    FuzzReport report;
    report.config = config;
    const std::size_t stop = first_failure.load();
    report.trials_run = stop == std::numeric_limits<std::size_t>::max() ? config.trials : stop + 1;
    for (const auto& name : fuzz_check_names()) report.checks[name];
    for (std::size_t i = 0; i < report.trials_run; ++i) {
        TrialResult& r = results[i];
        report.fallback_graphs += r.fallback ? 1 : 0;
        for (const auto& name : fuzz_check_names()) {
            const Tally t = r.tallies.count(name) ? r.tallies.at(name) : Tally{};
            CheckCounts& c = report.checks[name];
            if (t.failed) {
                ++c.fail;
            } else if (t.passed) {
                ++c.pass;
            } else {
                ++c.skip;
            }
        }
        for (const auto& [reason, count] : r.skip_reasons) report.skipped[reason] += count;
        for (auto& f : r.failures) report.failures.push_back(std::move(f));
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace kdom
