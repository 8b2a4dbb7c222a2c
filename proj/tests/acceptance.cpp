// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kdom/bounds.hpp"
#include "kdom/cli.hpp"
#include "kdom/constructions.hpp"
#include "kdom/random.hpp"
#include "kdom/report_json.hpp"
#include "kdom/solver.hpp"

using namespace kdom;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::size_t samples = 0;
    // Remembers the first problem only; later ones just flip ok.
    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << "n=" << g.order() << " edges=";
    for (const Edge& e : g.edges()) s << e.u << '-' << e.v << ' ';
    return s.str();
}

Certificate oracle(const Graph& g, Dist k) { return gamma_k_oracle(g, k, std::max<std::size_t>(g.order(), 1)); }

// Shared corpus for criteria 2 and 3.
std::vector<Graph> random_corpus() {
    Rng rng(20240601);
    std::vector<Graph> corpus;
    for (int i = 0; i < 240; ++i) {
        const std::size_t n = rng.uniform(4, 14);
        corpus.push_back(random_connected_graph(rng, n, rng.uniform_real(0.15, 0.6)).graph);
    }
    return corpus;
}

Outcome closed_forms() {
    Outcome o;
    for (Dist k = 1; k <= 3; ++k) {
        for (std::size_t n = 1; n <= 16; ++n) {
            const std::uint64_t expected = ceil_div(n, 2 * k + 1);
            if (gamma_k_oracle(path(n), k).value != expected) o.fail("P_" + std::to_string(n) + " k=" + std::to_string(k));
            ++o.samples;
            if (n < 3) continue;
            if (gamma_k_oracle(cycle(n), k).value != expected) o.fail("C_" + std::to_string(n) + " k=" + std::to_string(k));
            ++o.samples;
        }
    }
    return o;
}

Outcome solver_equivalence(const std::vector<Graph>& corpus) {
    Outcome o;
    for (const Graph& g : corpus) {
        for (Dist k = 1; k <= 3; ++k) {
            Certificate exact = gamma_k_exact(g, k);
            Certificate truth = gamma_k_oracle(g, k);
            if (exact.status != CertificateStatus::Exact || exact.value != truth.value || !is_k_dominating(g, exact.set, k)) {
                o.fail("k=" + std::to_string(k) + " " + describe(g));
            }
            ++o.samples;
        }
    }
    return o;
}

Outcome lower_bounds(const std::vector<Graph>& corpus) {
    Outcome o;
    std::size_t cyclic = 0;
    for (const Graph& g : corpus) {
        const Metrics& m = g.metrics();
        for (Dist k = 1; k <= 3; ++k) {
            const std::size_t gamma = gamma_k_oracle(g, k).value;
            const std::uint64_t span = 2 * static_cast<std::uint64_t>(k) + 1;
            if (gamma < ceil_div(m.diameter + 1, span)) o.fail("diameter k=" + std::to_string(k) + " " + describe(g));
            if (gamma < ceil_div(2 * static_cast<std::uint64_t>(m.radius), span)) {
                o.fail("radius k=" + std::to_string(k) + " " + describe(g));
            }
            if (m.girth != kInfinity) {
                ++cyclic;
                if (gamma < ceil_div(m.girth, span)) o.fail("girth k=" + std::to_string(k) + " " + describe(g));
            }
            // The library's own bound functions must agree with the formulas above.
            if (lb_diameter(m.diameter, k) != ceil_div(m.diameter + 1, span) ||
                lb_radius(m.radius, k) != ceil_div(2 * static_cast<std::uint64_t>(m.radius), span) ||
                (m.girth != kInfinity && lb_girth(m.girth, k) != ceil_div(m.girth, span))) {
                o.fail("bound formula mismatch " + describe(g));
            }
            ++o.samples;
        }
    }
    if (cyclic == 0) o.fail("corpus has no cyclic graphs");
    return o;
}

Outcome tightness() {
    Outcome o;
    auto expect = [&](bool holds, const std::string& what) {
        if (!holds) o.fail(what);
        ++o.samples;
    };
    for (Dist k = 1; k <= 3; ++k) {
        const std::size_t span = 2 * k + 1;
        const std::string ks = " k=" + std::to_string(k);
        for (std::size_t l = 1; l <= 4; ++l) {
            Graph p = path(l * span);
            expect(oracle(p, k).value == lb_diameter(p.metrics().diameter, k) && lb_diameter(p.metrics().diameter, k) == l,
                   "diameter P_" + std::to_string(l * span) + ks);
        }
        for (std::size_t l = 1; l <= 2; ++l) {
            Graph p = path(2 * l * span);
            expect(oracle(p, k).value == lb_radius(p.metrics().radius, k), "radius P_" + std::to_string(2 * l * span) + ks);
        }
        for (std::size_t l = 1; l <= 3; ++l) {
            Graph c = cycle(l * span);
            expect(oracle(c, k).value == lb_girth(c.metrics().girth, k), "girth C_" + std::to_string(l * span) + ks);
        }
    }
    for (Dist k = 1; k <= 2; ++k) {
        for (std::size_t delta = 1; delta <= 3; ++delta) {
            Graph g = clique_expanded_path(2 * (2 * k + 1), delta);
            expect(g.min_degree() >= delta && oracle(g, k).value == lb_diameter(g.metrics().diameter, k),
                   "clique-expanded k=" + std::to_string(k) + " delta=" + std::to_string(delta));
        }
    }
    return o;
}

Outcome spanning_trees() {
    Outcome o;
    Rng rng(31337);
    for (int i = 0; i < 120; ++i) {
        Graph g = random_connected_graph(rng, rng.uniform(2, 14), rng.uniform_real(0.15, 0.7)).graph;
        for (Dist k = 1; k <= 2; ++k) {
            SpanningTreeResult st = preserving_spanning_tree(g, k);
            const Graph& t = st.tree;
            bool ok = t.order() == g.order() && t.size() + 1 == g.order() && t.metrics().connected;
            for (const Edge& e : t.edges()) ok = ok && g.adjacent(e.u, e.v);
            for (Vertex v = 0; v < g.order() && ok; ++v) {
                ok = t.metrics().distance(v, st.dominating_set[st.partition[v]]) <= k;
            }
            ok = ok && oracle(t, k).value == oracle(g, k).value;
            if (!ok) o.fail("k=" + std::to_string(k) + " " + describe(g));
            ++o.samples;
        }
    }
    return o;
}

Outcome products() {
    Outcome o;
    Rng rng(8086);
    std::size_t pairs = 0;
    for (int attempt = 0; attempt < 1000 && pairs < 40; ++attempt) {
        Graph left = random_connected_graph(rng, rng.uniform(2, 6), rng.uniform_real(0.3, 0.8)).graph;
        Graph right = random_connected_graph(rng, rng.uniform(2, 6), rng.uniform_real(0.3, 0.8)).graph;
        DirectProduct prod = direct_product(left, right);
        if (!prod.graph.metrics().connected) continue;
        ++pairs;
        for (Dist k = 1; k <= 2; ++k) {
            Certificate best = gamma_k_exact(prod.graph, k);
            const std::size_t gl = oracle(left, k).value;
            const std::size_t gr = oracle(right, k).value;
            bool ok = best.status == CertificateStatus::Exact && is_k_dominating(prod.graph, best.set, k);
            ok = ok && is_k_dominating(left, project(best.set, prod.shape, Side::Left), k);
            ok = ok && is_k_dominating(right, project(best.set, prod.shape, Side::Right), k);
            ok = ok && best.value + 1 >= gl + gr;
            ProductBoundReport r = product_bound_check(left, right, k);
            ok = ok && r.gamma_product == best.value && r.gamma_left == gl && r.gamma_right == gr &&
                 r.bound_holds == true && r.left_projection_dominates && r.right_projection_dominates;
            if (!ok) o.fail("k=" + std::to_string(k) + " G: " + describe(left) + " H: " + describe(right));
        }
    }
    o.samples = pairs;
    if (pairs < 30) o.fail("only " + std::to_string(pairs) + " connected products");
    return o;
}

bool is_shortest_path(const Graph& g, const std::vector<Vertex>& p, Vertex from, Vertex to) {
    if (p.empty() || p.front() != from || p.back() != to) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.adjacent(p[i], p[i + 1])) return false;
    }
    return p.size() - 1 == g.metrics().distance(from, to);
}

// C_g on 0..g-1 plus an apex joined to cycle vertex 0 by a path of length a
// and, when b > 0, to cycle vertex j by a path of length b.
Graph apex_instance(std::size_t g, std::size_t j, std::size_t a, std::size_t b, Vertex& apex) {
    std::vector<Edge> edges = cycle(g).edges();
    Vertex next = static_cast<Vertex>(g);
    apex = next++;
    auto attach = [&](Vertex target, std::size_t length) {
        Vertex prev = apex;
        for (std::size_t step = 1; step < length; ++step) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, target});
    };
    attach(0, a);
    if (b > 0) attach(static_cast<Vertex>(j), b);
    return Graph::from_edge_list(next, edges);
}

Outcome cycle_witnesses() {
    Outcome o;
    for (std::size_t g = 3; g <= 16; ++g) {
        std::vector<Vertex> c(g);
        for (Vertex i = 0; i < g; ++i) c[i] = i;
        for (std::size_t j = 1; j <= g / 2; ++j) {
            for (std::size_t a = 1; a <= 6; ++a) {
                for (std::size_t b = 0; b <= 6; ++b) {
                    Vertex v = 0;
                    Graph h = apex_instance(g, j, a, b, v);
                    if (h.metrics().girth != g) continue;
                    for (Dist k = 1; k <= 6; ++k) {
                        std::size_t dominated = 0;
                        for (Vertex x : c) dominated += h.metrics().distance(v, x) <= k;
                        if (dominated < 2 * static_cast<std::size_t>(k)) continue;
                        ++o.samples;
                        const std::string what = "g=" + std::to_string(g) + " j=" + std::to_string(j) + " a=" +
                                                 std::to_string(a) + " b=" + std::to_string(b) + " k=" + std::to_string(k);
                        try {
                            CycleWitness w = cycle_outsider_witness(h, c, v, k);
                            bool ok = w.u != w.w && w.u < g && w.w < g;
                            ok = ok && is_shortest_path(h, w.path_u, v, w.u) && is_shortest_path(h, w.path_w, v, w.w);
                            ok = ok && h.metrics().distance(v, w.u) <= k && h.metrics().distance(v, w.w) <= k;
                            ok = ok && std::find(w.path_u.begin(), w.path_u.end(), w.w) == w.path_u.end();
                            ok = ok && std::find(w.path_w.begin(), w.path_w.end(), w.u) == w.path_w.end();
                            if (!ok) o.fail(what);
                        } catch (const std::exception& e) {
                            o.fail(what + ": " + e.what());
                        }
                    }
                }
            }
        }
    }
    if (o.samples < 50) o.fail("only " + std::to_string(o.samples) + " instances");
    return o;
}

Outcome edge_deletion() {
    Outcome o;
    Rng rng(4242);
    for (int attempt = 0; attempt < 1000 && o.samples < 150; ++attempt) {
        Graph g = random_connected_graph(rng, rng.uniform(4, 13), rng.uniform_real(0.2, 0.7)).graph;
        std::vector<Edge> edges = g.edges();
        const Edge e = edges[rng.uniform(0, edges.size() - 1)];
        Graph smaller = remove_edge(g, e);
        if (!smaller.metrics().connected) continue;
        ++o.samples;
        for (Dist k = 1; k <= 3; ++k) {
            if (oracle(g, k).value > oracle(smaller, k).value) {
                o.fail("k=" + std::to_string(k) + " edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " " +
                       describe(g));
            }
        }
    }
    if (o.samples < 100) o.fail("only " + std::to_string(o.samples) + " samples");
    return o;
}

std::string fuzz_report(const std::string& seed, const char* threads) {
    if (threads != nullptr) {
        setenv("THREADS", threads, 1);
    } else {
        unsetenv("THREADS");
    }
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::run({"fuzz", "--seed", seed}, in, out, err);
    if (status != cli::kOk) return "exit " + std::to_string(status) + ": " + err.str();
    Json doc = Json::parse(out.str());
    if (!doc.contains("timing")) return "missing timing key";
    doc.erase("timing");
    return doc.dump();
}

Outcome determinism() {
    Outcome o;
    for (const char* seed : {"1", "2024"}) {
        const std::string first = fuzz_report(seed, nullptr);
        if (first.rfind("{", 0) != 0) o.fail(first);
        if (Json::parse(first.rfind("{", 0) == 0 ? first : "{}").value("failures", Json::array()).size() != 0) {
            o.fail("fuzz seed " + std::string(seed) + " reported failures");
        }
        for (const char* threads : {static_cast<const char*>(nullptr), "1", "3"}) {
            if (fuzz_report(seed, threads) != first) {
                o.fail("seed " + std::string(seed) + " threads " + (threads ? threads : "default"));
            }
        }
        o.samples += 4;
    }
    unsetenv("THREADS");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Graph> corpus = random_corpus();
    const std::vector<Criterion> criteria{
        {1, "closed forms for paths and cycles", 10.0, closed_forms},
        {2, "branch and bound matches the oracle", 60.0, [&] { return solver_equivalence(corpus); }},
        {3, "diameter, radius and girth lower bounds", 0.0, [&] { return lower_bounds(corpus); }},
        {4, "lower bounds are tight on extremal families", 0.0, tightness},
        {5, "spanning tree keeps gamma_k", 0.0, spanning_trees},
        {6, "product projections and product bound", 120.0, products},
        {7, "cycle outsider witness", 0.0, cycle_witnesses},
        {8, "edge deletion never lowers gamma_k", 0.0, edge_deletion},
        {9, "fuzz reports are reproducible", 0.0, determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        if (c.limit_seconds > 0 && elapsed >= c.limit_seconds) o.fail("took " + std::to_string(elapsed) + " s");
        std::printf("[%s] %d %s (samples=%zu, %.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.samples, elapsed,
                    o.ok ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
