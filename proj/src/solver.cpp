#include "kdom/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "kdom/error.hpp"

namespace kdom {

std::string_view to_string(CertificateStatus status) {
    return status == CertificateStatus::Exact ? "Exact" : "UpperBoundOnly";
}

std::string_view to_string(SolveMethod method) {
    switch (method) {
        case SolveMethod::Oracle: return "Oracle";
        case SolveMethod::BranchAndBound: return "BranchAndBound";
        case SolveMethod::Greedy: return "Greedy";
        case SolveMethod::ClosedForm: return "ClosedForm";
    }
    return "Unknown";
}

namespace {

void require_positive_k(Dist k) {
    if (k == 0) throw Error(ErrorCode::InvalidParameter, "k must be at least 1");
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// balls[v] = N_k[v], read off the cached distance matrix.
std::vector<VertexSet> k_balls(const Graph& g, Dist k) {
    const Metrics& m = g.metrics();
    std::vector<VertexSet> balls(g.order(), VertexSet(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u = 0; u < g.order(); ++u) {
            if (m.distance(v, u) <= k) balls[v].insert(u);
        }
    }
    return balls;
}

// Greedy maximal packing over `vertices` (visited in the given order).
std::size_t greedy_packing(const Metrics& m, const std::vector<Vertex>& vertices, Dist k) {
    std::vector<Vertex> packed;
    for (Vertex v : vertices) {
        bool far = std::all_of(packed.begin(), packed.end(),
                               [&](Vertex p) { return std::uint64_t{m.distance(v, p)} >= 2 * std::uint64_t{k} + 1; });
        if (far) packed.push_back(v);
    }
    return packed.size();
}

std::vector<Vertex> greedy_cover(const std::vector<VertexSet>& balls, VertexSet uncovered,
                                 const std::vector<Vertex>& candidates) {
    std::vector<Vertex> picked;
    while (!uncovered.empty()) {
        Vertex best = candidates.front();
        std::size_t best_gain = 0;
        for (Vertex v : candidates) {
            std::size_t gain = balls[v].intersection_count(uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        picked.push_back(best);
        uncovered -= balls[best];
    }
    return picked;
}

class BranchAndBound {
public:
    BranchAndBound(const std::vector<VertexSet>& balls, const Budget& budget)
        : balls_(balls), budget_(budget), start_(std::chrono::steady_clock::now()) {}

    struct Outcome {
        std::vector<Vertex> set;
        std::size_t lower_bound = 0;
        bool complete = false;
    };

    Outcome solve(const std::vector<Vertex>& component, std::size_t lower_bound) {
        const std::size_t n = balls_.size();
        VertexSet uncovered(n);
        for (Vertex v : component) uncovered.insert(v);
        candidates_ = component;
        best_ = greedy_cover(balls_, uncovered, component);
        lower_bound_ = lower_bound;
        current_.clear();
        done_ = best_.size() <= lower_bound_;
        if (!done_ && !aborted_) recurse(uncovered);
        return {best_, lower_bound_, !aborted_};
    }

    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    bool out_of_budget() {
        if (nodes_ > budget_.max_nodes) return true;
        if ((nodes_ & 1023U) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.max_seconds) return true;
        }
        return false;
    }

    void recurse(const VertexSet& uncovered) {
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        if (uncovered.empty()) {
            if (current_.size() < best_.size()) {
                best_ = current_;
                if (best_.size() <= lower_bound_) done_ = true;
            }
            return;
        }
        if (current_.size() + 1 >= best_.size()) return;

        std::size_t max_gain = 0;
        for (Vertex v : candidates_) max_gain = std::max(max_gain, balls_[v].intersection_count(uncovered));
        const std::size_t remaining = uncovered.count();
        if (current_.size() + ceil_div(remaining, max_gain) >= best_.size()) return;

        // Branch on the lowest uncovered vertex; its dominators are exactly
        // the members of its own k-ball.
        const Vertex target = uncovered.first();
        struct Option {
            Vertex v;
            std::size_t gain;
            VertexSet covers;
        };
        std::vector<Option> options;
        balls_[target].for_each([&](Vertex c) {
            VertexSet covers = balls_[c] & uncovered;
            std::size_t gain = covers.count();
            options.push_back({c, gain, std::move(covers)});
        });
        // Drop candidates whose new coverage is contained in another's; on
        // equal coverage the lower index survives.
        std::vector<bool> dominated(options.size(), false);
        for (std::size_t i = 0; i < options.size(); ++i) {
            for (std::size_t j = 0; j < options.size() && !dominated[i]; ++j) {
                if (i == j || dominated[j]) continue;
                if (options[i].gain > options[j].gain) continue;
                if (!options[i].covers.is_subset_of(options[j].covers)) continue;
                if (options[i].gain < options[j].gain || options[j].v < options[i].v) dominated[i] = true;
            }
        }
        std::vector<const Option*> order;
        for (std::size_t i = 0; i < options.size(); ++i) {
            if (!dominated[i]) order.push_back(&options[i]);
        }
        std::sort(order.begin(), order.end(), [](const Option* a, const Option* b) {
            return a->gain != b->gain ? a->gain > b->gain : a->v < b->v;
        });

        for (const Option* opt : order) {
            current_.push_back(opt->v);
            recurse(uncovered - balls_[opt->v]);
            current_.pop_back();
            if (aborted_ || done_) return;
            if (current_.size() + 1 >= best_.size()) return;
        }
    }

    const std::vector<VertexSet>& balls_;
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<Vertex> candidates_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::size_t lower_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false;
};

}  // namespace

bool is_k_dominating(const Graph& g, const VertexSet& set, Dist k) {
    require_positive_k(k);
    if (set.universe() != g.order()) {
        throw Error(ErrorCode::IndexOutOfRange, "vertex set universe " + std::to_string(set.universe()) +
                                                    " does not match graph order " + std::to_string(g.order()));
    }
    // Multi-source BFS truncated at depth k.
    VertexSet reached = set;
    std::vector<Vertex> frontier = set.to_vector();
    for (Dist depth = 0; depth < k && !frontier.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            for (Vertex w : g.neighbors(u)) {
                if (!reached.contains(w)) {
                    reached.insert(w);
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return reached.is_full();
}

Certificate gamma_k_oracle(const Graph& g, Dist k, std::size_t max_n) {
    require_positive_k(k);
    const std::size_t n = g.order();
    if (n > max_n) {
        throw Error(ErrorCode::TooLarge,
                    "oracle limited to " + std::to_string(max_n) + " vertices, got " + std::to_string(n));
    }
    Certificate cert;
    cert.k = k;
    cert.method = SolveMethod::Oracle;
    cert.status = CertificateStatus::Exact;
    cert.set = VertexSet(n);
    cert.components = connected_components(g).size();
    if (n == 0) return cert;

    const auto balls = k_balls(g, k);
    std::vector<Vertex> pick;
    std::uint64_t nodes = 0;
    // Depth-first over combinations in lexicographic order, carrying the
    // running union of k-balls.
    auto search = [&](auto& self, Vertex start, std::size_t size, const VertexSet& covered) -> bool {
        ++nodes;
        if (pick.size() == size) return covered.is_full();
        for (Vertex v = start; v + (size - pick.size()) <= n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1, size, covered | balls[v])) return true;
            pick.pop_back();
        }
        return false;
    };
    for (std::size_t size = 1; size <= n; ++size) {
        pick.clear();
        if (search(search, 0, size, VertexSet(n))) break;
    }
    for (Vertex v : pick) cert.set.insert(v);
    cert.value = pick.size();
    cert.lower_bound_used = cert.value;
    cert.nodes_explored = nodes;
    return cert;
}

Certificate greedy_upper(const Graph& g, Dist k) {
    require_positive_k(k);
    const std::size_t n = g.order();
    Certificate cert;
    cert.k = k;
    cert.method = SolveMethod::Greedy;
    cert.set = VertexSet(n);
    cert.components = connected_components(g).size();
    if (n == 0) {
        cert.status = CertificateStatus::Exact;
        return cert;
    }
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for (Vertex v : greedy_cover(k_balls(g, k), VertexSet::full(n), all)) cert.set.insert(v);
    cert.value = cert.set.count();
    if (g.metrics().connected) {
        cert.lower_bound_used = std::max<std::size_t>(1, packing_lower(g, k));
    } else {
        cert.lower_bound_used = cert.components;
    }
    cert.status = cert.value == cert.lower_bound_used ? CertificateStatus::Exact : CertificateStatus::UpperBoundOnly;
    return cert;
}

std::size_t packing_lower(const Graph& g, Dist k) {
    require_positive_k(k);
    const Metrics& m = g.metrics();
    if (!m.connected) throw Error(ErrorCode::DisconnectedInput, "packing bound needs a connected graph");
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    return greedy_packing(m, all, k);
}

Certificate gamma_k_exact(const Graph& g, Dist k, const Budget& budget) {
    require_positive_k(k);
    const std::size_t n = g.order();
    Certificate cert;
    cert.k = k;
    cert.method = SolveMethod::BranchAndBound;
    cert.set = VertexSet(n);
    cert.status = CertificateStatus::Exact;
    const auto components = connected_components(g);
    cert.components = components.size();
    if (n == 0) return cert;

    const Metrics& m = g.metrics();
    const auto balls = k_balls(g, k);
    BranchAndBound search(balls, budget);
    for (const auto& comp : components) {
        Dist diameter = 0;
        for (Vertex u : comp) {
            for (Vertex v : comp) diameter = std::max(diameter, m.distance(u, v));
        }
        std::size_t lower = std::max<std::size_t>(
            {1, greedy_packing(m, comp, k), ceil_div(static_cast<std::size_t>(diameter) + 1, 2 * static_cast<std::size_t>(k) + 1)});
        auto outcome = search.solve(comp, lower);
        for (Vertex v : outcome.set) cert.set.insert(v);
        cert.lower_bound_used += outcome.lower_bound;
        if (!outcome.complete) cert.status = CertificateStatus::UpperBoundOnly;
    }
    cert.value = cert.set.count();
    cert.nodes_explored = search.nodes();
    return cert;
}

std::size_t gamma_path_cycle(std::size_t n, Dist k, PathOrCycle shape) {
    require_positive_k(k);
    if (shape == PathOrCycle::Path && n < 1) throw Error(ErrorCode::InvalidOrder, "path needs n >= 1");
    if (shape == PathOrCycle::Cycle && n < 3) throw Error(ErrorCode::InvalidOrder, "cycle needs n >= 3");
    return ceil_div(n, 2 * static_cast<std::size_t>(k) + 1);
}

}  // namespace kdom
