#include "kdom/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kdom/bounds.hpp"
#include "kdom/constructions.hpp"
#include "kdom/edge_list.hpp"
#include "kdom/error.hpp"
#include "kdom/fuzz.hpp"
#include "kdom/report_json.hpp"

namespace kdom::cli {

namespace {

struct Options {
    std::string k_list = "1";
    std::vector<std::string> inputs;
    std::string output;
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_seconds = Budget{}.max_seconds;
    bool require_exact = false;
    bool strict = true;

    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    double p_min = 0.2;
    double p_max = 0.6;
    std::size_t factor_n_max = 5;

    std::string family;
    std::size_t n = 0;
    std::size_t delta = 1;

    Vertex vertex = 0;
    bool adjacent = false;
};

std::vector<Dist> parse_k_list(const std::string& text) {
    std::vector<Dist> ks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || value == 0 || value >= kInfinity) {
            throw Error(ErrorCode::InvalidParameter, "bad --k entry '" + item + "'");
        }
        ks.push_back(static_cast<Dist>(value));
    }
    if (ks.empty()) throw Error(ErrorCode::InvalidParameter, "--k needs at least one value");
    return ks;
}

class Session {
public:
    Session(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

    Budget budget() const { return {opt_.budget_nodes, opt_.budget_seconds}; }

    Graph read_graph(std::size_t index) {
        std::string path = index < opt_.inputs.size() ? opt_.inputs[index] : "-";
        std::string text;
        if (path == "-") {
            if (stdin_used_) throw Error(ErrorCode::InvalidParameter, "standard input can only be read once");
            stdin_used_ = true;
            std::ostringstream ss;
            ss << in_.rdbuf();
            text = ss.str();
        } else {
            std::ifstream file(path, std::ios::binary);
            if (!file) throw Error(ErrorCode::InvalidParameter, "cannot open '" + path + "'");
            std::ostringstream ss;
            ss << file.rdbuf();
            text = ss.str();
        }
        return parse_edge_list(text, BuildOptions{opt_.strict});
    }

    void write(const std::string& text) {
        if (opt_.output.empty() || opt_.output == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(opt_.output, std::ios::binary);
        if (!file) throw Error(ErrorCode::InvalidParameter, "cannot write '" + opt_.output + "'");
        file << text;
    }

    void write(const Json& doc) { write(doc.dump(2) + "\n"); }

private:
    const Options& opt_;
    std::istream& in_;
    std::ostream& out_;
    bool stdin_used_ = false;
};

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

Json graph_summary(const Graph& g) { return Json{{"n", g.order()}, {"m", g.size()}}; }

// One result is inlined into the document; several go under "results".
void attach_results(Json& doc, std::vector<Json> results) {
    if (results.size() == 1) {
        for (auto& [key, value] : results.front().items()) doc[key] = value;
    } else {
        doc["results"] = std::move(results);
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_gamma(const Options& opt, Session& io) {
    const auto start = std::chrono::steady_clock::now();
    Graph g = io.read_graph(0);
    Json doc = header("gamma");
    doc["graph"] = graph_summary(g);
    std::vector<Json> results;
    bool all_exact = true;
    for (Dist k : parse_k_list(opt.k_list)) {
        Certificate cert = gamma_k_exact(g, k, io.budget());
        all_exact = all_exact && cert.status == CertificateStatus::Exact;
        results.push_back(to_json(cert));
    }
    attach_results(doc, std::move(results));
    doc["timing"] = {{"wall_seconds", seconds_since(start)}};
    io.write(doc);
    return opt.require_exact && !all_exact ? kBudgetExhausted : kOk;
}

int cmd_metrics(const Options&, Session& io) {
    Graph g = io.read_graph(0);
    Json doc = header("metrics");
    doc.update(to_json(g.metrics(), g));
    io.write(doc);
    return kOk;
}

int cmd_bounds(const Options& opt, Session& io) {
    const auto start = std::chrono::steady_clock::now();
    Graph g = io.read_graph(0);
    Json doc = header("bounds");
    std::vector<Json> results;
    int status = kOk;
    for (Dist k : parse_k_list(opt.k_list)) {
        BoundsReport r = bounds_report(g, k, io.budget());
        if (r.verdict == Verdict::ViolationDetected) {
            status = kViolation;
        } else if (opt.require_exact && r.verdict == Verdict::ExactUnavailable && status == kOk) {
            status = kBudgetExhausted;
        }
        results.push_back(to_json(r));
    }
    attach_results(doc, std::move(results));
    doc["timing"] = {{"wall_seconds", seconds_since(start)}};
    io.write(doc);
    return status;
}

int cmd_product(const Options& opt, Session& io) {
    const auto start = std::chrono::steady_clock::now();
    Graph left = io.read_graph(0);
    Graph right = io.read_graph(1);
    Json doc = header("product");
    doc["left"] = graph_summary(left);
    doc["right"] = graph_summary(right);
    std::vector<Json> results;
    int status = kOk;
    for (Dist k : parse_k_list(opt.k_list)) {
        ProductBoundReport r = product_bound_check(left, right, k, io.budget());
        if ((r.bound_holds && !*r.bound_holds) || !r.left_projection_dominates || !r.right_projection_dominates) {
            status = kViolation;
        }
        results.push_back(to_json(r));
    }
    attach_results(doc, std::move(results));
    doc["timing"] = {{"wall_seconds", seconds_since(start)}};
    io.write(doc);
    return status;
}

int cmd_spanning_tree(const Options& opt, Session& io) {
    Graph g = io.read_graph(0);
    Json doc = header("spanning-tree");
    std::vector<Json> results;
    for (Dist k : parse_k_list(opt.k_list)) {
        SpanningTreeResult r = preserving_spanning_tree(g, k, io.budget());
        Json entry{{"k", k}};
        entry.update(to_json(r));
        results.push_back(std::move(entry));
    }
    attach_results(doc, std::move(results));
    io.write(doc);
    return kOk;
}

int cmd_witness(const Options& opt, Session& io) {
    Graph g = io.read_graph(0);
    auto cycle = shortest_cycle(g);
    if (!cycle) throw Error(ErrorCode::PreconditionViolated, "graph is acyclic");
    Json doc = header("witness");
    doc["cycle"] = *cycle;
    doc["vertex"] = opt.vertex;
    std::vector<Json> results;
    const WitnessMode mode = opt.adjacent ? WitnessMode::AdjacentPair : WitnessMode::Basic;
    for (Dist k : parse_k_list(opt.k_list)) {
        Json entry{{"k", k}};
        entry.update(to_json(cycle_outsider_witness(g, *cycle, opt.vertex, k, mode)));
        results.push_back(std::move(entry));
    }
    attach_results(doc, std::move(results));
    io.write(doc);
    return kOk;
}

int cmd_construct(const Options& opt, Session& io) {
    Graph g;
    if (opt.family == "path") {
        g = path(opt.n);
    } else if (opt.family == "cycle") {
        g = cycle(opt.n);
    } else if (opt.family == "clique-expanded") {
        g = clique_expanded_path(opt.n, opt.delta);
    } else if (opt.family == "product") {
        Graph left = io.read_graph(0);
        Graph right = io.read_graph(1);
        g = direct_product(left, right).graph;
    } else {
        throw Error(ErrorCode::InvalidParameter, "unknown family '" + opt.family + "'");
    }
    io.write(serialize_edge_list(g));
    return kOk;
}

int cmd_fuzz(const Options& opt, Session& io) {
    FuzzConfig config;
    config.seed = opt.seed;
    config.trials = opt.trials;
    config.n_min = opt.n_min;
    config.n_max = opt.n_max;
    config.p_min = opt.p_min;
    config.p_max = opt.p_max;
    config.ks = parse_k_list(opt.k_list);
    config.budget = io.budget();
    config.factor_n_max = opt.factor_n_max;
    if (const char* threads = std::getenv("THREADS"); threads != nullptr && *threads != '\0') {
        try {
            config.threads = std::stoul(threads);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidParameter, std::string("bad THREADS value '") + threads + "'");
        }
    }
    FuzzReport report = run_fuzz(config);
    io.write(to_json(report));
    return report.failures.empty() ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Distance k-domination: exact solver, bounds and constructions", "kdom"};
    app.require_subcommand(1);

    auto add_graph_io = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--in", opt.inputs, "Edge-list input path(s), '-' for standard input");
        sub->add_option("--out", opt.output, "Output path (default standard output)");
        sub->add_flag("--strict,!--no-strict", opt.strict, "Reject loops and repeated edges (default on)");
        if (with_k) sub->add_option("--k", opt.k_list, "Comma-separated distance parameters");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", opt.budget_nodes, "Search node limit per solve");
        sub->add_option("--budget-seconds", opt.budget_seconds, "Time limit per solve");
        sub->add_flag("--require-exact", opt.require_exact, "Exit 3 unless every value is proven exact");
    };

    auto* gamma = app.add_subcommand("gamma", "Exact k-domination number with certificate");
    add_graph_io(gamma, true);
    add_budget(gamma);

    auto* metrics = app.add_subcommand("metrics", "Distances, diameter, radius, girth");
    add_graph_io(metrics, false);

    auto* bounds = app.add_subcommand("bounds", "All lower and upper bounds against the exact value");
    add_graph_io(bounds, true);
    add_budget(bounds);

    auto* product = app.add_subcommand("product", "Direct product bound and projection check (two --in)");
    add_graph_io(product, true);
    add_budget(product);

    auto* tree = app.add_subcommand("spanning-tree", "Spanning tree with the same k-domination number");
    add_graph_io(tree, true);
    add_budget(tree);

    auto* witness = app.add_subcommand("witness", "Cycle witness pair for a vertex off a shortest cycle");
    add_graph_io(witness, true);
    witness->add_option("--vertex", opt.vertex, "Vertex outside the shortest cycle")->required();
    witness->add_flag("--adjacent", opt.adjacent, "Return a pair adjacent on the cycle");

    auto* construct = app.add_subcommand("construct", "Write a generated graph as an edge list");
    add_graph_io(construct, false);
    construct->add_option("--family", opt.family, "path, cycle, clique-expanded or product")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "clique-expanded", "product"}));
    construct->add_option("--n", opt.n, "Order (path, cycle) or base path length (clique-expanded)");
    construct->add_option("--delta", opt.delta, "Clique size for clique-expanded");

    auto* fuzz = app.add_subcommand("fuzz", "Randomized check of every theorem invariant");
    fuzz->add_option("--out", opt.output, "Output path (default standard output)");
    fuzz->add_option("--k", opt.k_list, "Comma-separated distance parameters");
    fuzz->add_option("--seed", opt.seed, "64-bit seed");
    fuzz->add_option("--trials", opt.trials, "Number of trials");
    fuzz->add_option("--n-min", opt.n_min, "Smallest graph order");
    fuzz->add_option("--n-max", opt.n_max, "Largest graph order");
    fuzz->add_option("--p-min", opt.p_min, "Smallest edge probability");
    fuzz->add_option("--p-max", opt.p_max, "Largest edge probability");
    fuzz->add_option("--factor-n-max", opt.factor_n_max, "Largest product factor order");
    add_budget(fuzz);

    std::vector<const char*> argv{"kdom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Session io(opt, in, out);
    try {
        if (gamma->parsed()) return cmd_gamma(opt, io);
        if (metrics->parsed()) return cmd_metrics(opt, io);
        if (bounds->parsed()) return cmd_bounds(opt, io);
        if (product->parsed()) return cmd_product(opt, io);
        if (tree->parsed()) return cmd_spanning_tree(opt, io);
        if (witness->parsed()) return cmd_witness(opt, io);
        if (construct->parsed()) return cmd_construct(opt, io);
        if (fuzz->parsed()) return cmd_fuzz(opt, io);
    } catch (const Error& e) {
        err << "kdom: " << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? kBudgetExhausted : kInputError;
    }
    return kInputError;
}

}  // namespace kdom::cli
