#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kdom/graph.hpp"
#include "kdom/solver.hpp"

namespace kdom {

struct FuzzConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    double p_min = 0.2;
    double p_max = 0.6;
    std::vector<Dist> ks{1, 2};
    Budget budget;
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;
    /// Largest order of a direct-product factor drawn per trial.
    std::size_t factor_n_max = 5;
};

struct CheckCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
};

struct FuzzFailure {
    std::size_t trial = 0;
    std::string invariant;
    Dist k = 1;
    /// Counterexample in edge-list format; for product checks, the left factor.
    std::string graph;
    /// Right factor for product checks.
    std::optional<std::string> second_graph;
    std::string detail;
};

struct FuzzReport {
    FuzzConfig config;
    /// Trials actually evaluated: the run stops after the first trial (in
    /// index order) that records a failure.
    std::size_t trials_run = 0;
    std::size_t fallback_graphs = 0;
    std::map<std::string, CheckCounts> checks;
    std::map<std::string, std::size_t> skipped;
    std::vector<FuzzFailure> failures;
    double wall_seconds = 0.0;
};

/// Names of every invariant the harness checks, in report order.
const std::vector<std::string>& fuzz_check_names();

/// Runs the randomized theorem checks. Trial i draws from its own generator
/// seeded by mix_seed(seed, i), so the report depends only on the config.
/// Throws InvalidParameter for an inconsistent config (empty ranges, k = 0,
/// n_max above the oracle cap).
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace kdom
