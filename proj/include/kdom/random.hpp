#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "kdom/graph.hpp"

namespace kdom {

/// Portable pseudo-random source. The engine is std::mt19937_64, whose
/// output sequence is fixed by the C++ standard; the integer and real
/// mappings below are implemented here rather than taken from <random>
/// distributions, whose algorithms vary between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [lo, hi] by rejection sampling.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    /// Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform on [lo, hi]; returns lo when lo == hi.
    double uniform_real(double lo, double hi) { return lo == hi ? lo : lo + (hi - lo) * unit(); }
    bool bernoulli(double p) { return p >= 1.0 || unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Erdős–Rényi G(n, p).
Graph random_gnp(Rng& rng, std::size_t n, double p);

/// Uniform random recursive tree: vertex i > 0 attaches to a uniform earlier
/// vertex, after a random relabelling.
Graph random_tree(Rng& rng, std::size_t n);

struct ConnectedSample {
    Graph graph;
    /// True if rejection sampling gave up and the tree-plus-edges fallback ran.
    bool used_fallback = false;
};

inline constexpr std::size_t kRejectionAttempts = 1000;

/// Connected random graph: G(n, p) by rejection, at most `attempts` draws,
/// then a random tree with every further pair added with probability p.
ConnectedSample random_connected_graph(Rng& rng, std::size_t n, double p,
                                       std::size_t attempts = kRejectionAttempts);

}  // namespace kdom
