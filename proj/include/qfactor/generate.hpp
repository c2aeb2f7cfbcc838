#pragma once

#include "qfactor/graph.hpp"
#include "qfactor/guards.hpp"

#include <cstdint>
#include <optional>

namespace qfactor {

/// splitmix64 in wrapping 64-bit arithmetic. The output sequence is part of
/// the report reproducibility contract; do not change the constants.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), by rejection.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Seed for the index-th item of a stream, independent of scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Erdős–Rényi G(n, p): pairs (i, j), i < j, in lexicographic order, each kept
/// when next_unit() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Every labelled graph on n vertices, in ascending edge-mask order. Bit k of
/// the mask is the k-th pair in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
class LabeledGraphStream {
public:
    LabeledGraphStream(std::size_t n, bool connected_only, std::size_t min_deg, const Guards &guards = {});

    std::optional<Graph> next();
    std::size_t order() const { return n_; }

private:
    std::size_t n_;
    bool connected_only_;
    std::size_t min_deg_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
    std::vector<Edge> pairs_;
};

} // namespace qfactor
