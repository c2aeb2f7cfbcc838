#include "qfactor/generate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfactor {

std::uint64_t SplitMix64::next_below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const auto r = next();
        if (r < limit)
            return r % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    SplitMix64 mix(base ^ (index * 0xD1B54A32D192ED03ULL));
    return mix.next();
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next_unit() < p)
                g.add_edge(i, j);
    return g;
}

LabeledGraphStream::LabeledGraphStream(std::size_t n, bool connected_only, std::size_t min_deg,
                                       const Guards &guards)
    : n_(n), connected_only_(connected_only), min_deg_(min_deg)
{
    if (n > guards.max_enumeration_order)
        throw GuardExceeded("labelled enumeration of order " + std::to_string(n) + " exceeds the guard (" +
                            std::to_string(guards.max_enumeration_order) + ")");
    const std::size_t pair_count = n * (n > 0 ? n - 1 : 0) / 2;
    if (pair_count >= 63)
        throw GuardExceeded("labelled enumeration needs more than 2^63 masks");
    end_ = std::uint64_t{1} << pair_count;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs_.emplace_back(i, j);
}

std::optional<Graph> LabeledGraphStream::next()
{
    while (mask_ < end_) {
        const std::uint64_t mask = mask_++;
        Graph g(n_);
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if ((mask >> k) & 1U)
                g.add_edge(pairs_[k].u, pairs_[k].v);
        if (min_deg_ > 0 && (n_ == 0 || min_degree(g) < min_deg_))
            continue;
        if (connected_only_ && !is_connected(g))
            continue;
        return g;
    }
    return std::nullopt;
}

} // namespace qfactor
