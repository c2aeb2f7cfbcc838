#include "qfactor/recognize.hpp"

namespace qfactor {

std::optional<GStarParams> recognize_gstar(const Graph &g)
{
    const std::size_t n = g.order();
    if (n < 4 || n % 2 != 0)
        return std::nullopt;
    const std::size_t delta = min_degree(g);
    if (delta < 2 || n < 2 * delta)
        return std::nullopt;

    const std::size_t clique = n - 2 * delta + 1;
    const std::size_t expected_edges = delta * (delta - 1) / 2 + clique * (clique - 1) / 2 + delta * (n - delta);
    if (g.size() != expected_edges)
        return std::nullopt;

    // The join cell is exactly the set of universal vertices.
    VertexSet hub(n);
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            hub.insert(v);
    if (hub.size() != delta)
        return std::nullopt;

    // G - hub must be K_{n-2delta+1} plus delta-1 isolated vertices.
    const auto rest = components_without(g, hub);
    if (rest.components.size() != delta)
        return std::nullopt;
    std::size_t singletons = 0;
    bool big_seen = false;
    for (const auto &c : rest.components) {
        if (c.size() == 1 && singletons < delta - 1) {
            ++singletons;
            continue;
        }
        if (c.size() != clique || big_seen)
            return std::nullopt;
        big_seen = true;
        const std::size_t k = c.size();
        bool is_clique = true;
        c.for_each([&](std::size_t v) {
            if ((g.neighbors(v) & c).size() != k - 1)
                is_clique = false;
        });
        if (!is_clique)
            return std::nullopt;
    }
    if (!big_seen || singletons != delta - 1)
        return std::nullopt;
    return GStarParams{n, delta};
}

} // namespace qfactor
