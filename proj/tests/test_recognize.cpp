#include "oracles.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/generate.hpp"
#include "qfactor/recognize.hpp"

#include <doctest.h>

#include <numeric>

using namespace qfactor;

namespace {

std::vector<std::size_t> shuffled(std::size_t n, std::uint64_t seed)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.next_below(i)]);
    return perm;
}

// Brute-force answer for orders small enough to permute.
std::optional<GStarParams> brute(const Graph &g)
{
    const std::size_t n = g.order();
    if (n % 2)
        return std::nullopt;
    for (std::size_t d = 2; 2 * d <= n; ++d)
        if (oracle::isomorphic(g, oracle::gstar(n, d)))
            return GStarParams{n, d};
    return std::nullopt;
}

} // namespace

TEST_CASE("relabelled extremal graphs are recognised")
{
    for (std::size_t d = 2; d <= 5; ++d)
        for (std::size_t n = 2 * d; n <= 30; n += 2)
            for (std::uint64_t k = 0; k < 5; ++k) {
                const Graph g = oracle::relabel(build_gstar(n, d), shuffled(n, derive_seed(n * 31 + d, k)));
                const auto r = recognize_gstar(g);
                REQUIRE(r.has_value());
                CHECK(*r == GStarParams{n, d});
            }
}

TEST_CASE("agreement with permutation isomorphism")
{
    for (std::size_t n : {4, 6, 8}) {
        for (std::size_t d = 2; 2 * d <= n; ++d) {
            const Graph base = build_gstar(n, d);
            for (const auto &e : base.edges()) {
                Graph minus = base;
                minus.remove_edge(e.u, e.v);
                CHECK(recognize_gstar(minus) == brute(minus));
            }
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    if (!base.adjacent(u, v)) {
                        Graph plus = base;
                        plus.add_edge(u, v);
                        CHECK(recognize_gstar(plus) == brute(plus));
                    }
        }
        for (std::uint64_t i = 0; i < 60; ++i) {
            const Graph g = random_graph(n, 0.7, derive_seed(n, i));
            CHECK(recognize_gstar(g) == brute(g));
        }
    }
}

TEST_CASE("non-candidates")
{
    CHECK_FALSE(recognize_gstar(complete(7)).has_value());
    CHECK_FALSE(recognize_gstar(cycle_graph(8)).has_value());
    CHECK_FALSE(recognize_gstar(Graph{}).has_value());
    // K_4 is G*(4, 2) plus one edge.
    CHECK_FALSE(recognize_gstar(complete(4)).has_value());
}
