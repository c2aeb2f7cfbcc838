#include "oracles.hpp"

#include "qfactor/generate.hpp"

#include <doctest.h>

#include <set>

using namespace qfactor;

TEST_CASE("splitmix64 reference outputs")
{
    // Reference sequence for seed 0.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("unit draws and bounded draws stay in range")
{
    SplitMix64 rng(99);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(rng.next_below(7) < 7);
    }
}

TEST_CASE("derived seeds are deterministic and distinct")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        CHECK(derive_seed(5, i) == derive_seed(5, i));
        seen.insert(derive_seed(5, i));
    }
    CHECK(seen.size() == 1000);
    CHECK(derive_seed(5, 0) != derive_seed(6, 0));
}

TEST_CASE("random graphs are reproducible and respect the extremes")
{
    CHECK(random_graph(12, 0.5, 42) == random_graph(12, 0.5, 42));
    CHECK(random_graph(9, 0.0, 1).size() == 0);
    CHECK(random_graph(9, 1.0, 1).size() == 36);
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, -0.1, 1), std::invalid_argument);
}

namespace {

std::size_t count_stream(std::size_t n, bool connected_only, std::size_t min_deg = 0)
{
    LabeledGraphStream stream(n, connected_only, min_deg);
    std::size_t count = 0;
    while (stream.next())
        ++count;
    return count;
}

} // namespace

TEST_CASE("labelled enumeration counts")
{
    CHECK(count_stream(1, false) == 1);
    CHECK(count_stream(2, false) == 2);
    CHECK(count_stream(4, false) == 64);
    // Connected labelled graphs: 1, 1, 4, 38, 728, 26704.
    CHECK(count_stream(3, true) == 4);
    CHECK(count_stream(4, true) == 38);
    CHECK(count_stream(5, true) == 728);
    CHECK(count_stream(6, true) == 26704);
}

TEST_CASE("enumeration filter agrees with the connectivity oracle")
{
    LabeledGraphStream stream(5, false, 2);
    std::size_t count = 0;
    while (auto g = stream.next()) {
        CHECK(min_degree(*g) >= 2);
        ++count;
    }
    std::size_t expected = 0;
    LabeledGraphStream all(5, false, 0);
    while (auto g = all.next())
        if (min_degree(*g) >= 2)
            ++expected;
    CHECK(count == expected);

    LabeledGraphStream connected(4, true, 0);
    while (auto g = connected.next())
        CHECK(oracle::connected(*g));
}

TEST_CASE("enumeration above the guard is refused")
{
    CHECK_THROWS_AS(LabeledGraphStream(8, false, 0), GuardExceeded);
    Guards g;
    g.max_enumeration_order = 3;
    CHECK_THROWS_AS(LabeledGraphStream(4, false, 0, g), GuardExceeded);
}
