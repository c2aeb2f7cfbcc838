#include "oracles.hpp"

#include "qfactor/generate.hpp"
#include "qfactor/graph6.hpp"

#include <doctest.h>

using namespace qfactor;

TEST_CASE("small encodings")
{
    CHECK(write_graph6(complete(1)) == "@");
    CHECK(write_graph6(empty_graph(2)) == "A?");
    CHECK(write_graph6(complete(2)) == "A_");
    CHECK(write_graph6(complete(4)) == "C~");
    CHECK(write_graph6(Graph{}) == "?");
}

TEST_CASE("encoder matches the bit-string oracle")
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        const std::size_t n = i % 21;
        const Graph g = random_graph(n, 0.4, derive_seed(11, i));
        CHECK(write_graph6(g) == oracle::graph6(g));
    }
}

TEST_CASE("round trip on seeded graphs")
{
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + i % 20;
        const Graph g = random_graph(n, 0.5, derive_seed(20240601, i));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("header and line endings are tolerated")
{
    CHECK(parse_graph6(">>graph6<<C~") == complete(4));
    CHECK(parse_graph6("C~\r\n") == complete(4));
    CHECK(parse_graph6("C~\n") == complete(4));
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);      // too short
    CHECK_THROWS_AS(parse_graph6("C~~"), Graph6Error);    // too long
    CHECK_THROWS_AS(parse_graph6("C!"), Graph6Error);     // below 63
    CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);     // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~?@d"), Graph6Error);   // long form
}

TEST_CASE("writing beyond the short form fails")
{
    CHECK_NOTHROW(write_graph6(empty_graph(kGraph6MaxOrder)));
    CHECK_THROWS_AS(write_graph6(empty_graph(kGraph6MaxOrder + 1)), Graph6Error);
}
