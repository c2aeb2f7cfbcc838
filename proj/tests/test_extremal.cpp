#include "oracles.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/perron.hpp"

#include <doctest.h>

#include <cmath>

using namespace qfactor;

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

// f as displayed, evaluated directly.
long long f_direct(long long x, long long n, long long s, long long d)
{
    return x * x + (n - 4 * s - 4 * d + 4) * x - 2 * n * n + 2 * n * (2 * s + 2 * d + 1) - 2 * (s * s + s * d + d * d) -
           2 * (s + d);
}

} // namespace

TEST_CASE("extremal graph layout")
{
    const Graph g = build_gstar(8, 2);
    CHECK(g.order() == 8);
    CHECK(g.size() == 23);
    CHECK(g == oracle::gstar(8, 2));
    CHECK(g.degree(0) == 7);
    CHECK(g.degree(2) == 6);
    CHECK(g.degree(7) == 2);
    for (std::size_t d = 2; d <= 5; ++d)
        for (std::size_t n = 2 * d; n <= 40; n += 2)
            CHECK(build_gstar(n, d) == oracle::gstar(n, d));
}

TEST_CASE("parameter constraints are named")
{
    CHECK_THROWS_AS(build_gstar(9, 2), ParameterError);
    CHECK_THROWS_AS(build_gstar(8, 1), ParameterError);
    CHECK_THROWS_AS(build_gstar(6, 4), ParameterError);
    CHECK_THROWS_AS(build_g2(6, 4), ParameterError);
    CHECK_THROWS_AS(build_g3(14, 3, 3), ParameterError);
    CHECK_THROWS_AS(build_g3(6, 5, 3), ParameterError);
    try {
        build_gstar(9, 2);
    } catch (const ParameterError &e) {
        CHECK(std::string(e.what()).find("even") != std::string::npos);
    }
}

TEST_CASE("the separator family coincides with G* at s = delta")
{
    CHECK(build_g2(8, 2) == build_gstar(8, 2));
    CHECK(build_g2(20, 4) == build_gstar(20, 4));
}

TEST_CASE("threshold value")
{
    CHECK(std::abs(threshold_q(8, 2) - (7.0 + std::sqrt(29.0))) < 1e-12);
    CHECK(threshold_q(8, 2) == doctest::Approx(12.385164807134504).epsilon(1e-14));
    for (std::size_t d = 2; d <= 4; ++d)
        for (std::size_t n = 7 * d - 7 + (7 * d - 7) % 2; n <= 7 * d + 13; n += 2) {
            const double t = threshold_q(n, d);
            CHECK(std::abs(t - oracle::largest_eigenvalue(build_gstar(n, d), true)) < 1e-8);
            // K_{n-d+1} is a proper subgraph.
            CHECK(t > 2.0 * n - 2.0 * d);
        }
}

TEST_CASE("difference of the quotient polynomials factors through f")
{
    for (long long d = 2; d <= 6; ++d)
        for (long long n = 7 * d - 7; n <= 7 * d + 13; ++n) {
            if (n % 2)
                continue;
            for (long long s = d + 1; 2 * s <= n; ++s) {
                const auto diff = phi_b2(n, s) - phi_bstar(n, d);
                CHECK(diff == BigInt(s - d) * f_poly(n, s, d));
                for (long long x : {0LL, 1LL, 2 * n - 2 * d})
                    CHECK(f_poly(n, s, d).evaluate(BigInt(x)) == f_direct(x, n, s, d));
            }
        }
    CHECK(f_poly(8, 3, 2).evaluate(BigInt(12)) == 48);
}

TEST_CASE("case-three construction")
{
    CHECK(case_three_big_part(14, 3, 2) == 10);
    const Graph g3 = build_g3(14, 3, 2);
    CHECK(g3.order() == 14);
    CHECK(min_degree(g3) == 3);

    const CaseThreeLabels labels{14, 3, 2, 10};
    CHECK(labels.u(1) == 0);
    CHECK(labels.v(1, 1) == 2);
    CHECK(labels.w(1) == 4);
    CHECK(labels.w(10) == 13);
    CHECK(g3.adjacent(labels.v(1, 1), labels.v(1, 2)));
    CHECK_FALSE(g3.adjacent(labels.v(1, 1), labels.w(1)));
}

TEST_CASE("surgery edge counts match the closed forms")
{
    for (long long d = 3; d <= 6; ++d)
        for (long long s = 2; s <= d - 1; ++s)
            for (long long n = 7 * d - 7 + (7 * d - 7) % 2; n <= 7 * d + 13; n += 2) {
                const long long m = n - s - (d + 1 - s) * (s - 1);
                const auto plan = surgery_plan(n, d, s);
                const long long removed = choose2(d + 1 - s) + (s - 2) * (d - s);
                const long long added = (s - 1) * (d + 1 - s) * (d - s) + (m - d + s) * (s - 2) * (d - s);
                CHECK(static_cast<long long>(plan.removed.size()) == removed);
                CHECK(static_cast<long long>(plan.added().size()) == added);
                CHECK(static_cast<long long>(SurgeryPlan::expected_removed(d, s)) == removed);
                CHECK(static_cast<long long>(SurgeryPlan::expected_added(n, d, s)) == added);

                const Graph g3 = build_g3(n, d, s);
                const Graph g4 = apply_surgery(g3, plan);
                CHECK(static_cast<long long>(g4.size()) == static_cast<long long>(g3.size()) + added - removed);
            }
}

TEST_CASE("surgery refuses inconsistent plans")
{
    const auto plan = surgery_plan(14, 3, 2);
    const Graph g3 = build_g3(14, 3, 2);
    const Graph g4 = apply_surgery(g3, plan);
    CHECK_THROWS(apply_surgery(g4, plan));
}

TEST_CASE("surgery result embeds into G*")
{
    for (std::size_t d = 3; d <= 5; ++d)
        for (std::size_t s = 2; s + 1 <= d; ++s) {
            const std::size_t n = 7 * d - 7 + (7 * d - 7) % 2;
            const Graph g4 = build_g4(n, d, s);
            const auto report = check_gstar_containment(g4, d);
            REQUIRE(report.found);
            const Graph host = oracle::gstar(n, d);
            for (const auto &e : g4.edges())
                CHECK(host.adjacent(report.mapping[e.u], report.mapping[e.v]));
            CHECK(signless_spectral_radius(g4) <= threshold_q(n, d) + 1e-9);
        }
    // Every vertex of K_8 has degree 7, so no low vertex exists.
    CHECK_FALSE(find_gstar_embedding(complete(8), 2).has_value());
    CHECK(find_gstar_embedding(cycle_graph(8), 2).has_value());
    CHECK(find_gstar_embedding(build_gstar(10, 2), 2).has_value());
}

TEST_CASE("redistributed comparison graph")
{
    // Same graph as G*(12, 2) with the cliques listed in the other order.
    const Graph g = build_redistributed(12, 2, 2, 1);
    CHECK(g.size() == build_gstar(12, 2).size());
    CHECK(signless_spectral_radius(g) == doctest::Approx(threshold_q(12, 2)).epsilon(1e-12));
    CHECK(build_redistributed(12, 2, 3, 3).size() == 1 + 2 * 10 + 3 + 3 + 6);
    CHECK_THROWS_AS(build_redistributed(12, 2, 2, 10), ParameterError);
}
