#include "oracles.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/generate.hpp"
#include "qfactor/matrix.hpp"
#include "qfactor/perron.hpp"
#include "qfactor/quotient.hpp"

#include <doctest.h>

#include <cmath>

using namespace qfactor;

TEST_CASE("matrix builders")
{
    const Graph p3 = path_graph(3);
    const auto q = signless_laplacian(p3);
    CHECK(q(0, 0) == 1.0);
    CHECK(q(1, 1) == 2.0);
    CHECK(q(0, 1) == 1.0);
    CHECK(q(0, 2) == 0.0);
    CHECK(alpha_matrix(p3, 0) == adjacency_matrix(p3));
    CHECK(alpha_matrix(p3, 1) == q);
    CHECK_THROWS_AS(alpha_matrix(p3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix::from_rows({{0, 1}}), std::invalid_argument);

    const std::vector<double> x{1, 2, 3};
    // sum over edges of (x_u + x_v)^2 = 9 + 25.
    CHECK(quadratic_form(q, x) == doctest::Approx(34.0));
    CHECK_THROWS_AS(quadratic_form(q, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST_CASE("closed-form spectral radii")
{
    for (std::size_t m = 2; m <= 50; ++m)
        CHECK(std::abs(signless_spectral_radius(complete(m)) - (2.0 * m - 2.0)) < 1e-10);
    CHECK(signless_spectral_radius(complete(7)) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(signless_spectral_radius(cycle_graph(8)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(spectral_radius(cycle_graph(8)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(complete(4)) == doctest::Approx(3.0).epsilon(1e-12));
    // Bipartite graphs would oscillate without the diagonal shift.
    CHECK(spectral_radius(join(empty_graph(3), empty_graph(3))) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_radius(path_graph(2)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power iteration agrees with Jacobi on random graphs")
{
    for (std::uint64_t i = 0; i < 150; ++i) {
        const std::size_t n = 3 + i % 14;
        const Graph g = random_graph(n, 0.45, derive_seed(3, i));
        const auto q = perron(signless_laplacian(g));
        CHECK(std::abs(q.value - oracle::largest_eigenvalue(g, true)) < 1e-9);
        CHECK(q.residual < 1e-10);
        if (g.size() > 0)
            CHECK(std::abs(spectral_radius(g) - oracle::largest_eigenvalue(g, false)) < 1e-9);
    }
}

TEST_CASE("reducible matrices use the dominant block")
{
    const Graph g = disjoint_union(complete(3), complete(5));
    const auto pd = perron(signless_laplacian(g));
    CHECK(pd.value == doctest::Approx(8.0));
    for (std::size_t v = 0; v < 3; ++v)
        CHECK(pd.vector[v] == 0.0);
    for (std::size_t v = 3; v < 8; ++v)
        CHECK(pd.vector[v] == doctest::Approx(1.0 / std::sqrt(5.0)));

    const auto zero = perron(signless_laplacian(empty_graph(4)));
    CHECK(zero.value == 0.0);
}

TEST_CASE("Perron vector is a nonnegative unit vector")
{
    const auto pd = perron(signless_laplacian(build_gstar(14, 3)));
    double norm = 0.0;
    for (double x : pd.vector) {
        CHECK(x > 0.0);
        norm += x * x;
    }
    CHECK(norm == doctest::Approx(1.0));
}

TEST_CASE("a non-converging run reports its best estimate")
{
    PerronOptions tight;
    tight.tolerance = 1e-30;
    tight.max_iterations = 5;
    try {
        perron(signless_laplacian(path_graph(9)), tight);
        FAIL("expected non-convergence");
    } catch (const PerronNonConvergence &e) {
        CHECK(e.best_estimate.value > 0.0);
        CHECK(e.best_estimate.value <= 4.0 + 1e-9);
    }
}

TEST_CASE("partitions validate their cells")
{
    CHECK_NOTHROW(Partition(3, {{0, 2}, {1}}));
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {{0, 5}}), std::invalid_argument);
    CHECK(Partition::from_sizes({2, 3}).cell(1) == std::vector<std::size_t>{2, 3, 4});
    CHECK(Partition::singletons(3).cell_count() == 3);
    CHECK(Partition::whole(3).cell_count() == 1);
}

TEST_CASE("quotient of the extremal graph matches its closed form")
{
    for (std::size_t delta = 2; delta <= 4; ++delta)
        for (std::size_t n = 2 * delta; n <= 30; n += 2) {
            const auto q = signless_laplacian(build_gstar(n, delta));
            const auto part = gstar_partition(n, delta);
            CHECK(is_equitable(q, part));
            CHECK(quotient_matrix(q, part) == quotient_bstar(static_cast<long long>(n), static_cast<long long>(delta)));
        }
}

TEST_CASE("non-equitable partitions are detected and averaged exactly")
{
    const auto q = signless_laplacian(path_graph(3));
    const Partition p(3, {{0, 1}, {2}});
    CHECK_FALSE(is_equitable(q, p));
    const auto b = quotient_matrix(q, p);
    // Row sums into cell 0 are 2 and 3; the average is 5/2.
    CHECK(b(0, 0) == Rational(5, 2));
    CHECK_FALSE(b.is_integral());
    CHECK_THROWS_AS(quotient_matrix(q, Partition::whole(4)), std::invalid_argument);
}

TEST_CASE("Perron entries are constant on equitable cells")
{
    const Graph g = build_g1(3, {1, 3, 3, 5});
    const auto part = g1_partition(3, {1, 3, 3, 5});
    for (int alpha : {0, 1}) {
        const auto pd = perron(alpha_matrix(g, alpha));
        for (double s : cell_spreads(pd, part))
            CHECK(s < 1e-10);
        const auto values = cell_values(pd, part, 1e-8);
        CHECK(values.size() == 5);
        CHECK(std::abs(values[2] - values[3]) < 1e-10);
        CHECK(values[1] < values[2]);
        CHECK(values[3] < values[4]);
    }
    const auto pd = perron(signless_laplacian(path_graph(4)));
    CHECK_THROWS_AS(cell_values(pd, Partition::whole(4), 1e-8), CellSpreadError);
}
