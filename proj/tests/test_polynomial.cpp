#include "oracles.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/matrix.hpp"
#include "qfactor/perron.hpp"
#include "qfactor/polynomial.hpp"

#include <doctest.h>

#include <cmath>

using namespace qfactor;

namespace {

// (x - 1)^2 (x - 3)
const IntPolynomial kDoubleRoot{-3, 7, -5, 1};

std::vector<double> as_doubles(const IntPolynomial &p)
{
    std::vector<double> out;
    for (const auto &c : p.coefficients())
        out.push_back(c.convert_to<double>());
    return out;
}

} // namespace

TEST_CASE("basic arithmetic and printing")
{
    const IntPolynomial a{1, 1};  // x + 1
    const IntPolynomial b{-1, 1}; // x - 1
    CHECK(a * b == IntPolynomial{-1, 0, 1});
    CHECK(a + b == IntPolynomial{0, 2});
    CHECK(a - a == IntPolynomial{});
    CHECK((a - a).degree() == -1);
    CHECK(BigInt(3) * a == IntPolynomial{3, 3});
    CHECK(IntPolynomial{-120, 104, -20, 1}.to_string() == "x^3 - 20x^2 + 104x - 120");
    CHECK(IntPolynomial{0, -1}.to_string() == "-x");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(kDoubleRoot.derivative() == IntPolynomial{7, -10, 3});
    CHECK(kDoubleRoot.evaluate(BigInt(3)) == 0);
    CHECK(kDoubleRoot.evaluate(Rational(1, 2)) == Rational(-5, 8));
    CHECK_THROWS_AS(IntPolynomial{}.leading(), std::domain_error);
}

TEST_CASE("signs are exact at doubles")
{
    const IntPolynomial p{-2, 0, 1};
    const double above = std::sqrt(2.0); // rounds up past sqrt(2)
    CHECK(p.sign_at(above) == 1);
    CHECK(p.sign_at(std::nextafter(above, 0.0)) == -1);
    CHECK_THROWS_AS(p.sign_at(NAN), std::invalid_argument);
}

TEST_CASE("characteristic polynomials of small matrices")
{
    // Q(K_3) has eigenvalues 4, 1, 1.
    CHECK(char_poly(signless_laplacian(complete(3))) == IntPolynomial{-4, 9, -6, 1});
    // A(C_4): x^4 - 4x^2.
    CHECK(char_poly(adjacency_matrix(cycle_graph(4))) == IntPolynomial{0, 0, -4, 0, 1});
    CHECK(char_poly(QuotientMatrix::from_integers({{2}})) == IntPolynomial{-2, 1});

    SymmetricMatrix half(2);
    half.set(0, 1, 0.5);
    CHECK_THROWS_AS(char_poly(half), NonIntegralMatrix);
}

TEST_CASE("quotient polynomials match the displayed closed forms")
{
    CHECK(char_poly(quotient_bstar(8, 2)) == IntPolynomial{-120, 104, -20, 1});
    CHECK(phi_bstar(8, 2) == IntPolynomial{-120, 104, -20, 1});
    // Closed form evaluated by hand at (n, s) = (10, 3).
    CHECK(char_poly(quotient_b2(10, 3)) == IntPolynomial{-252, 166, -25, 1});
    CHECK(phi_b2(10, 3) == IntPolynomial{-252, 166, -25, 1});
}

TEST_CASE("Sturm counting over half-open intervals")
{
    const RealRootCounter counter(kDoubleRoot);
    CHECK(counter.count_all() == 2);
    CHECK(counter.count(0, 2) == 1);
    CHECK(counter.count(1, 3) == 1);
    CHECK(counter.count(0, 1) == 1);
    CHECK(counter.count(3, 10) == 0);
    CHECK(counter.count_above(2) == 1);
    CHECK(RealRootCounter(IntPolynomial{1, 0, 1}).count_all() == 0);
}

TEST_CASE("root location")
{
    CHECK(largest_real_root(kDoubleRoot, 0, 10) == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(largest_real_root(kDoubleRoot, 0, 2) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(largest_real_root(kDoubleRoot, 4, 10), RootBracketError);
    // Even multiplicity: no sign change, still found.
    CHECK(largest_real_root(IntPolynomial{4, -4, 1}, 0, 5) == doctest::Approx(2.0).epsilon(1e-13));

    const auto roots = real_roots(kDoubleRoot);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == doctest::Approx(1.0));
    CHECK(roots[1] == doctest::Approx(3.0));
    CHECK(real_roots(IntPolynomial{1, 0, 1}).empty());
}

TEST_CASE("threshold root agrees with an independent bisection")
{
    const double expected = 7.0 + std::sqrt(29.0);
    CHECK(std::abs(largest_real_root(phi_bstar(8, 2), 0, 16) - expected) < 1e-12);
    for (long long delta = 2; delta <= 5; ++delta)
        for (long long n = 7 * delta - 7 + (7 * delta - 7) % 2; n <= 7 * delta + 13; n += 2) {
            const auto phi = phi_bstar(n, delta);
            const double ours = largest_real_root(phi, 0, 2.0 * n);
            CHECK(std::abs(ours - oracle::largest_root(as_doubles(phi), 0, 2.0 * n)) < 1e-8);
        }
}

TEST_CASE("exact comparison of largest roots")
{
    const IntPolynomial a{-3, -2, 1};  // roots 3, -1
    const IntPolynomial b{9, -6, 1};   // 3 twice
    CHECK(compare_largest_roots(a, b) == std::strong_ordering::equal);
    const IntPolynomial sqrt2{-2, 0, 1};
    const IntPolynomial three_halves{-3, 2};
    CHECK(compare_largest_roots(sqrt2, three_halves) == std::strong_ordering::less);
    CHECK(compare_largest_roots(three_halves, sqrt2) == std::strong_ordering::greater);
    // Roots agreeing to many digits still separate.
    const IntPolynomial near{-200000000000001LL, 0, 100000000000000LL};
    CHECK(compare_largest_roots(sqrt2, near) == std::strong_ordering::less);
}

TEST_CASE("gcd and exact division")
{
    const IntPolynomial linear{-1, 1};
    CHECK(polynomial_gcd(kDoubleRoot, IntPolynomial{-2, 1, 1}) == linear);
    CHECK(divides(linear, kDoubleRoot));
    CHECK_FALSE(divides(IntPolynomial{-2, 1}, kDoubleRoot));
    CHECK(divide_exact_monic(kDoubleRoot, IntPolynomial{-3, 1}) == IntPolynomial{1, -2, 1});
    CHECK_THROWS_AS(divide_exact_monic(kDoubleRoot, IntPolynomial{-2, 1}), std::domain_error);
}

TEST_CASE("quotient polynomial divides the full characteristic polynomial")
{
    for (std::size_t n : {8, 10, 12}) {
        const auto full = char_poly(signless_laplacian(build_gstar(n, 2)));
        CHECK(divides(phi_bstar(static_cast<long long>(n), 2), full));
        CHECK(full.degree() == static_cast<int>(n));
    }
}
