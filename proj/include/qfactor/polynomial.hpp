#pragma once

#include "qfactor/matrix.hpp"
#include "qfactor/quotient.hpp"

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfactor {

/// Univariate polynomial with exact integer coefficients, ascending degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);
    IntPolynomial(std::initializer_list<long long> ascending);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    /// Zero beyond the degree.
    BigInt coefficient(std::size_t k) const;
    const std::vector<BigInt> &coefficients() const { return coefficients_; }
    const BigInt &leading() const;

    BigInt evaluate(const BigInt &x) const;
    Rational evaluate(const Rational &x) const;
    /// Sign of p(x), exact for every finite double.
    int sign_at(double x) const;
    double evaluate_approx(double x) const;

    IntPolynomial derivative() const;

    /// e.g. "x^3 - 20x^2 + 104x - 120".
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const BigInt &c, const IntPolynomial &p);
    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

private:
    void trim();
    std::vector<BigInt> coefficients_;
};

class NonIntegralMatrix : public std::domain_error {
public:
    explicit NonIntegralMatrix(const std::string &what) : std::domain_error(what) {}
};

class RootBracketError : public std::runtime_error {
public:
    explicit RootBracketError(const std::string &what) : std::runtime_error(what) {}
};

/// det(xI - M) by Faddeev–LeVerrier over exact integers. Throws
/// NonIntegralMatrix unless every entry is an integer.
IntPolynomial char_poly(const QuotientMatrix &m);
IntPolynomial char_poly(const SymmetricMatrix &m);

/// Counts distinct real roots with a Sturm sequence of the square-free part.
class RealRootCounter {
public:
    explicit RealRootCounter(const IntPolynomial &p);

    /// Distinct roots in (a, b].
    std::size_t count(const Rational &a, const Rational &b) const;
    /// Distinct roots in (a, +inf).
    std::size_t count_above(const Rational &a) const;
    std::size_t count_all() const;

private:
    std::size_t variations(const Rational &x) const;
    std::size_t variations_at_infinity(bool positive) const;

    std::vector<IntPolynomial> chain_;
};

/// Largest real root in (lo, hi], located by exact bisection on Sturm counts
/// until the bracket is narrower than tol. Throws RootBracketError when the
/// bracket holds no root.
double largest_real_root(const IntPolynomial &p, double lo, double hi, double tol = 1e-13);

/// Every distinct real root, ascending, each to within tol.
std::vector<double> real_roots(const IntPolynomial &p, double tol = 1e-13);

/// Exact comparison of the largest real roots of a and b (each must have one).
std::strong_ordering compare_largest_roots(const IntPolynomial &a, const IntPolynomial &b);

/// Primitive gcd with positive leading coefficient; zero when both are zero.
IntPolynomial polynomial_gcd(const IntPolynomial &a, const IntPolynomial &b);

/// True iff d divides p over the rationals (d nonzero).
bool divides(const IntPolynomial &d, const IntPolynomial &p);

/// p / d for exact division by a monic d; throws std::domain_error otherwise.
IntPolynomial divide_exact_monic(const IntPolynomial &p, const IntPolynomial &d);

} // namespace qfactor
