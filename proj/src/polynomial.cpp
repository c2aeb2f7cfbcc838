#include "qfactor/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace qfactor {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

using RationalPoly = std::vector<Rational>;

int sign_of(const BigInt &v) { return v.sign(); }

void trim(RationalPoly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RationalPoly to_rational(const IntPolynomial &p)
{
    RationalPoly out;
    for (const auto &c : p.coefficients())
        out.emplace_back(c);
    return out;
}

// Scales by a positive rational so the coefficients are coprime integers.
IntPolynomial to_primitive(const RationalPoly &p)
{
    BigInt lcm = 1;
    for (const auto &c : p)
        lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto &c : p) {
        BigInt v = numerator(c) * (lcm / denominator(c));
        g = boost::multiprecision::gcd(g, abs(v));
        ints.push_back(std::move(v));
    }
    if (g > 1)
        for (auto &v : ints)
            v /= g;
    return IntPolynomial(std::move(ints));
}

// Remainder of a modulo b over the rationals.
RationalPoly remainder(RationalPoly a, const RationalPoly &b)
{
    trim(a);
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RationalPoly quotient(RationalPoly a, const RationalPoly &b, RationalPoly *rest = nullptr)
{
    trim(a);
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    RationalPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    if (rest)
        *rest = a;
    return q;
}

// Sign of p(num/den) for den > 0, via the homogenised integer form.
int sign_at_fraction(const IntPolynomial &p, const BigInt &num, const BigInt &den)
{
    const auto &c = p.coefficients();
    if (c.empty())
        return 0;
    BigInt acc = c.back();
    BigInt den_power = den;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = acc * num + c[i] * den_power;
        den_power *= den;
    }
    return sign_of(acc);
}

int sign_at_rational(const IntPolynomial &p, const Rational &x) { return sign_at_fraction(p, numerator(x), denominator(x)); }

// Cauchy bound: every real root has |x| < bound.
Rational root_bound(const IntPolynomial &p)
{
    Rational worst = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio(abs(p.coefficient(k)), abs(p.leading()));
        if (ratio > worst)
            worst = ratio;
    }
    return worst + 1;
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coefficients_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending)
{
    for (auto c : ascending)
        coefficients_.emplace_back(c);
    trim();
}

void IntPolynomial::trim()
{
    while (!coefficients_.empty() && coefficients_.back() == 0)
        coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const { return k < coefficients_.size() ? coefficients_[k] : BigInt(0); }

const BigInt &IntPolynomial::leading() const
{
    if (coefficients_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coefficients_.back();
}

BigInt IntPolynomial::evaluate(const BigInt &x) const
{
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational &x) const
{
    const auto &num = numerator(x);
    const auto &den = denominator(x);
    if (coefficients_.empty())
        return 0;
    BigInt acc = coefficients_.back();
    BigInt den_power = den;
    for (std::size_t i = coefficients_.size() - 1; i-- > 0;) {
        acc = acc * num + coefficients_[i] * den_power;
        den_power *= den;
    }
    BigInt scale = 1;
    for (int k = 0; k < degree(); ++k)
        scale *= den;
    return Rational(acc, scale);
}

int IntPolynomial::sign_at(double x) const
{
    if (!std::isfinite(x))
        throw std::invalid_argument("sign_at needs a finite argument");
    return sign_at_rational(*this, Rational(x));
}

double IntPolynomial::evaluate_approx(double x) const
{
    long double acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
        acc = acc * x + it->convert_to<long double>();
    return static_cast<double>(acc);
}

IntPolynomial IntPolynomial::derivative() const
{
    std::vector<BigInt> d;
    for (std::size_t k = 1; k < coefficients_.size(); ++k)
        d.push_back(coefficients_[k] * static_cast<long long>(k));
    return IntPolynomial(std::move(d));
}

std::string IntPolynomial::to_string() const
{
    if (coefficients_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const BigInt &c = coefficients_[k];
        if (c == 0)
            continue;
        const BigInt magnitude = abs(c);
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (magnitude != 1 || k == 0)
            out << magnitude;
        if (k >= 1)
            out << "x";
        if (k >= 2)
            out << "^" << k;
        first = false;
    }
    return out.str();
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b)
{
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(k) + b.coefficient(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b)
{
    std::vector<BigInt> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coefficient(k) - b.coefficient(k);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt &c, const IntPolynomial &p)
{
    std::vector<BigInt> out(p.coefficients_);
    for (auto &v : out)
        v *= c;
    return IntPolynomial(std::move(out));
}

namespace {

IntPolynomial faddeev_leverrier(const std::vector<std::vector<BigInt>> &a)
{
    const std::size_t n = a.size();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    // am holds A * M_k; M_k = A * M_{k-1} + c_{n-k+1} I.
    std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n));
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = am[i][j] + (i == j ? c[n - k + 1] : BigInt(0));
        BigInt trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigInt acc = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (a[i][l] != 0)
                        acc += a[i][l] * m[l][j];
                am[i][j] = std::move(acc);
            }
        for (std::size_t i = 0; i < n; ++i)
            trace += am[i][i];
        const BigInt kk = static_cast<long long>(k);
        if (trace % kk != 0)
            throw std::logic_error("Faddeev-LeVerrier trace not divisible; input not integral");
        c[n - k] = -(trace / kk);
    }
    return IntPolynomial(std::move(c));
}

} // namespace

IntPolynomial char_poly(const QuotientMatrix &m)
{
    if (!m.is_integral())
        throw NonIntegralMatrix("characteristic polynomial needs integral quotient entries");
    std::vector<std::vector<BigInt>> a(m.order(), std::vector<BigInt>(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            a[i][j] = numerator(m(i, j));
    return faddeev_leverrier(a);
}

IntPolynomial char_poly(const SymmetricMatrix &m)
{
    if (!m.is_integral())
        throw NonIntegralMatrix("characteristic polynomial needs integral matrix entries");
    std::vector<std::vector<BigInt>> a(m.order(), std::vector<BigInt>(m.order()));
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            a[i][j] = static_cast<long long>(m(i, j));
    return faddeev_leverrier(a);
}

IntPolynomial polynomial_gcd(const IntPolynomial &a, const IntPolynomial &b)
{
    RationalPoly x = to_rational(a);
    RationalPoly y = to_rational(b);
    while (!y.empty()) {
        RationalPoly r = remainder(x, y);
        x = std::move(y);
        y = to_rational(to_primitive(r));
    }
    if (x.empty())
        return {};
    IntPolynomial g = to_primitive(x);
    return g.leading() < 0 ? BigInt(-1) * g : g;
}

bool divides(const IntPolynomial &d, const IntPolynomial &p)
{
    if (d.is_zero())
        throw std::domain_error("divisibility by the zero polynomial");
    return remainder(to_rational(p), to_rational(d)).empty();
}

IntPolynomial divide_exact_monic(const IntPolynomial &p, const IntPolynomial &d)
{
    if (d.is_zero() || d.leading() != 1)
        throw std::domain_error("divisor must be monic");
    RationalPoly rest;
    const auto q = quotient(to_rational(p), to_rational(d), &rest);
    if (!rest.empty())
        throw std::domain_error("division leaves a remainder");
    std::vector<BigInt> ints;
    for (const auto &c : q)
        ints.push_back(numerator(c));
    return IntPolynomial(std::move(ints));
}

RealRootCounter::RealRootCounter(const IntPolynomial &p)
{
    if (p.is_zero())
        throw std::domain_error("root counting on the zero polynomial");
    IntPolynomial squarefree = p;
    if (p.degree() >= 1) {
        const auto g = polynomial_gcd(p, p.derivative());
        if (g.degree() >= 1)
            squarefree = to_primitive(quotient(to_rational(p), to_rational(g)));
    }
    chain_.push_back(squarefree);
    if (squarefree.degree() < 1)
        return;
    chain_.push_back(squarefree.derivative());
    for (;;) {
        RationalPoly r = remainder(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
        if (r.empty())
            break;
        for (auto &c : r)
            c = -c;
        chain_.push_back(to_primitive(r));
    }
}

std::size_t RealRootCounter::variations(const Rational &x) const
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto &s : chain_) {
        const int sign = sign_at_rational(s, x);
        if (sign == 0)
            continue;
        if (last != 0 && sign != last)
            ++changes;
        last = sign;
    }
    return changes;
}

std::size_t RealRootCounter::variations_at_infinity(bool positive) const
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto &s : chain_) {
        int sign = s.leading().sign();
        if (!positive && s.degree() % 2 == 1)
            sign = -sign;
        if (last != 0 && sign != last)
            ++changes;
        last = sign;
    }
    return changes;
}

std::size_t RealRootCounter::count(const Rational &a, const Rational &b) const
{
    if (b <= a)
        return 0;
    return variations(a) - variations(b);
}

std::size_t RealRootCounter::count_above(const Rational &a) const
{
    return variations(a) - variations_at_infinity(true);
}

std::size_t RealRootCounter::count_all() const
{
    return variations_at_infinity(false) - variations_at_infinity(true);
}

double largest_real_root(const IntPolynomial &p, double lo, double hi, double tol)
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("root bracket must satisfy lo < hi");
    if (p.degree() < 1)
        throw RootBracketError("constant polynomial has no root");
    const RealRootCounter counter(p);
    Rational a(lo);
    Rational b(hi);
    if (counter.count(a, b) == 0)
        throw RootBracketError("no real root in (" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    // Invariant: the largest root in (lo, hi] lies in (a, b].
    const Rational width(tol);
    while (b - a > width) {
        const Rational mid = (a + b) / 2;
        if (counter.count(mid, b) >= 1)
            a = mid;
        else
            b = mid;
    }
    if (p.sign_at(b.convert_to<double>()) == 0)
        return b.convert_to<double>();
    return ((a + b) / 2).convert_to<double>();
}

std::vector<double> real_roots(const IntPolynomial &p, double tol)
{
    if (p.degree() < 1)
        return {};
    const RealRootCounter counter(p);
    const Rational width(tol);
    std::vector<double> roots;
    // Split (lo, hi] until each piece isolates one root, then bisect it.
    auto isolate = [&](auto &&self, const Rational &lo, const Rational &hi) -> void {
        const std::size_t k = counter.count(lo, hi);
        if (k == 0)
            return;
        if (k > 1) {
            const Rational mid = (lo + hi) / 2;
            self(self, lo, mid);
            self(self, mid, hi);
            return;
        }
        Rational a = lo;
        Rational b = hi;
        while (b - a > width) {
            const Rational mid = (a + b) / 2;
            if (counter.count(a, mid) == 1)
                b = mid;
            else
                a = mid;
        }
        roots.push_back(((a + b) / 2).convert_to<double>());
    };
    const Rational bound = root_bound(p);
    isolate(isolate, -bound, bound);
    return roots;
}

std::strong_ordering compare_largest_roots(const IntPolynomial &a, const IntPolynomial &b)
{
    const RealRootCounter ca(a);
    const RealRootCounter cb(b);
    if (ca.count_all() == 0 || cb.count_all() == 0)
        throw RootBracketError("comparison needs a real root on both sides");

    const Rational bound = std::max(root_bound(a), root_bound(b));
    // Isolate the largest root of b in (lo, hi].
    Rational lo = -bound;
    Rational hi = bound;
    auto refine = [&]() {
        const Rational mid = (lo + hi) / 2;
        if (cb.count(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    };
    while (cb.count(lo, hi) > 1)
        refine();

    const auto g = polynomial_gcd(a, b);
    const bool shared = g.degree() >= 1 && RealRootCounter(g).count(lo, hi) >= 1;
    const std::size_t target = shared ? 1 : 0;
    constexpr int kMaxRefinements = 4096;
    for (int step = 0; ca.count(lo, hi) != target; ++step) {
        if (step == kMaxRefinements)
            throw RootBracketError("root comparison did not separate within the refinement budget");
        refine();
    }
    if (ca.count_above(hi) >= 1)
        return std::strong_ordering::greater;
    return shared ? std::strong_ordering::equal : std::strong_ordering::less;
}

} // namespace qfactor
