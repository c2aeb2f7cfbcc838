#include "qfactor/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qfactor {

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), entries_(order * order, 0.0) {}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>> &rows)
{
    SymmetricMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            m.entries_[i * m.order_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < m.order_; ++i)
        for (std::size_t j = i + 1; j < m.order_; ++j)
            if (m(i, j) != m(j, i))
                throw std::invalid_argument("matrix is not symmetric");
    return m;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value)
{
    if (i >= order_ || j >= order_)
        throw std::out_of_range("matrix index outside range");
    entries_[i * order_ + j] = value;
    entries_[j * order_ + i] = value;
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const
{
    if (x.size() != order_)
        throw std::invalid_argument("vector length does not match matrix order");
    std::vector<double> y(order_, 0.0);
    for (std::size_t i = 0; i < order_; ++i) {
        const double *row = &entries_[i * order_];
        double acc = 0.0;
        for (std::size_t j = 0; j < order_; ++j)
            acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

SymmetricMatrix SymmetricMatrix::principal(std::span<const std::size_t> indices) const
{
    SymmetricMatrix m(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = 0; b < indices.size(); ++b)
            m.entries_[a * m.order_ + b] = (*this)(indices[a], indices[b]);
    return m;
}

bool SymmetricMatrix::is_nonnegative() const
{
    for (double v : entries_)
        if (!(v >= 0.0))
            return false;
    return true;
}

bool SymmetricMatrix::is_integral() const
{
    for (double v : entries_)
        if (!std::isfinite(v) || std::trunc(v) != v)
            return false;
    return true;
}

SymmetricMatrix operator-(const SymmetricMatrix &a, const SymmetricMatrix &b)
{
    if (a.order_ != b.order_)
        throw std::invalid_argument("matrix orders differ");
    SymmetricMatrix d(a.order_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        d.entries_[k] = a.entries_[k] - b.entries_[k];
    return d;
}

SymmetricMatrix adjacency_matrix(const Graph &g) { return alpha_matrix(g, 0); }

SymmetricMatrix signless_laplacian(const Graph &g) { return alpha_matrix(g, 1); }

SymmetricMatrix alpha_matrix(const Graph &g, int alpha)
{
    if (alpha != 0 && alpha != 1)
        throw std::invalid_argument("alpha must be 0 or 1");
    SymmetricMatrix m(g.order());
    for (const auto &e : g.edges())
        m.set(e.u, e.v, 1.0);
    if (alpha == 1)
        for (std::size_t v = 0; v < g.order(); ++v)
            m.set(v, v, static_cast<double>(g.degree(v)));
    return m;
}

double quadratic_form(const SymmetricMatrix &m, std::span<const double> x)
{
    if (x.size() != m.order())
        throw std::invalid_argument("vector length does not match matrix order");
    const auto y = m.multiply(x);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += x[i] * y[i];
    return acc;
}

} // namespace qfactor
