#include "qfactor/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfactor {

Partition::Partition(std::size_t order, std::vector<std::vector<std::size_t>> cells)
    : order_(order), cells_(std::move(cells))
{
    std::vector<bool> seen(order_, false);
    std::size_t covered = 0;
    for (const auto &cell : cells_) {
        if (cell.empty())
            throw std::invalid_argument("partition cells must be nonempty");
        for (auto v : cell) {
            if (v >= order_)
                throw std::invalid_argument("partition cell index outside range");
            if (seen[v])
                throw std::invalid_argument("partition cells overlap");
            seen[v] = true;
            ++covered;
        }
    }
    if (covered != order_)
        throw std::invalid_argument("partition does not cover every index");
}

Partition Partition::from_sizes(const std::vector<std::size_t> &sizes)
{
    std::vector<std::vector<std::size_t>> cells;
    std::size_t next = 0;
    for (auto size : sizes) {
        std::vector<std::size_t> cell(size);
        for (auto &v : cell)
            v = next++;
        cells.push_back(std::move(cell));
    }
    return Partition(next, std::move(cells));
}

Partition Partition::singletons(std::size_t order)
{
    return from_sizes(std::vector<std::size_t>(order, 1));
}

Partition Partition::whole(std::size_t order) { return from_sizes({order}); }

QuotientMatrix::QuotientMatrix(std::size_t order) : order_(order), entries_(order * order) {}

QuotientMatrix QuotientMatrix::from_integers(const std::vector<std::vector<long long>> &rows)
{
    QuotientMatrix q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw std::invalid_argument("quotient rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j)
            q(i, j) = rows[i][j];
    }
    return q;
}

bool QuotientMatrix::is_integral() const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational &r) { return boost::multiprecision::denominator(r) == 1; });
}

std::vector<std::vector<double>> QuotientMatrix::to_double() const
{
    std::vector<std::vector<double>> rows(order_, std::vector<double>(order_));
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j)
            rows[i][j] = (*this)(i, j).convert_to<double>();
    return rows;
}

namespace {

void check_orders(const SymmetricMatrix &m, const Partition &p)
{
    if (m.order() != p.order())
        throw std::invalid_argument("partition order " + std::to_string(p.order()) + " differs from matrix order " +
                                    std::to_string(m.order()));
}

// Row sums of block (i, j) for every row in cell i, exact.
std::vector<Rational> block_row_sums(const SymmetricMatrix &m, const std::vector<std::size_t> &rows,
                                     const std::vector<std::size_t> &cols)
{
    std::vector<Rational> sums;
    sums.reserve(rows.size());
    for (auto r : rows) {
        // Integer entries are summed in long double first; they stay exact far
        // beyond any order used here.
        long double integral = 0;
        Rational fractional = 0;
        for (auto c : cols) {
            const double v = m(r, c);
            if (std::trunc(v) == v && std::abs(v) < 0x1.0p52)
                integral += v;
            else
                fractional += Rational(v);
        }
        sums.push_back(Rational(static_cast<long long>(integral)) + fractional);
    }
    return sums;
}

} // namespace

QuotientMatrix quotient_matrix(const SymmetricMatrix &m, const Partition &p)
{
    check_orders(m, p);
    QuotientMatrix q(p.cell_count());
    for (std::size_t i = 0; i < p.cell_count(); ++i)
        for (std::size_t j = 0; j < p.cell_count(); ++j) {
            Rational total = 0;
            for (const auto &s : block_row_sums(m, p.cell(i), p.cell(j)))
                total += s;
            q(i, j) = total / static_cast<long long>(p.cell(i).size());
        }
    return q;
}

bool is_equitable(const SymmetricMatrix &m, const Partition &p)
{
    check_orders(m, p);
    for (std::size_t i = 0; i < p.cell_count(); ++i)
        for (std::size_t j = 0; j < p.cell_count(); ++j) {
            const auto sums = block_row_sums(m, p.cell(i), p.cell(j));
            if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) != sums.end())
                return false;
        }
    return true;
}

std::vector<double> cell_spreads(const PerronData &pd, const Partition &p)
{
    if (pd.vector.size() != p.order())
        throw std::invalid_argument("Perron vector length differs from partition order");
    std::vector<double> spreads;
    for (const auto &cell : p.cells()) {
        double lo = pd.vector[cell.front()];
        double hi = lo;
        for (auto v : cell) {
            lo = std::min(lo, pd.vector[v]);
            hi = std::max(hi, pd.vector[v]);
        }
        const double scale = std::max(std::abs(lo), std::abs(hi));
        spreads.push_back(scale > 0.0 ? (hi - lo) / scale : 0.0);
    }
    return spreads;
}

std::vector<double> cell_values(const PerronData &pd, const Partition &p, double tol)
{
    const auto spreads = cell_spreads(pd, p);
    std::vector<double> values;
    for (std::size_t i = 0; i < p.cell_count(); ++i) {
        if (spreads[i] > tol)
            throw CellSpreadError("Perron vector not constant on cell " + std::to_string(i) +
                                  " (relative spread " + std::to_string(spreads[i]) + ")");
        double sum = 0.0;
        for (auto v : p.cell(i))
            sum += pd.vector[v];
        values.push_back(sum / static_cast<double>(p.cell(i).size()));
    }
    return values;
}

} // namespace qfactor
