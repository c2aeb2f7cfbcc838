#pragma once

#include "qfactor/matrix.hpp"
#include "qfactor/perron.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qfactor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ordered cells covering 0..order-1; nonempty and pairwise disjoint.
class Partition {
public:
    /// Throws std::invalid_argument unless the cells partition 0..order-1.
    Partition(std::size_t order, std::vector<std::vector<std::size_t>> cells);

    /// Consecutive index ranges with the given sizes.
    static Partition from_sizes(const std::vector<std::size_t> &sizes);
    static Partition singletons(std::size_t order);
    static Partition whole(std::size_t order);

    std::size_t order() const { return order_; }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<std::size_t> &cell(std::size_t i) const { return cells_.at(i); }
    const std::vector<std::vector<std::size_t>> &cells() const { return cells_; }

private:
    std::size_t order_;
    std::vector<std::vector<std::size_t>> cells_;
};

/// Matrix of average block row sums b_ij, kept as exact rationals.
class QuotientMatrix {
public:
    QuotientMatrix() = default;
    explicit QuotientMatrix(std::size_t order);
    static QuotientMatrix from_integers(const std::vector<std::vector<long long>> &rows);

    std::size_t order() const { return order_; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    Rational &operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

    bool is_integral() const;
    std::vector<std::vector<double>> to_double() const;

    friend bool operator==(const QuotientMatrix &, const QuotientMatrix &) = default;

private:
    std::size_t order_ = 0;
    std::vector<Rational> entries_;
};

/// b_ij = (sum of block M_ij) / |N_i|, exactly. Throws std::invalid_argument
/// when the partition order differs from the matrix order.
QuotientMatrix quotient_matrix(const SymmetricMatrix &m, const Partition &p);

/// True iff every block has constant row sums (exact comparison).
bool is_equitable(const SymmetricMatrix &m, const Partition &p);

class CellSpreadError : public std::runtime_error {
public:
    explicit CellSpreadError(const std::string &what) : std::runtime_error(what) {}
};

/// Largest (max - min) / max|x| of the Perron vector over each cell.
std::vector<double> cell_spreads(const PerronData &pd, const Partition &p);

/// One value per cell (the cell mean). Throws CellSpreadError when a cell's
/// relative spread exceeds tol.
std::vector<double> cell_values(const PerronData &pd, const Partition &p, double tol);

} // namespace qfactor
