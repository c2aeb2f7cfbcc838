#pragma once

#include "qfactor/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qfactor {

/// Dense real symmetric matrix, row-major.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order);
    /// Throws std::invalid_argument unless rows are square and symmetric.
    static SymmetricMatrix from_rows(const std::vector<std::vector<double>> &rows);

    std::size_t order() const { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    std::vector<double> multiply(std::span<const double> x) const;
    SymmetricMatrix principal(std::span<const std::size_t> indices) const;

    bool is_nonnegative() const;
    bool is_integral() const;

    friend SymmetricMatrix operator-(const SymmetricMatrix &a, const SymmetricMatrix &b);
    friend bool operator==(const SymmetricMatrix &, const SymmetricMatrix &) = default;

private:
    std::size_t order_ = 0;
    std::vector<double> entries_;
};

SymmetricMatrix adjacency_matrix(const Graph &g);
/// Q(G) = D(G) + A(G).
SymmetricMatrix signless_laplacian(const Graph &g);
/// alpha*D(G) + A(G) for alpha in {0, 1}; other values throw std::invalid_argument.
SymmetricMatrix alpha_matrix(const Graph &g, int alpha);

/// x^T M x. Throws std::invalid_argument on a dimension mismatch.
double quadratic_form(const SymmetricMatrix &m, std::span<const double> x);

} // namespace qfactor
