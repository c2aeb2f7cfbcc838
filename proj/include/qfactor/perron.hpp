#pragma once

#include "qfactor/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qfactor {

struct PerronData {
    double value = 0.0;
    /// Unit 2-norm, nonnegative; zero outside the winning block for reducible inputs.
    std::vector<double> vector;
    /// Infinity norm of M x - value x.
    double residual = 0.0;
    std::size_t iterations = 0;
};

struct PerronOptions {
    /// Convergence needs the Rayleigh change below tolerance and the
    /// residual below 10 * tolerance.
    double tolerance = 1e-12;
    std::size_t max_iterations = 1'000'000;
};

class PerronNonConvergence : public std::runtime_error {
public:
    PerronNonConvergence(const std::string &what, PerronData best)
        : std::runtime_error(what), best_estimate(std::move(best))
    {
    }
    PerronData best_estimate;
};

/// Largest eigenvalue and Perron vector of an entrywise nonnegative symmetric
/// matrix by power iteration from the all-ones vector. Irreducible blocks are
/// solved separately and the largest value wins (first block on ties).
PerronData perron(const SymmetricMatrix &m, const PerronOptions &options = {});

/// Shorthand for perron(signless_laplacian(g)).value.
double signless_spectral_radius(const Graph &g, const PerronOptions &options = {});
double spectral_radius(const Graph &g, const PerronOptions &options = {});

} // namespace qfactor
