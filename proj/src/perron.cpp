#include "qfactor/perron.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qfactor {

namespace {

std::vector<std::vector<std::size_t>> irreducible_blocks(const SymmetricMatrix &m)
{
    const std::size_t n = m.order();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != 0.0)
                parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto root = find(v);
        if (slot[root] == n) {
            slot[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[root]].push_back(v);
    }
    return blocks;
}

void normalize(std::vector<double> &x)
{
    double norm = 0.0;
    for (double v : x)
        norm += v * v;
    norm = std::sqrt(norm);
    for (double &v : x)
        v /= norm;
}

PerronData power_iteration(const SymmetricMatrix &m, const PerronOptions &options)
{
    const std::size_t n = m.order();
    PerronData out;
    if (n == 1) {
        out.value = m(0, 0);
        out.vector = {1.0};
        return out;
    }

    // A zero diagonal allows period two (bipartite adjacency); shifting by the
    // identity keeps the eigenvectors and removes the oscillation.
    double shift = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) == 0.0)
            shift = 1.0;

    std::vector<double> x(n, 1.0);
    normalize(x);
    double previous = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t it = 1; it <= options.max_iterations; ++it) {
        const auto y = m.multiply(x);
        double rayleigh = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            rayleigh += x[i] * y[i];
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(y[i] - rayleigh * x[i]));

        out.value = rayleigh;
        out.vector = x;
        out.residual = residual;
        out.iterations = it;
        if (std::abs(rayleigh - previous) < options.tolerance && residual < 10.0 * options.tolerance)
            return out;
        previous = rayleigh;

        for (std::size_t i = 0; i < n; ++i)
            x[i] = y[i] + shift * x[i];
        normalize(x);
    }
    throw PerronNonConvergence("power iteration did not converge within " + std::to_string(options.max_iterations) +
                                   " iterations",
                               out);
}

} // namespace

PerronData perron(const SymmetricMatrix &m, const PerronOptions &options)
{
    if (m.order() == 0)
        throw std::invalid_argument("Perron root of an empty matrix");
    if (!m.is_nonnegative())
        throw std::invalid_argument("Perron root needs an entrywise nonnegative matrix");

    const auto blocks = irreducible_blocks(m);
    if (blocks.size() == 1)
        return power_iteration(m, options);

    PerronData best;
    const std::vector<std::size_t> *winner = nullptr;
    std::size_t total_iterations = 0;
    for (const auto &block : blocks) {
        auto data = power_iteration(m.principal(block), options);
        total_iterations += data.iterations;
        if (winner == nullptr || data.value > best.value) {
            best = std::move(data);
            winner = &block;
        }
    }
    PerronData out;
    out.value = best.value;
    out.residual = best.residual;
    out.iterations = total_iterations;
    out.vector.assign(m.order(), 0.0);
    for (std::size_t k = 0; k < winner->size(); ++k)
        out.vector[(*winner)[k]] = best.vector[k];
    return out;
}

double signless_spectral_radius(const Graph &g, const PerronOptions &options)
{
    return perron(signless_laplacian(g), options).value;
}

double spectral_radius(const Graph &g, const PerronOptions &options)
{
    return perron(adjacency_matrix(g), options).value;
}

} // namespace qfactor
