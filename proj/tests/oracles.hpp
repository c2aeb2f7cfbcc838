#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the Graph container and favour obviousness
// over speed.

#include "qfactor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using qfactor::Graph;

using Dense = std::vector<std::vector<int>>;

inline Dense adjacency(const Graph &g)
{
    Dense a(g.order(), std::vector<int>(g.order(), 0));
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
            a[u][v] = (u != v && g.adjacent(u, v)) ? 1 : 0;
    return a;
}

// graph6 through an explicit bit string: upper triangle column by column,
// padded to a multiple of six, each group plus 63.
inline std::string graph6(const Graph &g)
{
    const std::size_t n = g.order();
    std::string bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            bits.push_back(g.adjacent(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0)
        bits.push_back('0');
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6)
        out.push_back(static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2)));
    return out;
}

// Depth-first labelling on the dense matrix, skipping `removed` vertices.
inline std::vector<std::size_t> component_sizes(const Graph &g, const std::vector<bool> &removed)
{
    const auto a = adjacency(g);
    const std::size_t n = g.order();
    std::vector<int> label(n, -1);
    std::vector<std::size_t> sizes;
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || label[s] >= 0)
            continue;
        std::vector<std::size_t> stack{s};
        label[s] = static_cast<int>(sizes.size());
        std::size_t count = 0;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            ++count;
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w] && !removed[w] && label[w] < 0) {
                    label[w] = label[s];
                    stack.push_back(w);
                }
        }
        sizes.push_back(count);
    }
    return sizes;
}

inline bool connected(const Graph &g)
{
    return g.order() > 0 && component_sizes(g, std::vector<bool>(g.order(), false)).size() == 1;
}

inline std::size_t odd_components(const Graph &g, std::uint64_t removed_mask)
{
    std::vector<bool> removed(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        removed[v] = (removed_mask >> v) & 1;
    const auto sizes = component_sizes(g, removed);
    return static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s % 2; }));
}

// o(G - S) < |S| for every S with |S| >= 2, over all 2^n masks.
inline bool criterion(const Graph &g)
{
    const std::size_t n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (k >= 2 && odd_components(g, mask) >= k)
            return false;
    }
    return true;
}

// Every edge subset; true when one gives all vertices positive even degree.
inline bool has_even_factor(const Graph &g)
{
    const auto edges = g.edges();
    const std::size_t n = g.order();
    if (n == 0)
        return false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<int> deg(n, 0);
        for (std::size_t k = 0; k < edges.size(); ++k)
            if ((mask >> k) & 1) {
                ++deg[edges[k].u];
                ++deg[edges[k].v];
            }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d > 0 && d % 2 == 0; }))
            return true;
    }
    return false;
}

// Cyclic Jacobi rotations; returns the eigenvalues in ascending order.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a)
{
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                off += a[i][j] * a[i][j];
        if (off < 1e-24)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300)
                    continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = a[i][i];
    std::sort(values.begin(), values.end());
    return values;
}

inline double largest_eigenvalue(const Graph &g, bool signless)
{
    const std::size_t n = g.order();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v)
            m[u][v] = (u != v && g.adjacent(u, v)) ? 1.0 : 0.0;
        if (signless)
            m[u][u] = static_cast<double>(g.degree(u));
    }
    return symmetric_eigenvalues(m).back();
}

// Largest root of a polynomial (ascending double coefficients) in [lo, hi],
// assuming a sign change between the largest root and hi: scan down from hi
// in steps, then bisect.
inline double largest_root(const std::vector<double> &coefficients, double lo, double hi)
{
    auto eval = [&](double x) {
        double acc = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    };
    const double step = (hi - lo) / 20000.0;
    double b = hi;
    double a = hi - step;
    while (a > lo && (eval(a) > 0) == (eval(b) > 0)) {
        b = a;
        a -= step;
    }
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (a + b);
        if ((eval(mid) > 0) == (eval(b) > 0))
            b = mid;
        else
            a = mid;
    }
    return 0.5 * (a + b);
}

// Relabelled copy: vertex v of g becomes perm[v].
inline Graph relabel(const Graph &g, const std::vector<std::size_t> &perm)
{
    Graph h(g.order());
    for (const auto &e : g.edges())
        h.add_edge(perm[e.u], perm[e.v]);
    return h;
}

// Brute-force isomorphism over all permutations (n <= 8 or so).
inline bool isomorphic(const Graph &a, const Graph &b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    std::vector<std::size_t> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto &e : a.edges())
            if (!b.adjacent(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// K_d v (K_{n-2d+1} u (d-1)K_1) written out edge by edge.
inline Graph gstar(std::size_t n, std::size_t d)
{
    Graph g(n);
    const std::size_t clique_end = n - d + 1;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool hub = u < d;
            const bool both_clique = u < clique_end && v < clique_end;
            if (hub || both_clique)
                g.add_edge(u, v);
        }
    return g;
}

} // namespace oracle
