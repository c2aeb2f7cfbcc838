#include "qfactor/factors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfactor {

namespace {

std::vector<std::uint64_t> row_masks(const Graph &g)
{
    std::vector<std::uint64_t> rows(g.order(), 0);
    for (const auto &e : g.edges()) {
        rows[e.u] |= std::uint64_t{1} << e.v;
        rows[e.v] |= std::uint64_t{1} << e.u;
    }
    return rows;
}

std::size_t odd_components(const std::vector<std::uint64_t> &rows, std::uint64_t alive)
{
    std::size_t odd = 0;
    while (alive) {
        std::uint64_t component = alive & (~alive + 1);
        std::uint64_t frontier = component;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= rows[static_cast<std::size_t>(__builtin_ctzll(f))];
            next &= alive & ~component;
            component |= next;
            frontier = next;
        }
        if (__builtin_popcountll(component) % 2 == 1)
            ++odd;
        alive &= ~component;
    }
    return odd;
}

} // namespace

CriterionResult strong_tutte_check(const Graph &g, const Guards &guards)
{
    const std::size_t n = g.order();
    if (n % 2 != 0)
        throw std::invalid_argument("odd-component criterion is stated for even order only");
    if (n > guards.max_subset_order || n > 64)
        throw GuardExceeded("subset enumeration on order " + std::to_string(n) + " exceeds the guard (" +
                            std::to_string(std::min<std::size_t>(guards.max_subset_order, 64)) + ")");

    CriterionResult result;
    const auto rows = row_masks(g);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    // o(G - S) <= n - |S|, so no S with |S| > n/2 can violate.
    for (std::size_t k = 2; k <= n / 2; ++k) {
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint64_t s = 0;
            for (auto v : pick)
                s |= std::uint64_t{1} << v;
            ++result.subsets_examined;
            const std::size_t odd = odd_components(rows, all & ~s);
            if (odd >= k) {
                result.holds = false;
                result.blocking = VertexSet(n, pick);
                result.blocking_odd_components = odd;
                return result;
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return result;
}

namespace {

class FactorSearch {
public:
    explicit FactorSearch(const Graph &g) : n_(g.order()), current_(n_, 0), remaining_(n_, 0)
    {
        // Vertex-major order, lowest degree first, so that constrained
        // vertices are completed (and checked) early.
        const auto deg = g.degrees();
        std::vector<std::size_t> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
        std::vector<bool> done(n_, false);
        for (auto v : order) {
            for (auto w : g.neighbors(v).members())
                if (!done[w])
                    edges_.push_back(v < w ? Edge{v, w} : Edge{w, v});
            done[v] = true;
        }
        for (const auto &e : edges_) {
            ++remaining_[e.u];
            ++remaining_[e.v];
        }
        parent_.resize(n_);
        odd_.resize(n_);
    }

    std::optional<EvenFactor> run()
    {
        for (std::size_t v = 0; v < n_; ++v)
            if (!vertex_feasible(v))
                return std::nullopt;
        if (!parity_feasible(0))
            return std::nullopt;
        if (!descend(0))
            return std::nullopt;
        return EvenFactor{chosen_};
    }

    std::size_t nodes() const { return nodes_; }

private:
    bool vertex_feasible(std::size_t v) const
    {
        const std::size_t cur = current_[v];
        const std::size_t target = std::max<std::size_t>(2, cur + cur % 2);
        return cur + remaining_[v] >= target;
    }

    // Parities can be repaired only inside components of the undecided edges,
    // so each such component must hold an even number of odd-degree vertices.
    bool parity_feasible(std::size_t next)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent_[v] != v)
                v = parent_[v] = parent_[parent_[v]];
            return v;
        };
        for (std::size_t k = next; k < edges_.size(); ++k)
            parent_[find(edges_[k].u)] = find(edges_[k].v);
        std::fill(odd_.begin(), odd_.end(), 0);
        for (std::size_t v = 0; v < n_; ++v)
            odd_[find(v)] ^= static_cast<unsigned char>(current_[v] % 2);
        return std::none_of(odd_.begin(), odd_.end(), [](unsigned char c) { return c != 0; });
    }

    bool descend(std::size_t k)
    {
        ++nodes_;
        if (k == edges_.size())
            return true;
        const Edge e = edges_[k];
        --remaining_[e.u];
        --remaining_[e.v];

        ++current_[e.u];
        ++current_[e.v];
        chosen_.push_back(e);
        if (vertex_feasible(e.u) && vertex_feasible(e.v) && parity_feasible(k + 1) && descend(k + 1))
            return true;
        chosen_.pop_back();
        --current_[e.u];
        --current_[e.v];

        if (vertex_feasible(e.u) && vertex_feasible(e.v) && parity_feasible(k + 1) && descend(k + 1))
            return true;

        ++remaining_[e.u];
        ++remaining_[e.v];
        return false;
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> remaining_;
    std::vector<Edge> chosen_;
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> odd_;
    std::size_t nodes_ = 0;
};

// Removes from E a join of the odd-degree vertices taken inside a BFS
// spanning forest rooted at `root`. The rest has all degrees even; it is an
// even factor when no vertex lost all of its edges. Cheap and usually
// successful on dense graphs.
std::optional<EvenFactor> tree_join_candidate(const Graph &g, std::size_t root)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t start = (root + k) % n;
        if (seen[start])
            continue;
        seen[start] = true;
        order.push_back(start);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head)
            for (auto w : g.neighbors(order[head]).members())
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = order[head];
                    order.push_back(w);
                }
    }
    std::vector<unsigned char> odd(n);
    for (std::size_t v = 0; v < n; ++v)
        odd[v] = static_cast<unsigned char>(g.degree(v) % 2);
    Graph rest = g;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t v = *it;
        if (odd[v] && parent[v] != n) {
            rest.remove_edge(v, parent[v]);
            odd[parent[v]] ^= 1;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (rest.degree(v) == 0 || rest.degree(v) % 2 != 0)
            return std::nullopt;
    return EvenFactor{rest.edges()};
}

} // namespace

CertificateSearch search_even_factor(const Graph &g, const Guards &guards)
{
    if (g.order() > guards.max_certificate_order)
        throw GuardExceeded("certificate search on order " + std::to_string(g.order()) + " exceeds the guard (" +
                            std::to_string(guards.max_certificate_order) + ")");
    if (g.size() > guards.max_certificate_edges)
        throw GuardExceeded("certificate search on " + std::to_string(g.size()) + " edges exceeds the guard (" +
                            std::to_string(guards.max_certificate_edges) + ")");
    CertificateSearch out;
    if (g.order() == 0)
        return out;
    for (std::size_t root = 0; root < g.order() && !out.factor; ++root)
        out.factor = tree_join_candidate(g, root);
    if (out.factor) {
        std::sort(out.factor->edges.begin(), out.factor->edges.end());
        if (!verify_even_factor(g, *out.factor))
            throw std::logic_error("tree join produced an invalid even factor");
        return out;
    }
    FactorSearch search(g);
    out.factor = search.run();
    out.nodes = search.nodes();
    if (out.factor) {
        std::sort(out.factor->edges.begin(), out.factor->edges.end());
        if (!verify_even_factor(g, *out.factor))
            throw std::logic_error("certificate search produced an invalid even factor");
    }
    return out;
}

std::optional<EvenFactor> find_even_factor(const Graph &g, const Guards &guards)
{
    return search_even_factor(g, guards).factor;
}

bool verify_even_factor(const Graph &g, const EvenFactor &f)
{
    std::vector<std::size_t> degree(g.order(), 0);
    std::vector<Edge> seen = f.edges;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("even factor lists an edge twice");
    for (const auto &e : f.edges) {
        if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
            throw std::invalid_argument("even factor uses an edge not in the host graph");
        ++degree[e.u];
        ++degree[e.v];
    }
    if (g.order() == 0)
        return false;
    return std::all_of(degree.begin(), degree.end(), [](std::size_t d) { return d > 0 && d % 2 == 0; });
}

std::string_view to_string(Agreement a)
{
    switch (a) {
    case Agreement::both_yes:
        return "both_yes";
    case Agreement::both_no:
        return "both_no";
    case Agreement::criterion_no_factor_yes:
        return "criterion_no_factor_yes";
    case Agreement::criterion_yes_factor_no:
        return "criterion_yes_factor_no";
    }
    return "unknown";
}

Agreement classify_agreement(bool criterion_holds, bool factor_found)
{
    if (criterion_holds)
        return factor_found ? Agreement::both_yes : Agreement::criterion_yes_factor_no;
    return factor_found ? Agreement::criterion_no_factor_yes : Agreement::both_no;
}

FactorVerdict factor_verdict(const Graph &g, const Guards &guards)
{
    FactorVerdict verdict;
    const auto criterion = strong_tutte_check(g, guards);
    verdict.criterion_holds = criterion.holds;
    verdict.blocking = criterion.blocking;
    verdict.blocking_odd_components = criterion.blocking_odd_components;
    verdict.certificate = find_even_factor(g, guards);
    verdict.agreement = classify_agreement(verdict.criterion_holds, verdict.certificate.has_value());
    return verdict;
}

} // namespace qfactor
