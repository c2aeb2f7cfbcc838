#include "qfactor/extremal.hpp"

#include "qfactor/perron.hpp"

#include <cmath>
#include <string>

namespace qfactor {

namespace {

void require(bool condition, const std::string &message)
{
    if (!condition)
        throw ParameterError(message);
}

Graph union_of_cliques(const std::vector<std::size_t> &parts)
{
    Graph g;
    for (auto p : parts)
        g = disjoint_union(g, complete(p));
    return g;
}

std::vector<std::size_t> gstar_parts(std::size_t n, std::size_t delta)
{
    std::vector<std::size_t> parts{n - 2 * delta + 1};
    parts.insert(parts.end(), delta - 1, 1);
    return parts;
}

std::vector<std::size_t> g3_parts(std::size_t n, std::size_t delta, std::size_t s)
{
    std::vector<std::size_t> parts(s - 1, delta + 1 - s);
    parts.push_back(case_three_big_part(n, delta, s));
    return parts;
}

void check_gstar(std::size_t n, std::size_t delta)
{
    require(delta >= 2, "G* needs delta >= 2");
    require(n % 2 == 0, "G* needs even order n");
    require(n >= 2 * delta, "G* needs n >= 2*delta");
}

void check_g2(std::size_t n, std::size_t s)
{
    require(s >= 2, "G2 needs s >= 2");
    require(n >= 2 * s, "G2 needs n >= 2s");
}

void check_g3(std::size_t n, std::size_t delta, std::size_t s)
{
    require(s >= 2, "G3 needs s >= 2");
    require(s + 1 <= delta, "G3 needs s <= delta - 1");
    require(case_three_big_part(n, delta, s) >= delta + 1 - s, "G3 needs m >= delta + 1 - s");
}

} // namespace

Graph build_gstar(std::size_t n, std::size_t delta)
{
    check_gstar(n, delta);
    return build_g1(delta, gstar_parts(n, delta));
}

Partition gstar_partition(std::size_t n, std::size_t delta)
{
    check_gstar(n, delta);
    return Partition::from_sizes({delta, n - 2 * delta + 1, delta - 1});
}

Graph build_g1(std::size_t s, const std::vector<std::size_t> &parts)
{
    require(s >= 1, "G1 needs s >= 1");
    require(!parts.empty(), "G1 needs at least one part");
    for (auto p : parts)
        require(p >= 1, "G1 parts must be positive");
    return join(complete(s), union_of_cliques(parts));
}

Partition g1_partition(std::size_t s, const std::vector<std::size_t> &parts)
{
    std::vector<std::size_t> sizes{s};
    sizes.insert(sizes.end(), parts.begin(), parts.end());
    return Partition::from_sizes(sizes);
}

Graph build_g2(std::size_t n, std::size_t s)
{
    check_g2(n, s);
    std::vector<std::size_t> parts{n - 2 * s + 1};
    parts.insert(parts.end(), s - 1, 1);
    return build_g1(s, parts);
}

Partition g2_partition(std::size_t n, std::size_t s)
{
    check_g2(n, s);
    return Partition::from_sizes({s, n - 2 * s + 1, s - 1});
}

std::size_t case_three_big_part(std::size_t n, std::size_t delta, std::size_t s)
{
    require(s >= 1 && s <= delta + 1, "case-three part needs 1 <= s <= delta + 1");
    const long long m = static_cast<long long>(n) - static_cast<long long>(s) -
                        static_cast<long long>(delta + 1 - s) * static_cast<long long>(s - 1);
    require(m >= 1, "case-three big part m = n - s - (delta+1-s)(s-1) must be positive");
    return static_cast<std::size_t>(m);
}

Graph build_g3(std::size_t n, std::size_t delta, std::size_t s)
{
    check_g3(n, delta, s);
    return build_g1(s, g3_parts(n, delta, s));
}

Partition g3_partition(std::size_t n, std::size_t delta, std::size_t s)
{
    check_g3(n, delta, s);
    return Partition::from_sizes({s, (s - 1) * (delta + 1 - s), case_three_big_part(n, delta, s)});
}

Partition g3_clique_partition(std::size_t n, std::size_t delta, std::size_t s)
{
    check_g3(n, delta, s);
    return g1_partition(s, g3_parts(n, delta, s));
}

Graph build_redistributed(std::size_t n, std::size_t s, std::size_t t, std::size_t p)
{
    require(t >= 2, "redistribution needs t >= 2");
    require(p >= 1, "redistribution needs p >= 1");
    require(n > s + p * (t - 1), "redistribution leaves no vertices for the last clique");
    std::vector<std::size_t> parts(t - 1, p);
    parts.push_back(n - s - p * (t - 1));
    return build_g1(s, parts);
}

std::size_t CaseThreeLabels::u(std::size_t i) const
{
    require(i >= 1 && i <= s, "u_i needs 1 <= i <= s");
    return i - 1;
}

std::size_t CaseThreeLabels::v(std::size_t i, std::size_t j) const
{
    require(i >= 1 && i + 1 <= s, "v_{i,j} needs 1 <= i <= s-1");
    require(j >= 1 && j <= clique_size(), "v_{i,j} needs 1 <= j <= delta+1-s");
    return s + (i - 1) * clique_size() + (j - 1);
}

std::size_t CaseThreeLabels::w(std::size_t r) const
{
    require(r >= 1 && r <= m, "w_r needs 1 <= r <= m");
    return s + (s - 1) * clique_size() + (r - 1);
}

std::vector<Edge> SurgeryPlan::added() const
{
    std::vector<Edge> all = added_e1;
    all.insert(all.end(), added_e2.begin(), added_e2.end());
    return all;
}

std::size_t SurgeryPlan::expected_removed(std::size_t delta, std::size_t s)
{
    const std::size_t k = delta + 1 - s;
    return k * (k - 1) / 2 + (s - 2) * (delta - s);
}

std::size_t SurgeryPlan::expected_added(std::size_t n, std::size_t delta, std::size_t s)
{
    const std::size_t m = case_three_big_part(n, delta, s);
    return (s - 1) * (delta + 1 - s) * (delta - s) + (m - delta + s) * (s - 2) * (delta - s);
}

SurgeryPlan surgery_plan(std::size_t n, std::size_t delta, std::size_t s)
{
    check_g3(n, delta, s);
    SurgeryPlan plan;
    auto &L = plan.labels;
    L = CaseThreeLabels{n, delta, s, case_three_big_part(n, delta, s)};
    const std::size_t k = L.clique_size();

    for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t jj = j + 1; jj <= k; ++jj)
            plan.removed.emplace_back(L.v(1, j), L.v(1, jj));
    for (std::size_t i = 2; i + 1 <= s; ++i)
        for (std::size_t j = 2; j <= k; ++j)
            plan.removed.emplace_back(L.v(i, 1), L.v(i, j));

    for (std::size_t i = 1; i + 1 <= s; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            for (std::size_t r = 1; r <= delta - s; ++r)
                plan.added_e1.emplace_back(L.v(i, j), L.w(r));

    for (std::size_t i = 2; i + 1 <= s; ++i)
        for (std::size_t j = 2; j <= k; ++j)
            for (std::size_t r = delta - s + 1; r <= L.m; ++r)
                plan.added_e2.emplace_back(L.v(i, j), L.w(r));
    return plan;
}

Graph apply_surgery(const Graph &g3, const SurgeryPlan &plan)
{
    Graph g = g3;
    for (const auto &e : plan.removed) {
        if (!g.adjacent(e.u, e.v))
            throw std::logic_error("surgery removes an edge that is absent");
        g.remove_edge(e.u, e.v);
    }
    for (const auto &e : plan.added()) {
        if (g3.adjacent(e.u, e.v))
            throw std::logic_error("surgery adds an edge that is already present");
        g.add_edge(e.u, e.v);
    }
    return g;
}

Graph build_g4(std::size_t n, std::size_t delta, std::size_t s)
{
    return apply_surgery(build_g3(n, delta, s), surgery_plan(n, delta, s));
}

bool is_subgraph_identity(const Graph &h, const Graph &host)
{
    if (h.order() != host.order())
        return false;
    for (const auto &e : h.edges())
        if (!host.adjacent(e.u, e.v))
            return false;
    return true;
}

std::optional<std::vector<std::size_t>> find_gstar_embedding(const Graph &h, std::size_t delta)
{
    const std::size_t n = h.order();
    if (delta < 2 || n % 2 != 0 || n < 2 * delta)
        return std::nullopt;

    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < n; ++v)
        if (h.degree(v) <= delta)
            candidates.push_back(v);

    std::vector<std::size_t> chosen;
    std::optional<VertexSet> hub;
    auto search = [&](auto &&self, std::size_t from, const VertexSet &neighbourhood) -> bool {
        if (chosen.size() == delta - 1) {
            hub = neighbourhood;
            return true;
        }
        for (std::size_t c = from; c < candidates.size(); ++c) {
            const std::size_t v = candidates[c];
            if (neighbourhood.contains(v))
                continue;
            bool independent = true;
            for (auto x : chosen)
                if (h.adjacent(x, v))
                    independent = false;
            if (!independent)
                continue;
            const VertexSet merged = neighbourhood | h.neighbors(v);
            if (merged.size() > delta)
                continue;
            chosen.push_back(v);
            if (self(self, c + 1, merged))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 0, VertexSet(n)))
        return std::nullopt;

    VertexSet singles(n, chosen);
    VertexSet joined = *hub;
    for (std::size_t v = 0; v < n && joined.size() < delta; ++v)
        if (!singles.contains(v))
            joined.insert(v);

    std::vector<std::size_t> mapping(n);
    std::size_t next_join = 0, next_clique = delta, next_single = n - delta + 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (joined.contains(v))
            mapping[v] = next_join++;
        else if (singles.contains(v))
            mapping[v] = next_single++;
        else
            mapping[v] = next_clique++;
    }
    const Graph host = build_gstar(n, delta);
    for (const auto &e : h.edges())
        if (!host.adjacent(mapping[e.u], mapping[e.v]))
            throw std::logic_error("G* embedding failed verification");
    return mapping;
}

EmbeddingReport check_gstar_containment(const Graph &h, std::size_t delta)
{
    EmbeddingReport report;
    report.identity = is_subgraph_identity(h, build_gstar(h.order(), delta));
    if (auto mapping = find_gstar_embedding(h, delta)) {
        report.found = true;
        report.mapping = std::move(*mapping);
    }
    return report;
}

QuotientMatrix quotient_b2(long long n, long long s)
{
    require(s >= 2 && n >= 2 * s, "B2 needs s >= 2 and n >= 2s");
    return QuotientMatrix::from_integers({
        {n + s - 2, n - 2 * s + 1, s - 1},
        {s, 2 * n - 3 * s, 0},
        {s, 0, s},
    });
}

QuotientMatrix quotient_bstar(long long n, long long delta)
{
    require(n >= 0, "B* needs nonnegative n");
    check_gstar(static_cast<std::size_t>(n), static_cast<std::size_t>(delta < 0 ? 0 : delta));
    return quotient_b2(n, delta);
}

IntPolynomial phi_b2(long long n, long long s)
{
    const BigInt N = n;
    const BigInt S = s;
    return IntPolynomial(std::vector<BigInt>{
        -2 * S * N * N + 4 * N * S * S + 2 * N * S - 2 * S * S * S - 2 * S * S,
        2 * N * N + N * S - 4 * N - 4 * S * S + 4 * S,
        -(3 * N - S - 2),
        BigInt(1),
    });
}

IntPolynomial phi_bstar(long long n, long long delta) { return phi_b2(n, delta); }

IntPolynomial f_poly(long long n, long long s, long long delta)
{
    const BigInt N = n;
    const BigInt S = s;
    const BigInt D = delta;
    return IntPolynomial(std::vector<BigInt>{
        -2 * N * N + 2 * N * (2 * S + 2 * D + 1) - 2 * (S * S + S * D + D * D) - 2 * (S + D),
        N - 4 * S - 4 * D + 4,
        BigInt(1),
    });
}

double threshold_q(std::size_t n, std::size_t delta, double tol)
{
    check_gstar(n, delta);
    const double root = largest_real_root(phi_bstar(static_cast<long long>(n), static_cast<long long>(delta)), 0.0,
                                          2.0 * static_cast<double>(n));
    const double power = signless_spectral_radius(build_gstar(n, delta));
    if (std::abs(root - power) > tol)
        throw CrossValidationError("threshold root " + std::to_string(root) + " disagrees with Perron value " +
                                   std::to_string(power));
    return root;
}

} // namespace qfactor
