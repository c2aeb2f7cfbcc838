#include "qfactor/suites.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/generate.hpp"
#include "qfactor/graph6.hpp"
#include "qfactor/matrix.hpp"
#include "qfactor/parallel.hpp"
#include "qfactor/perron.hpp"
#include "qfactor/polynomial.hpp"
#include "qfactor/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qfactor {

namespace {

constexpr double kInequalitySlack = 1e-8;
constexpr double kStrictMargin = 1e-6;
constexpr double kEqualityTolerance = 1e-9;
constexpr double kSpreadTolerance = 1e-8;
constexpr double kRootTolerance = 1e-8;

std::string join_sizes(const std::vector<std::size_t> &v)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ']';
    return out.str();
}

template <class... Args> std::string describe(Args &&...args)
{
    std::ostringstream out;
    ((out << args), ...);
    return out.str();
}

double q_of(const Graph &g) { return perron(signless_laplacian(g)).value; }

std::size_t first_even_at_least(std::size_t v) { return v + v % 2; }

// 7delta-7 rounded up to even, never below 2delta.
std::size_t smallest_order(std::size_t delta)
{
    return std::max(first_even_at_least(7 * delta - 7), 2 * delta);
}

// ---------------------------------------------------------------- lemmas

void check_redistribution(SuiteReport &report, const LemmaGrid &grid)
{
    for (std::size_t s = 2; s <= grid.max_separator; ++s) {
        for (std::size_t n = 2 * s; n <= grid.max_order; n += 2) {
            for (const auto &parts : odd_compositions(n - s, s)) {
                const double lhs = q_of(build_g1(s, parts));
                for (std::size_t p = 1; p <= parts.front(); ++p) {
                    const double rhs = q_of(build_redistributed(n, s, s, p));
                    const bool equality_case =
                        std::all_of(parts.begin(), parts.end() - 1, [p](std::size_t x) { return x == p; });
                    CheckRecord r;
                    r.property = "clique_redistribution";
                    r.instance = describe("n=", n, " s=", s, " parts=", join_sizes(parts), " p=", p);
                    if (equality_case) {
                        r.margin = kEqualityTolerance - std::abs(rhs - lhs);
                        r.passed = std::abs(rhs - lhs) < kEqualityTolerance;
                        r.note = "equality case";
                    } else {
                        r.margin = rhs - lhs;
                        r.passed = lhs <= rhs + kInequalitySlack && rhs - lhs > kStrictMargin;
                        r.note = "strict case";
                    }
                    report.add(std::move(r));
                }
            }
        }
    }
}

void check_edge_deletion(SuiteReport &report, const LemmaGrid &grid)
{
    const std::size_t span = grid.edge_deletion_max_order - grid.edge_deletion_min_order + 1;
    std::size_t accepted = 0;
    for (std::uint64_t attempt = 0; accepted < grid.edge_deletion_pairs; ++attempt) {
        SplitMix64 rng(derive_seed(grid.seed, attempt));
        const std::size_t n = grid.edge_deletion_min_order + rng.next_below(span);
        const Graph g = random_graph(n, grid.edge_deletion_p, rng.next());
        if (!is_connected(g) || g.size() == 0)
            continue;
        const auto edges = g.edges();
        const Edge e = edges[rng.next_below(edges.size())];
        Graph h = g;
        h.remove_edge(e.u, e.v);
        const double qg = q_of(g);
        const double qh = q_of(h);
        CheckRecord r;
        r.property = "edge_deletion_monotone";
        r.instance = describe(write_graph6(g), " minus ", e.u, "-", e.v);
        r.margin = qg - qh;
        r.passed = qg - qh > 0.0;
        report.add(std::move(r));
        ++accepted;
    }
}

void check_quotient_eigenvalues(SuiteReport &report, const LemmaGrid &grid)
{
    for (auto delta : grid.gstar_deltas) {
        for (std::size_t n = smallest_order(delta); n <= 7 * delta + 13; n += 2) {
            const Graph g = build_gstar(n, delta);
            const auto q = signless_laplacian(g);
            const auto part = gstar_partition(n, delta);
            const auto inst = describe("n=", n, " delta=", delta);

            const bool equitable = is_equitable(q, part);
            const auto b = quotient_matrix(q, part);
            report.add({"quotient_equitable", inst, equitable, equitable ? 1.0 : -1.0, ""});
            report.add({"quotient_closed_form", inst, b == quotient_bstar(static_cast<long long>(n),
                                                                          static_cast<long long>(delta)),
                        0.0, ""});

            const auto phi = char_poly(b);
            if (n <= grid.exact_divisibility_max_order)
                report.add({"quotient_char_poly_divides", inst, divides(phi, char_poly(q)), 0.0, "exact"});
            const double top = largest_real_root(phi, 0.0, 2.0 * static_cast<double>(n));
            const double value = perron(q).value;
            const double gap = std::abs(value - top);
            report.add({"quotient_largest_root", inst, gap < kRootTolerance, kRootTolerance - gap, ""});

            // Every quotient eigenvalue lifts to an eigenvector constant on cells.
            const auto bd = b.to_double();
            double worst = 0.0;
            for (double lambda : real_roots(phi)) {
                const double r0[3] = {bd[0][0] - lambda, bd[0][1], bd[0][2]};
                const double r1[3] = {bd[1][0], bd[1][1] - lambda, bd[1][2]};
                double y[3] = {r0[1] * r1[2] - r0[2] * r1[1], r0[2] * r1[0] - r0[0] * r1[2],
                               r0[0] * r1[1] - r0[1] * r1[0]};
                const double norm = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
                for (auto &c : y)
                    c /= norm;
                std::vector<double> x(n);
                for (std::size_t c = 0; c < 3; ++c)
                    for (auto v : part.cell(c))
                        x[v] = y[c];
                const auto mx = q.multiply(x);
                double xnorm = 0.0;
                for (auto v : x)
                    xnorm = std::max(xnorm, std::abs(v));
                for (std::size_t i = 0; i < n; ++i)
                    worst = std::max(worst, std::abs(mx[i] - lambda * x[i]) / xnorm);
            }
            report.add({"quotient_eigenvalues_lift", inst, worst < kRootTolerance, kRootTolerance - worst,
                        "max residual of lifted eigenvectors"});
        }
    }
}

struct CellCase {
    std::string instance;
    Graph graph;
    Partition partition;
    // Sizes of the clique cells after the first (separator) cell.
    std::vector<std::size_t> clique_sizes;
};

std::vector<CellCase> cell_cases(const LemmaGrid &grid)
{
    std::vector<CellCase> cases;
    for (std::size_t s = 2; s <= grid.max_separator; ++s)
        for (std::size_t n = 2 * s; n <= grid.max_order; n += 2)
            for (const auto &parts : odd_compositions(n - s, s))
                cases.push_back({describe("G1 s=", s, " parts=", join_sizes(parts)), build_g1(s, parts),
                                 g1_partition(s, parts), parts});
    for (auto delta : grid.case_three_deltas)
        for (std::size_t s = 2; s + 1 <= delta; ++s)
            for (std::size_t n = smallest_order(delta); n <= 7 * delta + 13; n += 2) {
                std::vector<std::size_t> sizes(s - 1, delta + 1 - s);
                sizes.push_back(case_three_big_part(n, delta, s));
                cases.push_back({describe("G3 n=", n, " delta=", delta, " s=", s), build_g3(n, delta, s),
                                 g3_clique_partition(n, delta, s), sizes});
            }
    return cases;
}

void check_cells(SuiteReport &report, const LemmaGrid &grid)
{
    for (const auto &c : cell_cases(grid)) {
        for (int alpha : {0, 1}) {
            const auto m = alpha_matrix(c.graph, alpha);
            const auto pd = perron(m);
            const auto inst = describe(c.instance, " alpha=", alpha);

            const auto spreads = cell_spreads(pd, c.partition);
            const double spread = *std::max_element(spreads.begin(), spreads.end());
            report.add({"perron_constant_on_cells", inst, spread < kSpreadTolerance, kSpreadTolerance - spread, ""});

            const auto values = cell_values(pd, c.partition, 1.0);
            bool ok = true;
            double margin = 1.0;
            for (std::size_t i = 1; i + 1 < values.size(); ++i) {
                const double diff = values[i + 1] - values[i];
                if (c.clique_sizes[i - 1] == c.clique_sizes[i]) {
                    ok = ok && std::abs(diff) < kEqualityTolerance;
                    margin = std::min(margin, kEqualityTolerance - std::abs(diff));
                } else {
                    ok = ok && diff > kEqualityTolerance;
                    margin = std::min(margin, diff);
                }
            }
            report.add({"cell_value_ordering", inst, ok, margin, ""});
        }
    }
}

// ------------------------------------------------------------ identities

void check_case_one(SuiteReport &report, const IdentityGrid &grid)
{
    for (std::size_t delta = grid.min_delta; delta <= grid.max_delta; ++delta) {
        const std::size_t low = first_even_at_least(7 * delta - 7);
        const std::size_t high = 7 * delta - 7 + grid.order_span;
        for (std::size_t n = std::max(low, 2 * (delta + 1)); n <= high; n += 2) {
            const double q_star = q_of(build_gstar(n, delta));
            const auto ln = static_cast<long long>(n);
            const auto ld = static_cast<long long>(delta);
            const auto phi_star = phi_bstar(ln, ld);
            for (std::size_t s = delta + 1; 2 * s <= n; ++s) {
                const auto ls = static_cast<long long>(s);
                const auto inst = describe("n=", n, " s=", s, " delta=", delta);
                const auto phi2 = phi_b2(ln, ls);
                const auto f = f_poly(ln, ls, ld);

                const bool factored = phi2 - phi_star == BigInt(ls - ld) * f;
                report.add({"difference_factorization", inst, factored, factored ? 0.0 : -1.0, ""});

                const BigInt x0 = 2 * ln - 2 * ld;
                const BigInt value = f.evaluate(x0);
                const BigInt closed = 4 * ln * ln - (4 * ln - 6 * ld) * ls - 14 * ln * ld + 10 * ln + 10 * ld * ld -
                                      10 * ld - 2 * ls * ls - 2 * ls;
                report.add({"f_at_lower_end", inst, value >= 3, value.convert_to<double>() - 3.0,
                            describe("f(", x0, ")=", value)});
                report.add({"f_at_lower_end_closed_form", inst, value == closed, 0.0, ""});

                // (4s+4d-n-4)/2 < 2n-2d, compared after doubling.
                const long long axis = 4 * ls + 4 * ld - ln - 4;
                const long long bound = 4 * ln - 4 * ld;
                report.add({"axis_left_of_lower_end", inst, axis < bound, static_cast<double>(bound - axis) / 2.0, ""});

                const double q2 = q_of(build_g2(n, s));
                const bool exact_less = compare_largest_roots(phi2, phi_star) == std::strong_ordering::less;
                report.add({"separator_case_below_threshold", inst, exact_less && q2 < q_star, q_star - q2, ""});
            }
        }
    }
}

std::vector<std::vector<std::size_t>> spread_pick(std::vector<std::vector<std::size_t>> all, std::size_t cap)
{
    if (cap == 0 || all.size() <= cap)
        return all;
    std::vector<std::vector<std::size_t>> picked;
    for (std::size_t k = 0; k < cap; ++k)
        picked.push_back(all[k * (all.size() - 1) / (cap - 1)]);
    return picked;
}

void check_case_three(SuiteReport &report, const IdentityGrid &grid)
{
    for (auto delta : grid.case_three_deltas) {
        for (std::size_t s = 2; s + 1 <= delta; ++s) {
            for (std::size_t n = smallest_order(delta); n <= 7 * delta + 13; n += 2) {
                const auto inst = describe("n=", n, " s=", s, " delta=", delta);
                const Graph g3 = build_g3(n, delta, s);
                const auto plan = surgery_plan(n, delta, s);
                const Graph g4 = apply_surgery(g3, plan);
                const auto added = plan.added();

                const std::size_t want_removed = SurgeryPlan::expected_removed(delta, s);
                const std::size_t want_added = SurgeryPlan::expected_added(n, delta, s);
                const bool counts = plan.removed.size() == want_removed && added.size() == want_added &&
                                    g4.size() + want_removed == g3.size() + want_added;
                report.add({"surgery_edge_counts", inst, counts, 0.0,
                            describe("removed=", plan.removed.size(), " added=", added.size())});

                const auto q3m = signless_laplacian(g3);
                const auto q4m = signless_laplacian(g4);
                const auto pd3 = perron(q3m);
                const double form = quadratic_form(q4m - q3m, pd3.vector);
                const auto cells = cell_values(pd3, g3_partition(n, delta, s), kSpreadTolerance);
                const double x2 = cells[1];
                const double x3 = cells[2];
                const double closed = static_cast<double>(want_added) * (x2 + x3) * (x2 + x3) -
                                      static_cast<double>(want_removed) * (2 * x2) * (2 * x2);
                report.add({"surgery_quadratic_form_positive", inst, form > 0.0, form, ""});
                report.add({"surgery_quadratic_form_closed_form", inst, std::abs(form - closed) < kEqualityTolerance,
                            kEqualityTolerance - std::abs(form - closed), ""});

                const double q3 = pd3.value;
                const double q4 = q_of(g4);
                const double q_star = q_of(build_gstar(n, delta));
                report.add({"surgery_increases_q", inst, q4 - q3 > kStrictMargin, q4 - q3, ""});
                report.add({"surgery_stays_below_gstar", inst, q4 <= q_star + kEqualityTolerance, q_star - q4, ""});

                const auto embedding = check_gstar_containment(g4, delta);
                report.add({"surgery_result_inside_gstar", inst, embedding.found, embedding.found ? 1.0 : -1.0,
                            embedding.identity ? "identity labelling" : "relabelled embedding"});

                const std::size_t p = delta + 1 - s;
                const auto compositions = spread_pick(odd_compositions(n - s, s, p), grid.compositions_per_point);
                for (const auto &parts : compositions) {
                    const double q1 = q_of(build_g1(s, parts));
                    const bool extremal = std::all_of(parts.begin(), parts.end() - 1,
                                                      [p](std::size_t x) { return x == p; });
                    report.add({"composition_below_case_three", describe(inst, " parts=", join_sizes(parts)),
                                q1 <= q3 + kEqualityTolerance, q3 - q1, extremal ? "equality case" : ""});
                }
            }
        }
    }
}

void check_quotient_polynomials(SuiteReport &report, const IdentityGrid &grid)
{
    for (std::size_t delta = grid.min_delta; delta <= grid.max_delta; ++delta) {
        const std::size_t low = first_even_at_least(7 * delta - 7);
        for (std::size_t n = std::max(low, 2 * delta); n <= 7 * delta - 7 + grid.order_span; n += 2) {
            const auto ln = static_cast<long long>(n);
            const auto ld = static_cast<long long>(delta);
            const bool ok = char_poly(quotient_bstar(ln, ld)) == phi_bstar(ln, ld);
            report.add({"quotient_char_poly", describe("B* n=", n, " delta=", delta), ok, 0.0, ""});
        }
    }
}

} // namespace

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord &r) { return !r.passed; }));
}

std::map<std::string, PropertyTally> SuiteReport::tally() const
{
    std::map<std::string, PropertyTally> out;
    for (const auto &r : checks) {
        auto [it, fresh] = out.try_emplace(r.property);
        auto &t = it->second;
        t.min_margin = fresh ? r.margin : std::min(t.min_margin, r.margin);
        ++t.total;
        if (r.passed)
            ++t.passed;
    }
    return out;
}

std::vector<std::vector<std::size_t>> odd_compositions(std::size_t total, std::size_t parts, std::size_t min_part)
{
    std::vector<std::vector<std::size_t>> out;
    if (parts == 0)
        return out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t smallest) {
        const std::size_t left = parts - current.size();
        if (left == 1) {
            if (remaining >= smallest && remaining % 2 == 1) {
                current.push_back(remaining);
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (std::size_t part = smallest; part * left <= remaining; part += 2) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    std::size_t start = std::max<std::size_t>(min_part, 1);
    if (start % 2 == 0)
        ++start;
    extend(total, start);
    return out;
}

SuiteReport lemma_suite(const LemmaGrid &grid)
{
    SuiteReport report;
    check_redistribution(report, grid);
    check_edge_deletion(report, grid);
    check_quotient_eigenvalues(report, grid);
    check_cells(report, grid);
    return report;
}

SuiteReport identity_suite(const IdentityGrid &grid)
{
    SuiteReport report;
    check_quotient_polynomials(report, grid);
    check_case_one(report, grid);
    check_case_three(report, grid);
    return report;
}

SharpnessRecord sharpness_probe(std::size_t n, std::size_t delta, const Guards &guards)
{
    SharpnessRecord rec;
    rec.n = n;
    rec.delta = delta;
    const Graph g = build_gstar(n, delta);
    rec.q = q_of(g);
    rec.threshold = threshold_q(n, delta);

    const auto criterion = strong_tutte_check(g, guards);
    rec.criterion_holds = criterion.holds;
    if (criterion.blocking) {
        rec.blocking = criterion.blocking->members();
        rec.blocking_odd_components = criterion.blocking_odd_components;
        rec.blocking_is_join_cell = rec.blocking == gstar_partition(n, delta).cell(0);
    }

    const auto search = search_even_factor(g, guards);
    rec.search_nodes = search.nodes;
    rec.certificate = search.factor;
    rec.certificate_verified = search.factor && verify_even_factor(g, *search.factor);

    auto consider = [&](const Graph &h) {
        if (!is_connected(h))
            return;
        const std::size_t d = min_degree(h);
        if (d < 2 || n + 7 < 7 * d)
            return;
        ++rec.perturbations;
        if (q_of(h) >= threshold_q(n, d) - 1e-8) {
            ++rec.perturbations_reaching_threshold;
            rec.reaching_graph6.push_back(write_graph6(h));
        }
    };
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            Graph h = g;
            if (g.adjacent(u, v))
                h.remove_edge(u, v);
            else
                h.add_edge(u, v);
            consider(h);
        }
    return rec;
}

namespace {

void tabulate(AgreementTable &table, const std::string &graph6, const FactorVerdict &v)
{
    ++table.total;
    ++table.counts[v.agreement];
    if (v.agreement == Agreement::criterion_yes_factor_no)
        table.criterion_yes_factor_no.push_back(graph6);
    else if (v.agreement == Agreement::criterion_no_factor_yes)
        table.criterion_no_factor_yes.push_back(graph6);
}

void init_counts(AgreementTable &table)
{
    for (auto a : {Agreement::both_yes, Agreement::both_no, Agreement::criterion_no_factor_yes,
                   Agreement::criterion_yes_factor_no})
        table.counts[a] = 0;
}

} // namespace

AgreementStudy agreement_study(std::size_t n, bool exhaustive, bool connected_only, std::size_t samples,
                               std::uint64_t seed, const Guards &guards, std::size_t jobs)
{
    if (n % 2 != 0)
        throw std::invalid_argument("agreement study needs even n");
    AgreementStudy study;
    study.n = n;
    study.exhaustive = exhaustive;
    study.connected_only = connected_only;
    study.samples = exhaustive ? 0 : samples;
    study.seed = exhaustive ? 0 : seed;
    init_counts(study.all);
    init_counts(study.connected);

    std::vector<Graph> population;
    if (exhaustive) {
        LabeledGraphStream stream(n, connected_only, 0, guards);
        while (auto g = stream.next())
            population.push_back(std::move(*g));
    } else {
        for (std::uint64_t attempt = 0; population.size() < samples; ++attempt) {
            Graph g = random_graph(n, 0.5, derive_seed(seed, attempt));
            if (connected_only && !is_connected(g))
                continue;
            population.push_back(std::move(g));
        }
    }

    std::vector<FactorVerdict> verdicts(population.size());
    parallel_for(population.size(), jobs, [&](std::size_t i) { verdicts[i] = factor_verdict(population[i], guards); });

    for (std::size_t i = 0; i < population.size(); ++i) {
        const auto code = write_graph6(population[i]);
        tabulate(study.all, code, verdicts[i]);
        if (is_connected(population[i]))
            tabulate(study.connected, code, verdicts[i]);
    }
    return study;
}

} // namespace qfactor
