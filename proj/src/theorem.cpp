#include "qfactor/theorem.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/generate.hpp"
#include "qfactor/graph6.hpp"
#include "qfactor/parallel.hpp"
#include "qfactor/polynomial.hpp"
#include "qfactor/recognize.hpp"

#include <cmath>
#include <sstream>

namespace qfactor {

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::not_applicable:
        return "not_applicable";
    case Classification::below_threshold:
        return "below_threshold";
    case Classification::confirmed_factor:
        return "confirmed_factor";
    case Classification::extremal_match:
        return "extremal_match";
    case Classification::counterexample:
        return "counterexample";
    case Classification::undecided:
        return "undecided";
    }
    return "unknown";
}

double ThresholdCache::get(std::size_t n, std::size_t delta)
{
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, delta);
    if (auto it = values_.find(key); it != values_.end())
        return it->second;
    const double value = threshold_q(n, delta, tol_);
    values_.emplace(key, value);
    return value;
}

namespace {

std::optional<std::string> inapplicable_reason(const Graph &g)
{
    const std::size_t n = g.order();
    if (n < 4)
        return "order below 4";
    if (n % 2 != 0)
        return "odd order";
    if (!is_connected(g))
        return "disconnected";
    const std::size_t delta = min_degree(g);
    if (delta < 2)
        return "minimum degree below 2";
    if (n + 7 < 7 * delta)
        return "order below 7*delta-7";
    return std::nullopt;
}

// Decides q(G) >= threshold. Outside the band the float comparison is final;
// inside it both sides are compared as roots of integer polynomials.
bool reaches_threshold(const Graph &g, TheoremOutcome &out, const TheoremOptions &options)
{
    if (out.q < out.threshold - options.epsilon)
        return false;
    if (out.q >= out.threshold + options.epsilon)
        return true;
    out.exact_comparison = true;
    const auto q_poly = char_poly(signless_laplacian(g));
    const auto t_poly = phi_bstar(static_cast<long long>(g.order()), static_cast<long long>(out.delta));
    return compare_largest_roots(q_poly, t_poly) != std::strong_ordering::less;
}

} // namespace

TheoremOutcome check_theorem_instance(const Graph &g, const TheoremOptions &options, ThresholdCache &cache)
{
    TheoremOutcome out;
    if (auto reason = inapplicable_reason(g)) {
        out.classification = Classification::not_applicable;
        out.detail = *reason;
        if (g.order() > 0)
            out.delta = min_degree(g);
        return out;
    }
    const std::size_t n = g.order();
    out.delta = min_degree(g);
    out.threshold = cache.get(n, out.delta);
    out.q = perron(signless_laplacian(g), options.perron).value;

    out.above_threshold = reaches_threshold(g, out, options);
    if (!out.above_threshold) {
        out.classification = Classification::below_threshold;
        return out;
    }
    if (auto match = recognize_gstar(g); match && match->delta == out.delta) {
        out.classification = Classification::extremal_match;
        return out;
    }

    bool exhausted = false;
    try {
        auto search = search_even_factor(g, options.guards);
        out.search_nodes = search.nodes;
        if (search.factor) {
            out.classification = Classification::confirmed_factor;
            out.detail = "certificate";
            out.certificate = std::move(search.factor);
            return out;
        }
        exhausted = true;
    } catch (const GuardExceeded &) {
    }

    try {
        const auto criterion = strong_tutte_check(g, options.guards);
        if (criterion.holds) {
            if (exhausted) {
                out.classification = Classification::undecided;
                out.detail = "certificate search exhausted without a factor, yet the criterion holds";
            } else {
                out.classification = Classification::confirmed_factor;
                out.detail = "criterion";
            }
            return out;
        }
        out.blocking = criterion.blocking;
        out.blocking_odd_components = criterion.blocking_odd_components;
        if (exhausted) {
            out.classification = Classification::counterexample;
            out.detail = "no even factor and a blocking set";
        } else {
            out.classification = Classification::undecided;
            out.detail = "certificate guard exceeded and the criterion fails";
        }
    } catch (const GuardExceeded &) {
        out.classification = Classification::undecided;
        out.detail = exhausted ? "certificate search exhausted without a factor; criterion guard exceeded"
                               : "certificate and criterion guards exceeded";
    }
    return out;
}

TheoremOutcome check_theorem_instance(const Graph &g, const TheoremOptions &options)
{
    ThresholdCache cache;
    return check_theorem_instance(g, options, cache);
}

std::size_t StreamReport::processed() const { return items.size() - parse_errors; }

std::size_t StreamReport::count(Classification c) const
{
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
}

StreamReport verify_items(std::vector<StreamItem> items, const TheoremOptions &options, std::size_t jobs)
{
    ThresholdCache cache;
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        auto &item = items[i];
        if (!item.error.empty())
            return;
        try {
            const Graph g = parse_graph6(item.graph6);
            item.outcome = check_theorem_instance(g, options, cache);
        } catch (const Graph6Error &e) {
            item.error = e.what();
        }
    });

    StreamReport report;
    for (auto c : kAllClassifications)
        report.counts[c] = 0;
    for (const auto &item : items) {
        if (!item.outcome) {
            ++report.parse_errors;
            continue;
        }
        ++report.counts[item.outcome->classification];
        if (item.outcome->above_threshold)
            ++report.above_threshold;
    }
    report.items = std::move(items);
    return report;
}

StreamReport verify_stream(std::istream &in, const TheoremOptions &options, std::size_t jobs)
{
    std::vector<StreamItem> items;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line == ">>graph6<<")
            continue;
        StreamItem item;
        item.line = number;
        item.graph6 = line;
        items.push_back(std::move(item));
    }
    return verify_items(std::move(items), options, jobs);
}

std::vector<StreamItem> sweep_population(const SweepConfig &config)
{
    std::vector<StreamItem> items;
    std::vector<std::pair<std::size_t, double>> cells;
    for (auto n : config.orders)
        for (auto p : config.probabilities)
            cells.emplace_back(n, p);

    // Cells take turns; dense cells rarely yield delta = 2, the only
    // applicable minimum degree at these orders, so they contribute less.
    std::size_t accepted = 0;
    for (std::uint64_t attempt = 0; !cells.empty() && accepted < config.random_samples &&
                                    attempt < config.max_random_attempts;
         ++attempt) {
        const std::uint64_t cell = attempt % cells.size();
        const std::uint64_t local = attempt / cells.size();
        const auto [n, p] = cells[cell];
        const Graph g = random_graph(n, p, derive_seed(config.seed, (cell << 40) | local));
        if (inapplicable_reason(g))
            continue;
        StreamItem item;
        item.line = items.size() + 1;
        item.graph6 = write_graph6(g);
        std::ostringstream source;
        source << "random n=" << n << " p=" << p << " draw=" << local;
        item.source = source.str();
        items.push_back(std::move(item));
        ++accepted;
    }

    for (auto delta : config.perturbed_deltas) {
        std::size_t first = 7 * delta - 7;
        first += first % 2;
        first = std::max(first, 2 * delta);
        for (std::size_t n = first; n <= 7 * delta + 13; n += 2) {
            const Graph base = build_gstar(n, delta);
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v) {
                    if (base.adjacent(u, v))
                        continue;
                    Graph g = base;
                    g.add_edge(u, v);
                    StreamItem item;
                    item.line = items.size() + 1;
                    item.graph6 = write_graph6(g);
                    item.source = "gstar n=" + std::to_string(n) + " delta=" + std::to_string(delta) +
                                  " plus edge " + std::to_string(u) + "-" + std::to_string(v);
                    items.push_back(std::move(item));
                }
        }
    }
    return items;
}

StreamReport theorem_sweep(const SweepConfig &config)
{
    return verify_items(sweep_population(config), config.options, config.jobs);
}

} // namespace qfactor
