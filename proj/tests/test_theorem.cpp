#include "oracles.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/generate.hpp"
#include "qfactor/graph6.hpp"
#include "qfactor/theorem.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace qfactor;

namespace {

// G*(22, 4) with two of its three low vertices joined; the third keeps the
// minimum degree at 4.
Graph gstar_plus_low_edge()
{
    Graph g = build_gstar(22, 4);
    g.add_edge(19, 20);
    return g;
}

bool same_outcome(const TheoremOutcome &a, const TheoremOutcome &b)
{
    return a.classification == b.classification && (a.q == b.q || (std::isnan(a.q) && std::isnan(b.q))) && a.detail == b.detail &&
           a.search_nodes == b.search_nodes && a.blocking == b.blocking &&
           (a.certificate.has_value() == b.certificate.has_value()) &&
           (!a.certificate || a.certificate->edges == b.certificate->edges);
}

} // namespace

TEST_CASE("classification of the reference instances")
{
    const auto c8 = check_theorem_instance(cycle_graph(8));
    CHECK(c8.classification == Classification::below_threshold);
    CHECK(c8.q == doctest::Approx(4.0));
    CHECK(c8.delta == 2);

    const auto gs = check_theorem_instance(build_gstar(8, 2));
    CHECK(gs.classification == Classification::extremal_match);
    CHECK(gs.above_threshold);
    // q(G*) sits on the threshold, so the comparison is settled exactly.
    CHECK(gs.exact_comparison);

    const auto k8 = check_theorem_instance(complete(8));
    CHECK(k8.classification == Classification::not_applicable);
    CHECK(k8.detail == "order below 7*delta-7");

    CHECK(check_theorem_instance(complete(7)).detail == "odd order");
    CHECK(check_theorem_instance(disjoint_union(complete(4), complete(4))).detail == "disconnected");
    CHECK(check_theorem_instance(path_graph(6)).detail == "minimum degree below 2");
    CHECK(check_theorem_instance(complete(2)).detail == "order below 4");
}

TEST_CASE("graphs above the threshold get a factor")
{
    TheoremOptions options;
    options.guards.max_certificate_order = 64;
    options.guards.max_certificate_edges = 2016;
    const Graph g = gstar_plus_low_edge();
    const auto out = check_theorem_instance(g, options);
    CHECK(out.classification == Classification::confirmed_factor);
    CHECK(out.detail == "certificate");
    REQUIRE(out.certificate.has_value());
    CHECK(verify_even_factor(g, *out.certificate));
    CHECK(out.q > out.threshold);

    // With the default certificate guard the criterion decides.
    const auto fallback = check_theorem_instance(g);
    CHECK(fallback.classification == Classification::confirmed_factor);
    CHECK(fallback.detail == "criterion");
}

TEST_CASE("guards that block every route leave the instance undecided")
{
    TheoremOptions options;
    options.guards.max_certificate_order = 4;
    options.guards.max_subset_order = 4;
    const auto out = check_theorem_instance(gstar_plus_low_edge(), options);
    CHECK(out.classification == Classification::undecided);
    CHECK(out.detail == "certificate and criterion guards exceeded");
}

TEST_CASE("streams record parse errors and keep going")
{
    std::stringstream in;
    in << ">>graph6<<\n"
       << write_graph6(cycle_graph(8)) << "\n"
       << "\n"
       << "not graph6\n"
       << write_graph6(complete(8)) << "\r\n"
       << write_graph6(build_gstar(8, 2)) << "\n";
    const auto r = verify_stream(in, {});
    REQUIRE(r.items.size() == 4);
    CHECK(r.parse_errors == 1);
    CHECK(r.processed() == 3);
    CHECK(r.items[0].line == 2);
    CHECK(r.items[1].line == 4);
    CHECK_FALSE(r.items[1].error.empty());
    CHECK(r.count(Classification::below_threshold) == 1);
    CHECK(r.count(Classification::not_applicable) == 1);
    CHECK(r.count(Classification::extremal_match) == 1);
    CHECK(r.count(Classification::counterexample) == 0);
    CHECK(r.above_threshold == 1);

    std::stringstream empty;
    const auto e = verify_stream(empty, {});
    CHECK(e.items.empty());
    CHECK(e.processed() == 0);
    CHECK(e.counts.size() == kAllClassifications.size());
}

TEST_CASE("parallel evaluation preserves order and results")
{
    std::vector<StreamItem> items;
    for (std::uint64_t i = 0; i < 300; ++i) {
        StreamItem item;
        item.line = i + 1;
        item.graph6 = write_graph6(random_graph(8 + 2 * (i % 3), 0.8, derive_seed(5, i)));
        items.push_back(item);
    }
    const auto serial = verify_items(items, {}, 1);
    const auto threaded = verify_items(items, {}, 3);
    REQUIRE(serial.items.size() == threaded.items.size());
    for (std::size_t i = 0; i < serial.items.size(); ++i) {
        CHECK(serial.items[i].graph6 == threaded.items[i].graph6);
        CHECK(same_outcome(*serial.items[i].outcome, *threaded.items[i].outcome));
    }
    CHECK(serial.counts == threaded.counts);
}

TEST_CASE("no counterexamples among dense random graphs")
{
    std::vector<StreamItem> items;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        StreamItem item;
        item.line = i + 1;
        item.graph6 = write_graph6(random_graph(10, 0.7, derive_seed(2024, i)));
        items.push_back(item);
    }
    const auto r = verify_items(std::move(items), {}, 4);
    CHECK(r.count(Classification::counterexample) == 0);
    CHECK(r.count(Classification::undecided) == 0);
    CHECK(r.processed() == 10000);
}

TEST_CASE("sweep population is deterministic")
{
    SweepConfig config;
    config.random_samples = 50;
    config.orders = {8, 10};
    config.probabilities = {0.5, 0.7};
    config.perturbed_deltas = {2};
    const auto a = sweep_population(config);
    const auto b = sweep_population(config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].graph6 == b[i].graph6);
    std::size_t random = 0;
    for (const auto &item : a)
        if (item.source.rfind("random", 0) == 0) {
            ++random;
            const Graph g = parse_graph6(item.graph6);
            CHECK(oracle::connected(g));
            CHECK(min_degree(g) >= 2);
            CHECK(g.order() + 7 >= 7 * min_degree(g));
        }
    CHECK(random == 50);
}

TEST_CASE("threshold cache")
{
    ThresholdCache cache;
    CHECK(cache.get(8, 2) == threshold_q(8, 2));
    CHECK(cache.get(8, 2) == cache.get(8, 2));
}
