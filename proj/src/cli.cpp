#include "qfactor/cli.hpp"

#include "qfactor/extremal.hpp"
#include "qfactor/graph6.hpp"
#include "qfactor/matrix.hpp"
#include "qfactor/perron.hpp"
#include "qfactor/polynomial.hpp"
#include "qfactor/report.hpp"
#include "qfactor/theorem.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace qfactor::cli {

namespace {

struct GuardFlags {
    std::optional<std::size_t> enumeration_order;
    std::optional<std::size_t> subset_order;
    std::optional<std::size_t> certificate_order;
    std::optional<std::size_t> certificate_edges;
    bool override_flag = false;
};

struct Result {
    Json body;
    Table table;
    std::string summary;
    int exit_code = exit_ok;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Certificate limits for commands whose populations are dense graphs of
// moderate order, where the include-first search finishes quickly.
Guards dense_certificate_guards()
{
    Guards g;
    g.max_certificate_order = 64;
    g.max_certificate_edges = 2016;
    return g;
}

void resolve_guards(RunConfig &config, const GuardFlags &flags)
{
    if (config.subcommand == "sweep" || config.subcommand == "sharpness")
        config.guards = dense_certificate_guards();
    if (flags.enumeration_order)
        config.guards.max_enumeration_order = *flags.enumeration_order;
    if (flags.subset_order)
        config.guards.max_subset_order = *flags.subset_order;
    if (flags.certificate_order)
        config.guards.max_certificate_order = *flags.certificate_order;
    if (flags.certificate_edges)
        config.guards.max_certificate_edges = *flags.certificate_edges;
    if (flags.enumeration_order || flags.subset_order || flags.certificate_order || flags.certificate_edges)
        config.guard_source = "flags";
    if (flags.override_flag || Guards::environment_override()) {
        config.guards = Guards::unlimited();
        config.guard_override = true;
        config.guard_source = flags.override_flag ? "flag" : "environment";
    }
}

Json config_json(const RunConfig &c)
{
    Json j;
    j["subcommand"] = c.subcommand;
    j["inputs"] = c.inputs;
    j["graphs"] = c.graphs;
    j["format"] = c.format;
    j["report"] = c.report_path;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["strict"] = c.strict;
    j["allow_undecided"] = c.allow_undecided;
    j["tolerances"] = {{"epsilon", number(c.epsilon)}, {"perron", number(c.perron_tolerance)}};
    j["guards"] = to_json(c.guards);
    j["guard_override"] = c.guard_override;
    j["guard_source"] = c.guard_source;
    if (c.subcommand == "extremal")
        j["extremal"] = {{"family", c.family}, {"n", c.n}, {"delta", c.delta}, {"s", c.s}, {"parts", c.parts}};
    if (c.subcommand == "lemmas") {
        const auto &g = c.lemma_grid;
        j["grid"] = {{"max_order", g.max_order},
                     {"max_separator", g.max_separator},
                     {"edge_deletion_pairs", g.edge_deletion_pairs},
                     {"edge_deletion_orders", {g.edge_deletion_min_order, g.edge_deletion_max_order}},
                     {"edge_deletion_p", number(g.edge_deletion_p)},
                     {"gstar_deltas", g.gstar_deltas},
                     {"exact_divisibility_max_order", g.exact_divisibility_max_order},
                     {"case_three_deltas", g.case_three_deltas}};
    }
    if (c.subcommand == "identities") {
        const auto &g = c.identity_grid;
        j["grid"] = {{"delta_range", {g.min_delta, g.max_delta}},
                     {"order_span", g.order_span},
                     {"case_three_deltas", g.case_three_deltas},
                     {"compositions_per_point", g.compositions_per_point}};
    }
    if (c.subcommand == "sharpness")
        j["grid"] = {{"deltas", c.deltas}, {"n", c.n}};
    if (c.subcommand == "agreement")
        j["agreement"] = {
            {"n", c.n}, {"exhaustive", c.exhaustive}, {"connected_only", c.connected_only}, {"samples", c.samples}};
    if (c.subcommand == "sweep") {
        Json probabilities = Json::array();
        for (double p : c.probabilities)
            probabilities.push_back(number(p));
        j["sweep"] = {{"random_samples", c.random_samples},
                      {"orders", c.orders},
                      {"probabilities", probabilities},
                      {"perturbed_deltas", c.deltas}};
    }
    return j;
}

std::string utc_now()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

// Gathers graph6 items from --graph values and the input files, in order.
std::vector<StreamItem> read_items(const RunConfig &config, std::istream &in)
{
    std::vector<StreamItem> items;
    for (std::size_t i = 0; i < config.graphs.size(); ++i) {
        StreamItem item;
        item.line = i + 1;
        item.graph6 = config.graphs[i];
        item.source = "argument";
        items.push_back(std::move(item));
    }
    auto consume = [&](std::istream &stream, const std::string &name) {
        std::string line;
        std::size_t number = 0;
        while (std::getline(stream, line)) {
            ++number;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            if (line.empty() || line == ">>graph6<<")
                continue;
            StreamItem item;
            item.line = number;
            item.graph6 = line;
            item.source = name;
            items.push_back(std::move(item));
        }
    };
    std::vector<std::string> inputs = config.inputs;
    if (inputs.empty() && config.graphs.empty())
        inputs.push_back("-");
    for (const auto &path : inputs) {
        if (path == "-") {
            consume(in, "stdin");
            continue;
        }
        std::ifstream file(path);
        if (!file)
            throw UsageError("cannot open input " + path);
        consume(file, path);
    }
    return items;
}

// Parses every item up front; with --strict the first failure is a usage error.
std::vector<std::optional<Graph>> parse_items(std::vector<StreamItem> &items, bool strict)
{
    std::vector<std::optional<Graph>> graphs;
    for (auto &item : items) {
        try {
            graphs.emplace_back(parse_graph6(item.graph6));
        } catch (const Graph6Error &e) {
            if (strict)
                throw UsageError(item.source + " line " + std::to_string(item.line) + ": " + e.what());
            item.error = e.what();
            graphs.emplace_back(std::nullopt);
        }
    }
    return graphs;
}

Json item_head(const StreamItem &item)
{
    return {{"line", item.line}, {"source", item.source}, {"graph6", item.graph6}};
}

// ------------------------------------------------------------------ commands

Result cmd_spectrum(const RunConfig &config, std::istream &in)
{
    auto items = read_items(config, in);
    const auto graphs = parse_items(items, config.strict);
    PerronOptions po;
    po.tolerance = config.perron_tolerance;

    Result r;
    r.table.columns = {"line", "graph6", "n", "m", "delta", "q", "rho", "residual", "iterations", "error"};
    Json rows = Json::array();
    std::size_t errors = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Json row = item_head(items[i]);
        if (!graphs[i]) {
            row["error"] = items[i].error;
            ++errors;
        } else {
            const Graph &g = *graphs[i];
            row["n"] = g.order();
            row["m"] = g.size();
            row["delta"] = g.order() ? min_degree(g) : 0;
            if (g.order() == 0) {
                row["q"] = 0.0;
                row["rho"] = 0.0;
                row["residual"] = 0.0;
                row["iterations"] = 0;
            } else {
                const auto q = perron(signless_laplacian(g), po);
                row["q"] = number(q.value);
                row["rho"] = number(perron(adjacency_matrix(g), po).value);
                row["residual"] = number(q.residual);
                row["iterations"] = q.iterations;
            }
        }
        r.table.rows.push_back({row["line"], row["graph6"], row.value("n", Json()), row.value("m", Json()),
                                row.value("delta", Json()), row.value("q", Json()), row.value("rho", Json()),
                                row.value("residual", Json()), row.value("iterations", Json()),
                                row.value("error", Json())});
        rows.push_back(std::move(row));
    }
    r.body["rows"] = rows;
    r.summary = "spectrum: " + std::to_string(items.size()) + " graphs, " + std::to_string(errors) + " errors";
    return r;
}

Result cmd_extremal(const RunConfig &config)
{
    const auto ln = static_cast<long long>(config.n);
    Graph g;
    std::optional<IntPolynomial> poly;
    Json extra;
    const auto &family = config.family;
    if (family == "gstar") {
        g = build_gstar(config.n, config.delta);
        poly = phi_bstar(ln, static_cast<long long>(config.delta));
    } else if (family == "g1") {
        if (config.parts.empty())
            throw ParameterError("g1 needs --parts");
        g = build_g1(config.s, config.parts);
        poly = char_poly(quotient_matrix(signless_laplacian(g), g1_partition(config.s, config.parts)));
    } else if (family == "g2") {
        g = build_g2(config.n, config.s);
        poly = phi_b2(ln, static_cast<long long>(config.s));
    } else if (family == "g3") {
        g = build_g3(config.n, config.delta, config.s);
        poly = char_poly(quotient_matrix(signless_laplacian(g), g3_partition(config.n, config.delta, config.s)));
        extra["big_part"] = case_three_big_part(config.n, config.delta, config.s);
    } else if (family == "g4") {
        const auto plan = surgery_plan(config.n, config.delta, config.s);
        g = apply_surgery(build_g3(config.n, config.delta, config.s), plan);
        extra["big_part"] = plan.labels.m;
        extra["surgery"] = {{"removed", to_json(plan.removed)},
                            {"added_e1", to_json(plan.added_e1)},
                            {"added_e2", to_json(plan.added_e2)},
                            {"removed_count", plan.removed.size()},
                            {"added_count", plan.added_e1.size() + plan.added_e2.size()}};
        const auto embedding = check_gstar_containment(g, config.delta);
        extra["gstar_embedding"] = {
            {"identity", embedding.identity}, {"found", embedding.found}, {"mapping", embedding.mapping}};
    } else {
        throw ParameterError("unknown family " + family + " (expected gstar, g1, g2, g3 or g4)");
    }

    Result r;
    const std::size_t delta = min_degree(g);
    r.body["family"] = family;
    r.body["graph6"] = write_graph6(g);
    r.body["n"] = g.order();
    r.body["m"] = g.size();
    r.body["delta"] = delta;
    r.body["q"] = number(signless_spectral_radius(g));
    const bool has_threshold = delta >= 2 && g.order() % 2 == 0 && g.order() >= 2 * delta;
    r.body["threshold"] = has_threshold ? number(threshold_q(g.order(), delta)) : Json(nullptr);
    if (poly) {
        Json coefficients = Json::array();
        for (const auto &c : poly->coefficients())
            coefficients.push_back(c.convert_to<long long>());
        r.body["char_poly"] = coefficients;
        r.body["char_poly_text"] = poly->to_string();
    }
    for (auto &[key, value] : extra.items())
        r.body[key] = value;

    r.table.columns = {"family", "graph6", "n", "m", "delta", "q", "threshold"};
    r.table.rows.push_back({r.body["family"], r.body["graph6"], r.body["n"], r.body["m"], r.body["delta"],
                            r.body["q"], r.body["threshold"]});
    r.summary = r.body["graph6"].get<std::string>();
    return r;
}

Result cmd_factor(const RunConfig &config, std::istream &in)
{
    auto items = read_items(config, in);
    const auto graphs = parse_items(items, config.strict);

    Result r;
    r.table.columns = {"line", "graph6", "criterion", "blocking", "certificate", "agreement", "error"};
    Json rows = Json::array();
    std::size_t blocked = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Json row = item_head(items[i]);
        if (!graphs[i]) {
            row["error"] = items[i].error;
        } else {
            try {
                const auto v = factor_verdict(*graphs[i], config.guards);
                row["criterion_holds"] = v.criterion_holds;
                row["blocking"] = v.blocking ? to_json(*v.blocking) : Json(nullptr);
                row["blocking_odd_components"] = v.blocking_odd_components;
                row["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
                row["agreement"] = std::string(to_string(v.agreement));
            } catch (const GuardExceeded &e) {
                row["error"] = std::string("guard: ") + e.what();
                ++blocked;
            } catch (const std::invalid_argument &e) {
                row["error"] = e.what();
            }
        }
        r.table.rows.push_back({row["line"], row["graph6"], row.value("criterion_holds", Json()),
                                row.value("blocking", Json()), row.value("certificate", Json()),
                                row.value("agreement", Json()), row.value("error", Json())});
        rows.push_back(std::move(row));
    }
    r.body["rows"] = rows;
    r.body["guard_blocked"] = blocked;
    if (blocked && !config.allow_undecided)
        r.exit_code = exit_guard;
    r.summary = "factor: " + std::to_string(items.size()) + " graphs, " + std::to_string(blocked) + " guard-blocked";
    return r;
}

TheoremOptions theorem_options(const RunConfig &config)
{
    TheoremOptions options;
    options.epsilon = config.epsilon;
    options.guards = config.guards;
    options.perron.tolerance = config.perron_tolerance;
    return options;
}

Result stream_result(const StreamReport &report, const RunConfig &config, bool only_interesting)
{
    Result r;
    r.table.columns = {"line", "source", "graph6", "classification", "q", "threshold", "delta", "detail"};
    Json items = Json::array();
    for (const auto &item : report.items) {
        if (only_interesting && item.outcome &&
            (item.outcome->classification == Classification::not_applicable ||
             item.outcome->classification == Classification::below_threshold))
            continue;
        Json j = to_json(item);
        r.table.rows.push_back({j["line"], j.value("source", Json()), j["graph6"], j.value("classification", Json()),
                                j.value("q", Json()), j.value("threshold", Json()), j.value("delta", Json()),
                                j.contains("error") ? j["error"] : j.value("detail", Json())});
        items.push_back(std::move(j));
    }
    r.body["summary"] = summary_json(report);
    r.body["items"] = items;

    r.exit_code = stream_exit_code(report, config.allow_undecided, config.strict);

    std::ostringstream s;
    s << config.subcommand << ": " << report.processed() << " processed";
    for (auto c : kAllClassifications)
        s << ", " << to_string(c) << "=" << report.count(c);
    s << ", parse_errors=" << report.parse_errors << ", above_threshold=" << report.above_threshold;
    r.summary = s.str();
    return r;
}

Result cmd_verify(const RunConfig &config, std::istream &in)
{
    auto items = read_items(config, in);
    if (config.strict)
        parse_items(items, true);
    return stream_result(verify_items(std::move(items), theorem_options(config), config.jobs), config, false);
}

Result cmd_sweep(const RunConfig &config)
{
    SweepConfig sweep;
    sweep.seed = config.seed;
    sweep.random_samples = config.random_samples;
    sweep.orders = config.orders;
    sweep.probabilities = config.probabilities;
    sweep.perturbed_deltas = config.deltas;
    sweep.jobs = config.jobs;
    sweep.options = theorem_options(config);
    return stream_result(theorem_sweep(sweep), config, true);
}

Result suite_result(const std::string &name, const SuiteReport &suite)
{
    Result r;
    r.body[name] = to_json(suite);
    r.table.columns = {"property", "instance", "passed", "margin", "note"};
    for (const auto &c : suite.checks)
        r.table.rows.push_back({c.property, c.instance, c.passed, number(c.margin), c.note});
    r.exit_code = suite.failures() ? exit_found : exit_ok;
    r.summary = name + ": " + std::to_string(suite.checks.size()) + " checks, " + std::to_string(suite.failures()) +
                " failures";
    return r;
}

Result cmd_sharpness(const RunConfig &config)
{
    Result r;
    r.table.columns = {"n", "delta", "q_minus_threshold", "criterion_holds", "blocking", "blocking_is_join_cell",
                       "certificate_verified", "perturbations_reaching_threshold"};
    Json probes = Json::array();
    for (auto delta : config.deltas) {
        std::size_t n = config.n;
        if (n == 0) {
            n = 7 * delta - 7;
            n += n % 2;
            n = std::max(n, 2 * delta);
        }
        Json j = to_json(sharpness_probe(n, delta, config.guards));
        r.table.rows.push_back({j["n"], j["delta"], j["q_minus_threshold"], j["criterion_holds"], j["blocking"],
                                j["blocking_is_join_cell"], j["certificate_verified"],
                                j["perturbations_reaching_threshold"]});
        probes.push_back(std::move(j));
    }
    r.body["probes"] = probes;
    r.summary = "sharpness: " + std::to_string(probes.size()) + " probes";
    return r;
}

Result cmd_agreement(const RunConfig &config)
{
    if (config.n % 2 != 0)
        throw UsageError("agreement needs an even --n");
    const auto study = agreement_study(config.n, config.exhaustive, config.connected_only, config.samples, config.seed,
                                       config.guards, config.jobs);
    Result r;
    r.body["study"] = to_json(study);
    r.table.columns = {"population", "agreement", "count"};
    for (const auto &[label, table] : {std::pair{"all", &study.all}, std::pair{"connected", &study.connected}})
        for (const auto &[a, count] : table->counts)
            r.table.rows.push_back({label, std::string(to_string(a)), count});
    r.summary = "agreement: n=" + std::to_string(config.n) + " " + std::to_string(study.all.total) +
                " graphs, criterion_yes_factor_no=" + std::to_string(study.all.criterion_yes_factor_no.size()) +
                ", criterion_no_factor_yes=" + std::to_string(study.all.criterion_no_factor_yes.size());
    return r;
}

// --------------------------------------------------------------- plumbing

void add_common(CLI::App *sub, RunConfig &config, GuardFlags &flags)
{
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--report", config.report_path, "Write the report to this path");
    sub->add_option("--seed", config.seed, "Base seed");
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    sub->add_option("--epsilon", config.epsilon, "Threshold comparison band")->check(CLI::PositiveNumber);
    sub->add_option("--perron-tolerance", config.perron_tolerance, "Power iteration tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--strict", config.strict, "Malformed input is a usage error");
    sub->add_flag("--allow-undecided", config.allow_undecided, "Guard-limited results do not fail the run");
    sub->add_option("--max-enumeration-order", flags.enumeration_order, "Largest order for exhaustive enumeration");
    sub->add_option("--max-subset-order", flags.subset_order, "Largest order for the subset scan");
    sub->add_option("--max-cert-order", flags.certificate_order, "Largest order for the certificate search");
    sub->add_option("--max-cert-edges", flags.certificate_edges, "Most edges for the certificate search");
    sub->add_flag("--guard-override", flags.override_flag, "Lift every size guard");
}

void add_inputs(CLI::App *sub, RunConfig &config)
{
    sub->add_option("inputs,--stream", config.inputs, "graph6 files, '-' for standard input");
    sub->add_option("--graph", config.graphs, "graph6 string given inline");
}

int emit(const RunConfig &config, const Result &result, double seconds, std::ostream &out, std::ostream &err)
{
    Json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["schema_version"] = kSchemaVersion;
    doc["config"] = config_json(config);
    doc["timestamp"] = {{"generated_utc", utc_now()}, {"wall_seconds", number(seconds)}};
    doc["exit_code"] = result.exit_code;
    for (auto &[key, value] : result.body.items())
        doc[key] = value;

    auto write = [&](std::ostream &stream) {
        if (config.format == "json")
            stream << doc.dump(2) << '\n';
        else if (config.format == "csv")
            write_csv(stream, result.table);
        else {
            stream << result.summary << '\n';
            write_text(stream, result.table);
        }
    };
    if (config.report_path.empty()) {
        write(out);
        if (config.format != "text")
            err << result.summary << '\n';
    } else {
        std::ofstream file(config.report_path);
        if (!file) {
            err << "error: cannot write report " << config.report_path << '\n';
            return exit_usage;
        }
        write(file);
        out << result.summary << '\n';
    }
    return result.exit_code;
}

} // namespace

int stream_exit_code(const StreamReport &report, bool allow_undecided, bool strict)
{
    if (report.count(Classification::counterexample) > 0)
        return exit_found;
    if (report.count(Classification::undecided) > 0 && !allow_undecided)
        return exit_guard;
    if (report.parse_errors > 0 && strict)
        return exit_usage;
    return exit_ok;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    RunConfig config;
    GuardFlags flags;
    CLI::App app{"Signless Laplacian threshold and even factor verification"};
    app.require_subcommand(1);

    auto *spectrum = app.add_subcommand("spectrum", "q and rho of each graph6 input");
    add_inputs(spectrum, config);

    auto *extremal = app.add_subcommand("extremal", "Build a member of the extremal families");
    extremal->add_option("--family", config.family, "gstar, g1, g2, g3 or g4")->required();
    extremal->add_option("--n", config.n, "Order");
    extremal->add_option("--delta", config.delta, "Minimum degree parameter");
    extremal->add_option("--s", config.s, "Separator size");
    extremal->add_option("--parts", config.parts, "Clique sizes for g1")->delimiter(',');

    auto *factor = app.add_subcommand("factor", "Criterion and certificate search per graph");
    add_inputs(factor, config);

    auto *verify = app.add_subcommand("verify", "Classify each graph against the threshold theorem");
    add_inputs(verify, config);

    auto *lemmas = app.add_subcommand("lemmas", "Run the lemma suite");
    lemmas->add_option("--max-order", config.lemma_grid.max_order, "Largest order for composition checks");
    lemmas->add_option("--max-separator", config.lemma_grid.max_separator, "Largest separator size");
    lemmas->add_option("--pairs", config.lemma_grid.edge_deletion_pairs, "Seeded edge-deletion pairs");
    lemmas->add_option("--gstar-deltas", config.lemma_grid.gstar_deltas, "delta values for the G* grid")->delimiter(',');
    lemmas->add_option("--case-three-deltas", config.lemma_grid.case_three_deltas, "delta values for the G3 grid")->delimiter(',');

    auto *identities = app.add_subcommand("identities", "Run the identity suite");
    identities->add_option("--min-delta", config.identity_grid.min_delta)->check(CLI::Range(2, 64));
    identities->add_option("--max-delta", config.identity_grid.max_delta)->check(CLI::Range(2, 64));
    identities->add_option("--order-span", config.identity_grid.order_span, "Orders above 7delta-7");
    identities->add_option("--case-three-deltas", config.identity_grid.case_three_deltas)->delimiter(',');
    identities->add_option("--compositions-per-point", config.identity_grid.compositions_per_point);

    auto *sharpness = app.add_subcommand("sharpness", "Measure the extremal graph against the criterion");
    sharpness->add_option("--delta", config.deltas, "delta values")->delimiter(',');
    sharpness->add_option("--n", config.n, "Order (default: smallest valid even order)");

    auto *agreement = app.add_subcommand("agreement", "Cross-tabulate criterion and certificate search");
    agreement->add_option("--n", config.n, "Even order")->required();
    agreement->add_flag("--exhaustive", config.exhaustive, "Every labelled graph of order n");
    agreement->add_flag("--connected-only", config.connected_only, "Restrict to connected graphs");
    agreement->add_option("--samples", config.samples, "Random samples when not exhaustive");

    auto *sweep = app.add_subcommand("sweep", "Seeded random and perturbed-extremal theorem sweep");
    sweep->add_option("--samples", config.random_samples, "Applicable random graphs to accept");
    sweep->add_option("--orders", config.orders, "Random graph orders")->delimiter(',');
    sweep->add_option("--probabilities", config.probabilities, "Edge probabilities")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--perturbed-deltas", config.deltas, "delta values for G* plus one edge")->delimiter(',');

    for (auto *sub : {spectrum, extremal, factor, verify, lemmas, identities, sharpness, agreement, sweep})
        add_common(sub, config, flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        const auto *selected = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << "error: " << e.what() << '\n';
        if (dynamic_cast<const CLI::RequiredError *>(&e) && selected == &app)
            err << app.help();
        return exit_usage;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    resolve_guards(config, flags);
    if (config.identity_grid.min_delta > config.identity_grid.max_delta) {
        err << "error: --min-delta exceeds --max-delta\n";
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Result result;
    try {
        const auto &name = config.subcommand;
        if (name == "spectrum")
            result = cmd_spectrum(config, in);
        else if (name == "extremal")
            result = cmd_extremal(config);
        else if (name == "factor")
            result = cmd_factor(config, in);
        else if (name == "verify")
            result = cmd_verify(config, in);
        else if (name == "lemmas")
            result = suite_result("lemmas", lemma_suite(config.lemma_grid));
        else if (name == "identities")
            result = suite_result("identities", identity_suite(config.identity_grid));
        else if (name == "sharpness")
            result = cmd_sharpness(config);
        else if (name == "agreement")
            result = cmd_agreement(config);
        else
            result = cmd_sweep(config);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParameterError &e) {
        err << "error: invalid parameters: " << e.what() << '\n';
        return exit_usage;
    } catch (const GuardExceeded &e) {
        err << "error: guard exceeded: " << e.what() << " (raise the limit or set QFACTOR_GUARD_OVERRIDE=1)\n";
        return exit_guard;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return emit(config, result, seconds, out, err);
}

} // namespace qfactor::cli
