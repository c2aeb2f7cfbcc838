#include "qfactor/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qfactor {

double round15(double x)
{
    if (!std::isfinite(x))
        return x;
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.15g", x);
    return std::strtod(buffer, nullptr);
}

Json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return round15(x);
}

Json to_json(const VertexSet &s) { return Json(s.members()); }

Json to_json(const std::vector<Edge> &edges)
{
    Json out = Json::array();
    for (const auto &e : edges)
        out.push_back({e.u, e.v});
    return out;
}

Json to_json(const EvenFactor &f) { return to_json(f.edges); }

Json to_json(const TheoremOutcome &o)
{
    Json j;
    j["classification"] = std::string(to_string(o.classification));
    j["q"] = number(o.q);
    j["threshold"] = number(o.threshold);
    j["delta"] = o.delta;
    j["above_threshold"] = o.above_threshold;
    j["exact_comparison"] = o.exact_comparison;
    j["detail"] = o.detail;
    if (o.certificate)
        j["witness"] = {{"type", "even_factor"}, {"edges", to_json(*o.certificate)}};
    else if (o.blocking)
        j["witness"] = {{"type", "blocking_set"},
                        {"vertices", to_json(*o.blocking)},
                        {"odd_components", o.blocking_odd_components}};
    else
        j["witness"] = nullptr;
    j["search_nodes"] = o.search_nodes;
    return j;
}

Json to_json(const StreamItem &item)
{
    Json j;
    j["line"] = item.line;
    if (!item.source.empty())
        j["source"] = item.source;
    j["graph6"] = item.graph6;
    if (item.outcome) {
        const Json outcome = to_json(*item.outcome);
        for (auto &[key, value] : outcome.items())
            j[key] = value;
    } else {
        j["error"] = item.error;
    }
    return j;
}

Json summary_json(const StreamReport &r)
{
    Json counts;
    for (auto c : kAllClassifications)
        counts[std::string(to_string(c))] = r.count(c);
    Json j;
    j["processed"] = r.processed();
    j["parse_errors"] = r.parse_errors;
    j["above_threshold"] = r.above_threshold;
    j["counts"] = counts;
    Json counterexamples = Json::array();
    for (const auto &item : r.items)
        if (item.outcome && item.outcome->classification == Classification::counterexample)
            counterexamples.push_back(item.graph6);
    j["counterexamples"] = counterexamples;
    return j;
}

Json to_json(const CheckRecord &r)
{
    Json j;
    j["property"] = r.property;
    j["instance"] = r.instance;
    j["passed"] = r.passed;
    j["margin"] = number(r.margin);
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

Json to_json(const SuiteReport &r)
{
    Json tally;
    for (const auto &[name, t] : r.tally())
        tally[name] = {{"passed", t.passed}, {"total", t.total}, {"min_margin", number(t.min_margin)}};
    Json checks = Json::array();
    for (const auto &c : r.checks)
        checks.push_back(to_json(c));
    Json j;
    j["checks_run"] = r.checks.size();
    j["failures"] = r.failures();
    j["properties"] = tally;
    j["checks"] = checks;
    return j;
}

Json to_json(const SharpnessRecord &r)
{
    Json j;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["q"] = number(r.q);
    j["threshold"] = number(r.threshold);
    j["q_minus_threshold"] = number(r.q - r.threshold);
    j["criterion_holds"] = r.criterion_holds;
    j["blocking"] = r.blocking;
    j["blocking_odd_components"] = r.blocking_odd_components;
    j["blocking_is_join_cell"] = r.blocking_is_join_cell;
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    j["certificate_verified"] = r.certificate_verified;
    j["search_nodes"] = r.search_nodes;
    j["perturbations"] = r.perturbations;
    j["perturbations_reaching_threshold"] = r.perturbations_reaching_threshold;
    j["reaching_graph6"] = r.reaching_graph6;
    return j;
}

Json to_json(const AgreementTable &t)
{
    Json counts;
    for (const auto &[a, c] : t.counts)
        counts[std::string(to_string(a))] = c;
    Json j;
    j["total"] = t.total;
    j["counts"] = counts;
    j["criterion_yes_factor_no"] = t.criterion_yes_factor_no;
    j["criterion_no_factor_yes"] = t.criterion_no_factor_yes;
    return j;
}

Json to_json(const AgreementStudy &s)
{
    Json j;
    j["n"] = s.n;
    j["exhaustive"] = s.exhaustive;
    j["connected_only"] = s.connected_only;
    j["samples"] = s.samples;
    j["seed"] = s.seed;
    j["all"] = to_json(s.all);
    j["connected"] = to_json(s.connected);
    return j;
}

Json to_json(const Guards &g)
{
    return {{"max_enumeration_order", g.max_enumeration_order},
            {"max_subset_order", g.max_subset_order},
            {"max_certificate_order", g.max_certificate_order},
            {"max_certificate_edges", g.max_certificate_edges}};
}

namespace {

std::string cell_text(const Json &v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_csv(std::ostream &out, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << csv_quote(table.columns[i]);
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_quote(cell_text(row[i]));
        out << '\n';
    }
}

void write_text(std::ostream &out, const Table &table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? " " : "") << table.columns[i];
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const auto text = cell_text(row[i]);
            out << (i ? " " : "") << (text.empty() ? "-" : text);
        }
        out << '\n';
    }
}

} // namespace qfactor
