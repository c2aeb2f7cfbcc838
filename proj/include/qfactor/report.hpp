#pragma once

// JSON and CSV serialisation of results. Floats are rounded to 15
// significant digits so reports are byte-stable across platforms; NaN and
// infinities become null.

#include "qfactor/factors.hpp"
#include "qfactor/suites.hpp"
#include "qfactor/theorem.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace qfactor {

using Json = nlohmann::ordered_json;

inline constexpr const char *kToolName = "qfactor";
inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Value of x printed with 15 significant digits and read back.
double round15(double x);
/// round15, or null for non-finite input.
Json number(double x);

Json to_json(const VertexSet &s);
Json to_json(const EvenFactor &f);
Json to_json(const std::vector<Edge> &edges);
Json to_json(const TheoremOutcome &o);
Json to_json(const StreamItem &item);
/// Counts by classification plus parse errors and above-threshold total.
Json summary_json(const StreamReport &r);
Json to_json(const CheckRecord &r);
Json to_json(const SuiteReport &r);
Json to_json(const SharpnessRecord &r);
Json to_json(const AgreementTable &t);
Json to_json(const AgreementStudy &s);
Json to_json(const Guards &g);

/// Flat table used for the CSV projection and the text format.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

/// RFC 4180 quoting; null prints as an empty field, strings unquoted unless
/// they need it, numbers as in the JSON report.
void write_csv(std::ostream &out, const Table &table);
/// Whitespace separated, one row per line, with a header line.
void write_text(std::ostream &out, const Table &table);

} // namespace qfactor
