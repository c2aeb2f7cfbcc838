#pragma once

// Numerical evidence suites: each check is recorded with its instance, a
// signed margin (positive means the property holds with room to spare) and
// a pass flag. Failures are report content, not exceptions.

#include "qfactor/factors.hpp"
#include "qfactor/graph.hpp"
#include "qfactor/guards.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qfactor {

struct CheckRecord {
    std::string property;
    std::string instance;
    bool passed = false;
    double margin = 0.0;
    std::string note;
};

struct PropertyTally {
    std::size_t passed = 0;
    std::size_t total = 0;
    double min_margin = 0.0;
};

struct SuiteReport {
    std::vector<CheckRecord> checks;

    void add(CheckRecord record) { checks.push_back(std::move(record)); }
    std::size_t failures() const;
    /// Keyed by property name, in name order.
    std::map<std::string, PropertyTally> tally() const;
};

/// Sorted odd compositions (n_1 <= ... <= n_parts) of total with every part
/// at least min_part.
std::vector<std::vector<std::size_t>> odd_compositions(std::size_t total, std::size_t parts, std::size_t min_part = 1);

struct LemmaGrid {
    /// Redistribution and cell checks: all odd compositions with n <= max_order.
    std::size_t max_order = 20;
    std::size_t max_separator = 4;
    std::size_t edge_deletion_pairs = 100;
    std::size_t edge_deletion_min_order = 6;
    std::size_t edge_deletion_max_order = 14;
    double edge_deletion_p = 0.5;
    std::vector<std::size_t> gstar_deltas{2, 3, 4};
    /// Exact divisibility of the characteristic polynomials up to this order.
    std::size_t exact_divisibility_max_order = 24;
    std::vector<std::size_t> case_three_deltas{3, 4, 5};
    std::uint64_t seed = 20240601;
};

/// Clique redistribution, edge-deletion monotonicity, quotient eigenvalues,
/// constant Perron entries on cells and the ordering of cell values.
SuiteReport lemma_suite(const LemmaGrid &grid);

struct IdentityGrid {
    std::size_t min_delta = 2;
    std::size_t max_delta = 6;
    /// Extra even orders above 7delta-7.
    std::size_t order_span = 20;
    std::vector<std::size_t> case_three_deltas{3, 4, 5};
    /// Cap on odd compositions compared per case-three grid point.
    std::size_t compositions_per_point = 40;
};

/// Polynomial identities and inequalities of the threshold argument plus the
/// surgery chain of the third case.
SuiteReport identity_suite(const IdentityGrid &grid);

struct SharpnessRecord {
    std::size_t n = 0;
    std::size_t delta = 0;
    double q = 0.0;
    double threshold = 0.0;
    bool criterion_holds = true;
    std::vector<std::size_t> blocking;
    std::size_t blocking_odd_components = 0;
    bool blocking_is_join_cell = false;
    std::optional<EvenFactor> certificate;
    bool certificate_verified = false;
    std::size_t search_nodes = 0;
    /// Single-edge additions and deletions of G* that keep the minimum degree.
    std::size_t perturbations = 0;
    /// Of those, how many still reach the threshold (none of them is G*).
    std::size_t perturbations_reaching_threshold = 0;
    std::vector<std::string> reaching_graph6;
};

SharpnessRecord sharpness_probe(std::size_t n, std::size_t delta, const Guards &guards);

struct AgreementTable {
    std::map<Agreement, std::size_t> counts;
    std::vector<std::string> criterion_yes_factor_no;
    std::vector<std::string> criterion_no_factor_yes;
    std::size_t total = 0;
};

struct AgreementStudy {
    std::size_t n = 0;
    bool exhaustive = true;
    bool connected_only = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    AgreementTable all;
    /// The same tabulation restricted to connected graphs.
    AgreementTable connected;
};

/// Cross-tabulates the criterion against the certificate search, either
/// over every labelled graph of order n or over `samples` seeded G(n, 1/2).
AgreementStudy agreement_study(std::size_t n, bool exhaustive, bool connected_only, std::size_t samples,
                               std::uint64_t seed, const Guards &guards, std::size_t jobs = 1);

} // namespace qfactor
