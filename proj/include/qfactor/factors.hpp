#pragma once

#include "qfactor/graph.hpp"
#include "qfactor/guards.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace qfactor {

/// Spanning edge set in which every vertex has positive even degree.
struct EvenFactor {
    std::vector<Edge> edges;
};

/// Outcome of the odd-component criterion: o(G - S) < |S| for all |S| >= 2.
struct CriterionResult {
    bool holds = true;
    /// First violating S: smallest size, then lexicographic.
    std::optional<VertexSet> blocking;
    std::size_t blocking_odd_components = 0;
    std::size_t subsets_examined = 0;
};

/// Throws std::invalid_argument on odd order and GuardExceeded when the order
/// is above guards.max_subset_order (hard limit 64).
CriterionResult strong_tutte_check(const Graph &g, const Guards &guards = {});

struct CertificateSearch {
    std::optional<EvenFactor> factor;
    /// Backtracking nodes visited (0 when the tree repair succeeded); the
    /// transcript of an exhausted search.
    std::size_t nodes = 0;
};

/// Tries a spanning-tree parity repair from each root first, then falls back
/// to exhaustive include/exclude backtracking with edges grouped by vertex,
/// lowest degree first. Throws GuardExceeded beyond
/// guards.max_certificate_order vertices or max_certificate_edges edges.
CertificateSearch search_even_factor(const Graph &g, const Guards &guards = {});
std::optional<EvenFactor> find_even_factor(const Graph &g, const Guards &guards = {});

/// True iff every vertex of g has positive even degree in f. Throws
/// std::invalid_argument if f uses an edge absent from g.
bool verify_even_factor(const Graph &g, const EvenFactor &f);

enum class Agreement { both_yes, both_no, criterion_no_factor_yes, criterion_yes_factor_no };

std::string_view to_string(Agreement a);
Agreement classify_agreement(bool criterion_holds, bool factor_found);

struct FactorVerdict {
    bool criterion_holds = false;
    std::optional<VertexSet> blocking;
    std::size_t blocking_odd_components = 0;
    std::optional<EvenFactor> certificate;
    Agreement agreement = Agreement::both_no;
};

FactorVerdict factor_verdict(const Graph &g, const Guards &guards = {});

} // namespace qfactor
