#pragma once

#include "qfactor/factors.hpp"
#include "qfactor/graph.hpp"
#include "qfactor/guards.hpp"
#include "qfactor/perron.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qfactor {

enum class Classification {
    not_applicable,
    below_threshold,
    confirmed_factor,
    extremal_match,
    counterexample,
    undecided,
};

inline constexpr std::array<Classification, 6> kAllClassifications{
    Classification::not_applicable, Classification::below_threshold, Classification::confirmed_factor,
    Classification::extremal_match, Classification::counterexample,  Classification::undecided,
};

std::string_view to_string(Classification c);

struct TheoremOptions {
    /// Band around the threshold inside which the comparison is redone exactly.
    double epsilon = 1e-8;
    Guards guards;
    PerronOptions perron;
};

struct TheoremOutcome {
    Classification classification = Classification::not_applicable;
    /// NaN when not computed (inapplicable inputs).
    double q = std::numeric_limits<double>::quiet_NaN();
    double threshold = std::numeric_limits<double>::quiet_NaN();
    std::size_t delta = 0;
    bool above_threshold = false;
    /// The threshold comparison fell inside the band and was settled exactly.
    bool exact_comparison = false;
    /// Why an instance is not_applicable or undecided, or which evidence
    /// confirmed a factor ("certificate" or "criterion").
    std::string detail;
    std::optional<EvenFactor> certificate;
    std::optional<VertexSet> blocking;
    std::size_t blocking_odd_components = 0;
    std::size_t search_nodes = 0;
};

/// Memoised threshold_q(n, delta); safe for concurrent use.
class ThresholdCache {
public:
    explicit ThresholdCache(double cross_check_tol = 1e-8) : tol_(cross_check_tol) {}
    double get(std::size_t n, std::size_t delta);

private:
    double tol_;
    std::mutex mutex_;
    std::map<std::pair<std::size_t, std::size_t>, double> values_;
};

TheoremOutcome check_theorem_instance(const Graph &g, const TheoremOptions &options, ThresholdCache &cache);
TheoremOutcome check_theorem_instance(const Graph &g, const TheoremOptions &options = {});

struct StreamItem {
    /// 1-based line number in the input, or generator index for synthetic streams.
    std::size_t line = 0;
    std::string graph6;
    /// Provenance for generated items, empty for file input.
    std::string source;
    std::optional<TheoremOutcome> outcome;
    std::string error;
};

struct StreamReport {
    std::vector<StreamItem> items;
    std::map<Classification, std::size_t> counts;
    std::size_t parse_errors = 0;
    std::size_t above_threshold = 0;

    std::size_t processed() const;
    std::size_t count(Classification c) const;
};

/// Checks every graph6 line of the stream. Blank lines and header-only lines
/// are skipped; unparseable lines are recorded and processing continues.
StreamReport verify_stream(std::istream &in, const TheoremOptions &options, std::size_t jobs = 1);

/// Evaluates already-built items (graph6 filled in) and aggregates.
StreamReport verify_items(std::vector<StreamItem> items, const TheoremOptions &options, std::size_t jobs = 1);

struct SweepConfig {
    std::uint64_t seed = 20240601;
    /// Applicable random instances to accept.
    std::size_t random_samples = 100000;
    /// Stop drawing after this many random graphs even if short of the quota.
    std::uint64_t max_random_attempts = 100000000;
    std::vector<std::size_t> orders{8, 10, 12};
    std::vector<double> probabilities{0.5, 0.7, 0.9};
    std::vector<std::size_t> perturbed_deltas{2, 3};
    std::size_t jobs = 1;
    TheoremOptions options;
};

/// Applicable random G(n, p) instances, drawn in turn from each (n, p) cell
/// and kept only when connected with 2 <= delta and n >= 7delta-7, followed
/// by every single-edge addition to G*(n, delta) for even n in
/// [7delta-7, 7delta+13].
std::vector<StreamItem> sweep_population(const SweepConfig &config);
StreamReport theorem_sweep(const SweepConfig &config);

} // namespace qfactor
