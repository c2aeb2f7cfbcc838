#pragma once

#include "qfactor/guards.hpp"
#include "qfactor/suites.hpp"
#include "qfactor/theorem.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfactor::cli {

enum ExitCode : int {
    exit_ok = 0,
    /// A counterexample, identity mismatch or failed check was found.
    exit_found = 1,
    exit_usage = 2,
    /// A size guard blocked a required computation and undecided results were not allowed.
    exit_guard = 3,
};

/// Everything that determines a run; serialised into every report.
struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::vector<std::string> graphs;
    std::string format = "json";
    std::string report_path;
    std::uint64_t seed = 20240601;
    std::size_t jobs = 1;
    bool strict = false;
    bool allow_undecided = false;
    double epsilon = 1e-8;
    double perron_tolerance = 1e-12;
    Guards guards;
    bool guard_override = false;
    std::string guard_source = "default";

    // extremal
    std::string family;
    std::size_t n = 0;
    std::size_t delta = 0;
    std::size_t s = 0;
    std::vector<std::size_t> parts;

    // grids
    LemmaGrid lemma_grid;
    IdentityGrid identity_grid;
    std::vector<std::size_t> deltas{2, 3};

    // agreement
    bool exhaustive = false;
    bool connected_only = false;
    std::size_t samples = 1000;

    // sweep
    std::vector<std::size_t> orders{8, 10, 12};
    std::vector<double> probabilities{0.5, 0.7, 0.9};
    std::size_t random_samples = 100000;
};

/// Exit code for a classified stream: counterexamples win over undecided
/// instances, which win over parse errors (the latter only with strict).
int stream_exit_code(const StreamReport &report, bool allow_undecided, bool strict);

/// Runs the command line `args` (without the program name). Reports go to
/// --report or `out`; the one-line summary goes to `out` when a report path
/// is given and to `err` otherwise.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace qfactor::cli
