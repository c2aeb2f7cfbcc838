#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfactor {

/// Size limits for the exponential searches. All of them can be lifted at once
/// with QFACTOR_GUARD_OVERRIDE=1.
struct Guards {
    std::size_t max_enumeration_order = 7;
    std::size_t max_subset_order = 22;
    std::size_t max_certificate_order = 12;
    std::size_t max_certificate_edges = 40;

    static Guards unlimited();
    /// Defaults, or unlimited() when QFACTOR_GUARD_OVERRIDE=1 is set.
    static Guards from_environment();
    static bool environment_override();
};

class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string &what) : std::runtime_error(what) {}
};

} // namespace qfactor
