#pragma once

#include "qfactor/graph.hpp"

#include <cstddef>
#include <optional>

namespace qfactor {

struct GStarParams {
    std::size_t n = 0;
    std::size_t delta = 0;

    friend bool operator==(const GStarParams &, const GStarParams &) = default;
};

/// (n, delta) iff g is isomorphic to K_delta v (K_{n-2delta+1} u (delta-1)K_1)
/// with delta >= 2, n even and n >= 2 delta.
std::optional<GStarParams> recognize_gstar(const Graph &g);

} // namespace qfactor
