#pragma once

#include "qfactor/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfactor {

class Graph6Error : public std::runtime_error {
public:
    explicit Graph6Error(const std::string &what) : std::runtime_error(what) {}
};

/// Largest order the short graph6 form can carry.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Parses one graph6 record (short form only). A leading ">>graph6<<" header
/// and trailing CR/LF are stripped; anything else malformed throws Graph6Error.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph &g);

} // namespace qfactor
