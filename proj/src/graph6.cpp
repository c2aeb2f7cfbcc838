#include "qfactor/graph6.hpp"

namespace qfactor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t body_length(std::size_t n) { return (n * (n - (n > 0 ? 1 : 0)) / 2 + 5) / 6; }

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(kHeader))
        text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 record");

    for (char c : text) {
        const auto byte = static_cast<unsigned char>(c);
        if (byte < 63 || byte > 126)
            throw Graph6Error("character outside 63..126 in graph6 record");
    }

    const auto head = static_cast<unsigned char>(text.front());
    if (head == 126)
        throw Graph6Error("long-form graph6 (order > 62) is not supported");
    const std::size_t n = head - 63u;
    const std::size_t expected = 1 + body_length(n);
    if (text.size() != expected)
        throw Graph6Error("graph6 length " + std::to_string(text.size()) + " does not match order " +
                          std::to_string(n) + " (expected " + std::to_string(expected) + ")");

    Graph g(n);
    std::size_t bit = 0;
    auto read_bit = [&](std::size_t k) {
        const auto byte = static_cast<unsigned>(static_cast<unsigned char>(text[1 + k / 6]) - 63u);
        return (byte >> (5 - k % 6)) & 1U;
    };
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if (read_bit(bit))
                g.add_edge(i, j);
    for (std::size_t k = bit; k < 6 * (expected - 1); ++k)
        if (read_bit(k))
            throw Graph6Error("nonzero padding bits in graph6 record");
    return g;
}

std::string write_graph6(const Graph &g)
{
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw Graph6Error("order " + std::to_string(n) + " exceeds the graph6 short form");
    std::string out(1 + body_length(n), static_cast<char>(63));
    out[0] = static_cast<char>(n + 63);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if (g.adjacent(i, j))
                out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    return out;
}

} // namespace qfactor
