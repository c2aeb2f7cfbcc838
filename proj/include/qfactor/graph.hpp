#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qfactor {

/// Undirected edge, stored with u < v.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    Edge() = default;
    Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Fixed-universe bitset over the vertices 0..universe-1 of one graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);
    VertexSet(std::size_t universe, std::span<const std::size_t> members);

    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    bool contains(std::size_t v) const;
    void insert(std::size_t v);
    void erase(std::size_t v);

    std::size_t size() const;
    bool empty() const;
    std::optional<std::size_t> first() const;
    std::vector<std::size_t> members() const;

    template <class F>
    void for_each(F &&f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet &operator|=(const VertexSet &other);
    VertexSet &operator&=(const VertexSet &other);
    /// Set difference.
    VertexSet &operator-=(const VertexSet &other);
    VertexSet complement() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    void check(std::size_t v) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

VertexSet operator|(VertexSet a, const VertexSet &b);
VertexSet operator&(VertexSet a, const VertexSet &b);
VertexSet operator-(VertexSet a, const VertexSet &b);

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const { return rows_.size(); }
    /// Number of edges e(G).
    std::size_t size() const { return edge_count_; }

    bool adjacent(std::size_t u, std::size_t v) const;
    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    std::size_t degree(std::size_t v) const;
    std::vector<std::size_t> degrees() const;
    const VertexSet &neighbors(std::size_t v) const;
    /// All edges in lexicographic (u, v) order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &a, const Graph &b) { return a.rows_ == b.rows_; }

private:
    void check_pair(std::size_t u, std::size_t v) const;

    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// Connected components of a graph, or of the graph with a vertex set removed.
/// Component members keep the original vertex labels.
struct ComponentReport {
    std::vector<VertexSet> components;
    std::size_t odd_count = 0;
};

Graph complete(std::size_t k);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// b's vertices are relabelled by +a.order(); no edges between the parts.
Graph disjoint_union(const Graph &a, const Graph &b);
Graph join(const Graph &a, const Graph &b);
/// Induced subgraph on V \ s, relabelled in increasing order.
Graph delete_vertices(const Graph &g, const VertexSet &s);

ComponentReport components(const Graph &g);
/// Components of G - s, reported on the original labels.
ComponentReport components_without(const Graph &g, const VertexSet &s);

std::size_t min_degree(const Graph &g);
std::size_t max_degree(const Graph &g);
bool is_connected(const Graph &g);

} // namespace qfactor
