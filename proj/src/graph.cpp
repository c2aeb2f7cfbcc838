#include "qfactor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfactor {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const std::size_t> members) : VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
    VertexSet s(universe);
    for (auto &w : s.words_)
        w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

void VertexSet::check(std::size_t v) const
{
    if (v >= universe_)
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe_) + ")");
}

bool VertexSet::contains(std::size_t v) const
{
    check(v);
    return (words_[v / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(std::size_t v)
{
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v)
{
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

std::size_t VertexSet::size() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::optional<std::size_t> VertexSet::first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
    return std::nullopt;
}

std::vector<std::size_t> VertexSet::members() const
{
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
}

VertexSet &VertexSet::operator|=(const VertexSet &other)
{
    if (other.universe_ != universe_)
        throw std::invalid_argument("vertex sets over different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator&=(const VertexSet &other)
{
    if (other.universe_ != universe_)
        throw std::invalid_argument("vertex sets over different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet &VertexSet::operator-=(const VertexSet &other)
{
    if (other.universe_ != universe_)
        throw std::invalid_argument("vertex sets over different universes");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges)
{
    Graph g(order);
    for (const auto &e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_pair(std::size_t u, std::size_t v) const
{
    if (u >= order() || v >= order())
        throw std::out_of_range("edge endpoint outside vertex range");
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    if (u >= order() || v >= order())
        throw std::out_of_range("vertex outside range");
    return u != v && rows_[u].contains(v);
}

void Graph::add_edge(std::size_t u, std::size_t v)
{
    check_pair(u, v);
    if (rows_[u].contains(v))
        return;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
}

void Graph::remove_edge(std::size_t u, std::size_t v)
{
    check_pair(u, v);
    if (!rows_[u].contains(v))
        return;
    rows_[u].erase(v);
    rows_[v].erase(u);
    --edge_count_;
}

std::size_t Graph::degree(std::size_t v) const
{
    if (v >= order())
        throw std::out_of_range("vertex outside range");
    return rows_[v].size();
}

std::vector<std::size_t> Graph::degrees() const
{
    std::vector<std::size_t> d(order());
    for (std::size_t v = 0; v < order(); ++v)
        d[v] = rows_[v].size();
    return d;
}

const VertexSet &Graph::neighbors(std::size_t v) const
{
    if (v >= order())
        throw std::out_of_range("vertex outside range");
    return rows_[v];
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < order(); ++u)
        rows_[u].for_each([&](std::size_t v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

Graph complete(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("complete graph needs at least one vertex");
    Graph g(k);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = u + 1; v < k; ++v)
            g.add_edge(u, v);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(std::size_t n)
{
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
    const std::size_t offset = a.order();
    Graph g(a.order() + b.order());
    for (const auto &e : a.edges())
        g.add_edge(e.u, e.v);
    for (const auto &e : b.edges())
        g.add_edge(e.u + offset, e.v + offset);
    return g;
}

Graph join(const Graph &a, const Graph &b)
{
    Graph g = disjoint_union(a, b);
    for (std::size_t u = 0; u < a.order(); ++u)
        for (std::size_t v = 0; v < b.order(); ++v)
            g.add_edge(u, a.order() + v);
    return g;
}

Graph delete_vertices(const Graph &g, const VertexSet &s)
{
    if (s.universe() != g.order())
        throw std::out_of_range("vertex set does not belong to this graph");
    std::vector<std::size_t> relabel(g.order(), g.order());
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!s.contains(v))
            relabel[v] = next++;
    Graph h(next);
    for (const auto &e : g.edges())
        if (relabel[e.u] < next && relabel[e.v] < next)
            h.add_edge(relabel[e.u], relabel[e.v]);
    return h;
}

ComponentReport components_without(const Graph &g, const VertexSet &s)
{
    if (s.universe() != g.order())
        throw std::out_of_range("vertex set does not belong to this graph");
    ComponentReport report;
    VertexSet unseen = s.complement();
    while (auto start = unseen.first()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(*start);
        unseen.erase(*start);
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(g.order());
            frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
            next &= unseen;
            unseen -= next;
            frontier = std::move(next);
        }
        if (comp.size() % 2 == 1)
            ++report.odd_count;
        report.components.push_back(std::move(comp));
    }
    return report;
}

ComponentReport components(const Graph &g) { return components_without(g, VertexSet(g.order())); }

std::size_t min_degree(const Graph &g)
{
    if (g.order() == 0)
        throw std::invalid_argument("minimum degree of the null graph");
    auto d = g.degrees();
    return *std::min_element(d.begin(), d.end());
}

std::size_t max_degree(const Graph &g)
{
    if (g.order() == 0)
        return 0;
    auto d = g.degrees();
    return *std::max_element(d.begin(), d.end());
}

bool is_connected(const Graph &g) { return g.order() > 0 && components(g).components.size() == 1; }

} // namespace qfactor
