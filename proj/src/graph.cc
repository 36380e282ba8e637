#include <packbound/graph.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using namespace packbound;

namespace
{
    auto check_order(int order) -> void
    {
        if (order < 0 || order > max_vertices)
            throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." + std::to_string(max_vertices));
    }
}

Graph::Graph(int order)
{
    check_order(order);
    _adjacency.assign(order, VertexSet(order));
    finish();
}

Graph::Graph(int order, std::span<const Edge> edges)
{
    check_order(order);
    _adjacency.assign(order, VertexSet(order));
    for (const auto & [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " outside vertex range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (_adjacency[u].contains(v))
            throw std::invalid_argument("repeated edge " + std::to_string(u) + " " + std::to_string(v));
        _adjacency[u].insert(v);
        _adjacency[v].insert(u);
    }
    finish();
}

auto Graph::from_adjacency(std::vector<VertexSet> rows) -> Graph
{
    int order = static_cast<int>(rows.size());
    check_order(order);
    for (int v = 0; v < order; ++v) {
        if (rows[v].universe() != order)
            throw std::invalid_argument("adjacency row universe mismatch");
        if (rows[v].contains(v))
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (auto w : rows[v])
            if (! rows[w].contains(v))
                throw std::invalid_argument("adjacency is not symmetric");
    }
    Graph result;
    result._adjacency = std::move(rows);
    result.finish();
    return result;
}

auto Graph::finish() -> void
{
    _degrees.resize(_adjacency.size());
    int total = 0;
    for (std::size_t v = 0; v < _adjacency.size(); ++v) {
        _degrees[v] = _adjacency[v].size();
        total += _degrees[v];
    }
    _edge_count = total / 2;
    if (_degrees.empty()) {
        _min_degree = _max_degree = 0;
    }
    else {
        auto [lo, hi] = std::minmax_element(_degrees.begin(), _degrees.end());
        _min_degree = *lo;
        _max_degree = *hi;
    }
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (int u = 0; u < order(); ++u)
        for (auto v : _adjacency[u])
            if (u < v)
                result.push_back({u, v});
    return result;
}

auto Graph::is_connected() const -> bool
{
    if (order() <= 1)
        return true;
    auto seen = VertexSet(order());
    seen.insert(0);
    auto frontier = seen;
    while (! frontier.empty()) {
        auto next = VertexSet(order());
        for (auto v : frontier)
            next |= _adjacency[v];
        frontier = next - seen;
        seen |= next;
    }
    return seen.size() == order();
}

auto Graph::is_regular(int degree) const -> bool
{
    return std::all_of(_degrees.begin(), _degrees.end(), [&] (int d) { return d == degree; });
}

auto Graph::induced(const VertexSet & set) const -> Graph
{
    auto kept = set.members();
    std::vector<int> position(order(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        position[kept[i]] = static_cast<int>(i);

    std::vector<Edge> result_edges;
    for (const auto & [u, v] : edges())
        if (position[u] >= 0 && position[v] >= 0)
            result_edges.push_back({position[u], position[v]});
    return Graph(static_cast<int>(kept.size()), result_edges);
}

auto Graph::relabel(std::span<const int> permutation) const -> Graph
{
    if (static_cast<int>(permutation.size()) != order())
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<VertexSet> rows(order(), VertexSet(order()));
    for (int u = 0; u < order(); ++u)
        for (auto v : _adjacency[u])
            rows[permutation[u]].insert(permutation[v]);
    return from_adjacency(std::move(rows));
}

auto packbound::complete_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, edges);
}

auto packbound::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph(n, edges);
}

auto packbound::path_graph(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, edges);
}

auto packbound::star_graph(int leaves) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}
