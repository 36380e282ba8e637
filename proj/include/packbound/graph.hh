#ifndef PACKBOUND_GRAPH_HH
#define PACKBOUND_GRAPH_HH

#include <packbound/vertex_set.hh>

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace packbound
{
    struct Edge
    {
        int u;
        int v;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * Immutable simple undirected graph on vertices 0..n-1.
     *
     * Adjacency is stored as one VertexSet per vertex. Degrees and the edge
     * count are cached at construction, so every accessor is O(1) apart from
     * edges() and is_connected().
     */
    class Graph
    {
        private:
            std::vector<VertexSet> _adjacency;
            std::vector<int> _degrees;
            int _edge_count = 0;
            int _min_degree = 0;
            int _max_degree = 0;

            auto finish() -> void;

        public:
            Graph() = default;

            /// Edgeless graph of the given order.
            explicit Graph(int order);

            /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
            /// repeated edges.
            Graph(int order, std::span<const Edge> edges);

            /// Throws std::invalid_argument unless the rows form a symmetric loop-free relation.
            static auto from_adjacency(std::vector<VertexSet> rows) -> Graph;

            [[nodiscard]] auto order() const -> int { return static_cast<int>(_adjacency.size()); }
            [[nodiscard]] auto edge_count() const -> int { return _edge_count; }
            [[nodiscard]] auto degree(int v) const -> int { return _degrees[v]; }
            [[nodiscard]] auto degrees() const -> const std::vector<int> & { return _degrees; }

            /// δ(G); zero for the empty graph.
            [[nodiscard]] auto min_degree() const -> int { return _min_degree; }
            /// Δ(G); zero for the empty graph.
            [[nodiscard]] auto max_degree() const -> int { return _max_degree; }

            [[nodiscard]] auto adjacent(int u, int v) const -> bool { return _adjacency[u].contains(v); }
            [[nodiscard]] auto neighbours(int v) const -> const VertexSet & { return _adjacency[v]; }
            [[nodiscard]] auto closed_neighbours(int v) const -> VertexSet
            {
                auto result = _adjacency[v];
                result.insert(v);
                return result;
            }

            [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::full(order()); }
            [[nodiscard]] auto empty_set() const -> VertexSet { return VertexSet(order()); }

            /// Edges with u < v, sorted.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;
            [[nodiscard]] auto is_connected() const -> bool;
            [[nodiscard]] auto is_regular(int degree) const -> bool;

            /// Subgraph induced by the given set, relabelled in increasing id order.
            [[nodiscard]] auto induced(const VertexSet & set) const -> Graph;

            /// Graph with vertex v renamed to permutation[v].
            [[nodiscard]] auto relabel(std::span<const int> permutation) const -> Graph;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._adjacency == b._adjacency;
            }
    };

    [[nodiscard]] auto complete_graph(int n) -> Graph;
    [[nodiscard]] auto cycle_graph(int n) -> Graph;
    [[nodiscard]] auto path_graph(int n) -> Graph;
    /// K_{1,leaves}, centre is vertex 0.
    [[nodiscard]] auto star_graph(int leaves) -> Graph;
}

#endif
