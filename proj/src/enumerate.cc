#include <packbound/enumerate.hh>
#include <packbound/graph6.hh>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

using namespace packbound;

namespace
{
    // Bit k of the graph6 stream carries weight 2^(total-1-k), so a smaller
    // integer means a lexicographically smaller stream.
    struct CanonicalSearch
    {
        const Graph & g;
        int n;
        int total_bits;
        std::vector<int> target_degree;
        std::vector<int> placed;           // placed[p] = original vertex at position p
        std::vector<bool> used;
        std::uint64_t best = ~std::uint64_t{0};
        std::vector<int> best_placement;

        explicit CanonicalSearch(const Graph & graph) :
            g(graph),
            n(graph.order()),
            total_bits(n * (n - 1) / 2),
            target_degree(graph.degrees()),
            used(n, false)
        {
            std::sort(target_degree.begin(), target_degree.end(), std::greater<>{});
        }

        auto prefix_of_best(int bits_known) const -> std::uint64_t
        {
            return best >> (total_bits - bits_known);
        }

        auto search(int position, std::uint64_t prefix) -> void
        {
            if (position == n) {
                if (prefix < best) {
                    best = prefix;
                    best_placement = placed;
                }
                return;
            }

            for (int v = 0; v < n; ++v) {
                if (used[v] || g.degree(v) != target_degree[position])
                    continue;

                // Column `position` holds bits x(i, position) for i < position.
                std::uint64_t extended = prefix;
                for (int i = 0; i < position; ++i)
                    extended = (extended << 1) | (g.adjacent(placed[i], v) ? 1u : 0u);

                int known = position * (position + 1) / 2;
                if (best != ~std::uint64_t{0} && known > 0 && extended > prefix_of_best(known))
                    continue;

                used[v] = true;
                placed.push_back(v);
                search(position + 1, extended);
                placed.pop_back();
                used[v] = false;
            }
        }
    };

    auto canonical_code(const Graph & g) -> std::pair<std::uint64_t, std::vector<int>>
    {
        CanonicalSearch search(g);
        search.search(0, 0);
        if (g.order() <= 1)
            return {0, std::vector<int>(g.order(), 0)};
        return {search.best, search.best_placement};
    }
}

auto packbound::canonical_form(const Graph & g) -> Graph
{
    if (g.order() > max_canonical_order)
        throw std::invalid_argument("canonical form limited to " + std::to_string(max_canonical_order) + " vertices");

    auto [code, placement] = canonical_code(g);
    std::vector<int> permutation(g.order());
    for (int p = 0; p < g.order(); ++p)
        permutation[placement[p]] = p;
    return g.relabel(permutation);
}

auto packbound::are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return canonical_form(a) == canonical_form(b);
}

auto packbound::enumerate_connected(int n) -> std::vector<Graph>
{
    if (n < 1 || n > max_enumeration_order)
        throw std::invalid_argument("enumerate_connected supports 1 <= n <= " + std::to_string(max_enumeration_order));

    // Every connected graph on n >= 2 vertices has a non-cut vertex, so it
    // arises from a connected graph on n-1 vertices by adding one vertex
    // joined to a nonempty subset.
    std::vector<Graph> level{Graph(1)};
    for (int order = 2; order <= n; ++order) {
        std::map<std::string, Graph> seen;
        for (const auto & base : level) {
            auto base_edges = base.edges();
            for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (order - 1)); ++subset) {
                auto edges = base_edges;
                for (int v = 0; v < order - 1; ++v)
                    if ((subset >> v) & 1)
                        edges.push_back({v, order - 1});
                auto canonical = canonical_form(Graph(order, edges));
                seen.try_emplace(to_graph6(canonical), canonical);
            }
        }

        level.clear();
        for (auto & [text, graph] : seen)
            level.push_back(std::move(graph));
        std::stable_sort(level.begin(), level.end(), [] (const Graph & a, const Graph & b) {
            return a.edge_count() < b.edge_count();
        });
    }
    return level;
}

auto packbound::random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, edges);
}

auto packbound::random_connected_graph(int n, double p, std::mt19937_64 & rng) -> Graph
{
    if (n > 1 && p <= 0.0)
        throw std::invalid_argument("random_connected_graph needs p > 0");
    while (true) {
        auto g = random_graph(n, p, rng);
        if (g.is_connected())
            return g;
    }
}
