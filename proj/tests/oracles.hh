#ifndef PACKBOUND_TESTS_ORACLES_HH
#define PACKBOUND_TESTS_ORACLES_HH

// Brute-force reference computations, written straight from the definitions
// and sharing nothing with the library's search code beyond Graph::adjacent.

#include <packbound/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle
{
    using packbound::Graph;

    inline auto in_closed(const Graph & g, int v, int w) -> bool
    {
        return v == w || g.adjacent(v, w);
    }

    inline auto members(std::uint64_t mask, int n) -> std::vector<int>
    {
        std::vector<int> result;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                result.push_back(v);
        return result;
    }

    inline auto best_subset(const Graph & g, bool maximise, const std::function<bool (const std::vector<int> &)> & ok) -> int
    {
        int n = g.order();
        int best = maximise ? -1 : n + 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            auto set = members(mask, n);
            int size = static_cast<int>(set.size());
            if ((maximise ? size > best : size < best) && ok(set))
                best = size;
        }
        return best;
    }

    /// Pairwise disjoint closed neighbourhoods.
    inline auto packing(const Graph & g) -> int
    {
        return best_subset(g, true, [&] (const std::vector<int> & b) {
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    for (int x = 0; x < g.order(); ++x)
                        if (in_closed(g, b[i], x) && in_closed(g, b[j], x))
                            return false;
            return true;
        });
    }

    /// Pairwise disjoint open neighbourhoods.
    inline auto open_packing(const Graph & g) -> int
    {
        return best_subset(g, true, [&] (const std::vector<int> & b) {
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    for (int x = 0; x < g.order(); ++x)
                        if (g.adjacent(b[i], x) && g.adjacent(b[j], x))
                            return false;
            return true;
        });
    }

    inline auto limited_packing(const Graph & g, int k) -> int
    {
        return best_subset(g, true, [&] (const std::vector<int> & b) {
            for (int v = 0; v < g.order(); ++v) {
                int hits = 0;
                for (auto x : b)
                    hits += in_closed(g, v, x);
                if (hits > k)
                    return false;
            }
            return true;
        });
    }

    /// Returns n + 1 if no k-tuple dominating set exists.
    inline auto tuple_domination(const Graph & g, int k) -> int
    {
        return best_subset(g, false, [&] (const std::vector<int> & d) {
            for (int v = 0; v < g.order(); ++v) {
                int hits = 0;
                for (auto x : d)
                    hits += in_closed(g, v, x);
                if (hits < k)
                    return false;
            }
            return true;
        });
    }

    inline auto connected(int n, const std::vector<std::vector<bool>> & adj) -> bool
    {
        if (n <= 1)
            return true;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (adj[v][w] && ! seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [] (bool b) { return b; });
    }

    /// Minimum, over all n! relabellings, of the upper-triangle bit string read as an integer.
    inline auto canonical_code(int n, const std::vector<std::vector<bool>> & adj) -> std::uint64_t
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    code = (code << 1) | (adj[p[i]][p[j]] ? 1u : 0u);
            best = std::min(best, code);
        } while (std::next_permutation(p.begin(), p.end()));
        return best;
    }

    inline auto adjacency_of(const Graph & g) -> std::vector<std::vector<bool>>
    {
        std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v)
                adj[u][v] = g.adjacent(u, v);
        return adj;
    }

    /// Isomorphism classes of connected graphs on n vertices, by scanning all 2^C(n,2) labelled graphs.
    inline auto connected_classes(int n) -> std::set<std::uint64_t>
    {
        int pairs = n * (n - 1) / 2;
        std::set<std::uint64_t> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if ((mask >> bit) & 1)
                        adj[i][j] = adj[j][i] = true;
            if (connected(n, adj))
                classes.insert(canonical_code(n, adj));
        }
        return classes;
    }
}

#endif
