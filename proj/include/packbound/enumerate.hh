#ifndef PACKBOUND_ENUMERATE_HH
#define PACKBOUND_ENUMERATE_HH

#include <packbound/graph.hh>

#include <cstdint>
#include <random>
#include <vector>

namespace packbound
{
    inline constexpr int max_enumeration_order = 7;
    inline constexpr int max_canonical_order = 11;

    /**
     * Canonical relabelling by brute force over the permutations that sort
     * vertices into non-increasing degree order. Among those, the one whose
     * graph6 bit stream is lexicographically smallest wins. Two graphs are
     * isomorphic iff their canonical forms are equal.
     *
     * Throws std::invalid_argument above max_canonical_order.
     */
    [[nodiscard]] auto canonical_form(const Graph & g) -> Graph;

    [[nodiscard]] auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /**
     * One representative per isomorphism class of connected graphs on n
     * vertices, each in canonical form, ordered by edge count and then by
     * graph6 text. Throws std::invalid_argument unless 1 <= n <= 7.
     */
    [[nodiscard]] auto enumerate_connected(int n) -> std::vector<Graph>;

    /// G(n, p).
    [[nodiscard]] auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph;

    /// G(n, p) conditioned on connectivity, by rejection. Throws std::invalid_argument for p <= 0 with n > 1.
    [[nodiscard]] auto random_connected_graph(int n, double p, std::mt19937_64 & rng) -> Graph;
}

#endif
