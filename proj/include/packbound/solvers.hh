#ifndef PACKBOUND_SOLVERS_HH
#define PACKBOUND_SOLVERS_HH

#include <packbound/graph.hh>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace packbound
{
    enum class SolveMethod
    {
        branch_and_bound,
        exhaustive
    };

    [[nodiscard]] auto to_string(SolveMethod) -> std::string;

    struct SolveOptions
    {
        bool force_exhaustive = false;
        /// Cap on search nodes (or subsets tested, in exhaustive mode). Must be positive when set.
        std::optional<std::uint64_t> node_limit;
    };

    struct SolveResult
    {
        int value = 0;
        VertexSet witness;
        std::uint64_t nodes_explored = 0;
        SolveMethod method = SolveMethod::branch_and_bound;
    };

    /// The node limit in SolveOptions ran out before the search finished.
    class NodeLimitExceeded : public std::runtime_error
    {
        private:
            std::uint64_t _nodes;

        public:
            explicit NodeLimitExceeded(std::uint64_t nodes);
            [[nodiscard]] auto nodes() const -> std::uint64_t { return _nodes; }
    };

    /// The invariant is not defined for this graph and parameter.
    class UndefinedInvariant : public std::domain_error
    {
        public:
            using std::domain_error::domain_error;
    };

    /// Exhaustive mode walks all subsets, so it refuses graphs above this order.
    inline constexpr int max_exhaustive_order = 20;

    /// L_k(G): largest B with |N[v] ∩ B| <= k for every v. Throws std::invalid_argument for k < 1.
    [[nodiscard]] auto limited_packing_number(const Graph & g, int k, const SolveOptions & = {}) -> SolveResult;

    /// ρ(G): largest set with pairwise disjoint closed neighbourhoods.
    [[nodiscard]] auto packing_number(const Graph & g, const SolveOptions & = {}) -> SolveResult;

    /// ρₒ(G): largest set with pairwise disjoint open neighbourhoods.
    [[nodiscard]] auto open_packing_number(const Graph & g, const SolveOptions & = {}) -> SolveResult;

    /// γ_×k(G): smallest D with |N[v] ∩ D| >= k for every v. Throws
    /// UndefinedInvariant when δ(G) < k - 1, std::invalid_argument for k < 1.
    [[nodiscard]] auto tuple_domination_number(const Graph & g, int k, const SolveOptions & = {}) -> SolveResult;

    [[nodiscard]] auto is_limited_packing(const Graph & g, const VertexSet & set, int k) -> bool;
    [[nodiscard]] auto is_open_packing(const Graph & g, const VertexSet & set) -> bool;
    [[nodiscard]] auto is_tuple_dominating(const Graph & g, const VertexSet & set, int k) -> bool;
}

#endif
