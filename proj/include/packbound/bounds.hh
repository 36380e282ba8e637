#ifndef PACKBOUND_BOUNDS_HH
#define PACKBOUND_BOUNDS_HH

#include <packbound/exact_real.hh>
#include <packbound/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace packbound
{
    enum class BoundId
    {
        l2_pendant,                  ///< L₂ ≤ 2(n − ℓ + s·δ*)/(1 + δ*)
        lk_order_size,               ///< L_k ≤ n + k/2 − √(k²/4 + (1−k)n + 2m)
        open_packing_order_size,     ///< ρₒ ≤ n − √(2m − n)
        open_packing_min_degree,     ///< ρₒ ≤ n/δ
        packing_min_degree,          ///< ρ ≤ n/(δ+1)
        double_domination_sum,       ///< γ_×2 + ρ ≤ n − δ + 2
        double_domination_sum_prior, ///< γ_×2 + ρ ≤ n
        double_domination_prior      ///< γ_×2 ≤ n − δ + 1
    };

    [[nodiscard]] auto to_string(BoundId) -> std::string;

    struct BoundEvaluation
    {
        BoundId id;
        std::optional<int> k;
        ExactReal value;
        bool applicable = false;
        /// Why the bound does not apply; empty when it does.
        std::string reason;

        /// Set by assess() once the invariant being bounded is known.
        std::optional<long> invariant;
        std::optional<bool> holds;
        std::optional<bool> tight;
    };

    /// Attach the invariant value. holds and tight stay unset when the bound is inapplicable.
    [[nodiscard]] auto assess(BoundEvaluation evaluation, long invariant) -> BoundEvaluation;

    [[nodiscard]] auto l2_pendant_bound(const Graph & g) -> BoundEvaluation;

    /// Applicable iff k ≤ 2(n − √(n² − n − 2m)) or δ ≥ k − 1, decided in integers.
    [[nodiscard]] auto lk_order_size_bound(const Graph & g, int k) -> BoundEvaluation;

    [[nodiscard]] auto open_packing_order_size_bound(const Graph & g) -> BoundEvaluation;
    [[nodiscard]] auto open_packing_min_degree_bound(const Graph & g) -> BoundEvaluation;
    [[nodiscard]] auto packing_min_degree_bound(const Graph & g) -> BoundEvaluation;

    struct DoubleDominationValues
    {
        long gamma_x2;
        long rho;
    };

    struct DoubleDominationReport
    {
        /// In order: the n − δ + 2 sum bound, the older n sum bound, the older n − δ + 1 bound.
        std::vector<BoundEvaluation> evaluations;
        /// With values supplied and δ ≥ 2: the sum bound implies both older ones on this graph,
        /// i.e. n − δ + 2 ≤ n and n − δ + 2 − ρ ≤ n − δ + 1.
        std::optional<bool> dominates_prior;
    };

    [[nodiscard]] auto double_domination_bounds(const Graph & g,
            std::optional<DoubleDominationValues> values = std::nullopt) -> DoubleDominationReport;

    /// L_k(G) = n exactly when this holds.
    [[nodiscard]] auto lk_trivial_threshold(const Graph & g, int k) -> bool;
}

#endif
