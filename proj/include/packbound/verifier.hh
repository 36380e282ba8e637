#ifndef PACKBOUND_VERIFIER_HH
#define PACKBOUND_VERIFIER_HH

#include <packbound/graph.hh>
#include <packbound/graph_io.hh>
#include <packbound/solvers.hh>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace packbound
{
    enum class ClaimId
    {
        thm2_1,                 ///< L₂ ≤ 2(n − ℓ + s·δ*)/(1 + δ*)
        thm2_2_lk,              ///< L_k ≤ n + k/2 − √(k²/4 + (1−k)n + 2m), 1 ≤ k ≤ Δ
        thm2_2_rho_o,           ///< ρₒ ≤ n − √(2m − n)
        eq_rho_o_n_delta,       ///< ρₒ ≤ n/δ
        remark_rho,             ///< ρ ≤ n/(δ+1)
        thm3_3,                 ///< γ_×2 + ρ ≤ n − δ + 2
        eq1,                    ///< γ_×2 + L_{δ−1} ≤ n, complement of the packing double dominates
        monotonicity,           ///< L_{k+1} ≥ L_k + 1, 1 ≤ k ≤ Δ
        lk_threshold,           ///< L_k = n ⇔ k ≥ Δ + 1
        tightness_omega,        ///< L_k bound tight ⇔ Ω(k) member
        tightness_sigma,        ///< ρₒ order/size bound tight ⇔ Σ member
        tightness_gamma,        ///< ρₒ = n/δ ⇔ Γ member
        tightness_gamma_prime   ///< ρ = n/(δ+1) ⇔ Γ′ member, reported as a finding
    };

    inline constexpr ClaimId all_claims[] = {
        ClaimId::thm2_1, ClaimId::thm2_2_lk, ClaimId::thm2_2_rho_o, ClaimId::eq_rho_o_n_delta,
        ClaimId::remark_rho, ClaimId::thm3_3, ClaimId::eq1, ClaimId::monotonicity, ClaimId::lk_threshold,
        ClaimId::tightness_omega, ClaimId::tightness_sigma, ClaimId::tightness_gamma, ClaimId::tightness_gamma_prime
    };

    [[nodiscard]] auto to_string(ClaimId) -> std::string;
    /// Throws std::invalid_argument on an unknown id.
    [[nodiscard]] auto parse_claim_id(const std::string &) -> ClaimId;

    enum class VerdictStatus
    {
        holds,
        tight,
        violated,
        inapplicable,
        finding
    };

    [[nodiscard]] auto to_string(VerdictStatus) -> std::string;

    struct TheoremVerdict
    {
        std::string graph;
        ClaimId claim;
        VerdictStatus status;
        /// Invariant and bound values; violated verdicts carry everything needed to reproduce.
        nlohmann::json details;
    };

    struct VerifyOptions
    {
        SolveOptions solve;
        /// Restricts the k swept by the per-k claims; default is 1..Δ (1..Δ+1 for lk-threshold).
        std::optional<std::pair<int, int>> k_range;
    };

    /// One verdict per claim, in all_claims order.
    [[nodiscard]] auto verify_graph(const Graph & g, const VerifyOptions & = {}) -> std::vector<TheoremVerdict>;

    struct ClaimCounts
    {
        std::size_t holds = 0;
        std::size_t tight = 0;
        std::size_t violated = 0;
        std::size_t inapplicable = 0;
        std::size_t finding = 0;

        [[nodiscard]] auto total() const -> std::size_t { return holds + tight + violated + inapplicable + finding; }
        auto add(VerdictStatus) -> void;
        auto operator+= (const ClaimCounts &) -> ClaimCounts &;
        auto operator== (const ClaimCounts &) const -> bool = default;
    };

    struct SweepSummary
    {
        std::size_t graphs_processed = 0;
        std::size_t malformed_records = 0;
        std::map<ClaimId, ClaimCounts> counts;
        std::map<ClaimId, std::vector<std::string>> tight_witnesses;
        double wall_seconds = 0.0;

        [[nodiscard]] auto violations() const -> std::size_t;
        [[nodiscard]] auto findings() const -> std::size_t;

        /// Counts add; witness lists concatenate, so merging in input order keeps input order.
        auto merge(const SweepSummary &) -> void;
    };

    struct SweepReport
    {
        SweepSummary summary;
        /// Input order, one block of verdicts per well-formed record.
        std::vector<TheoremVerdict> verdicts;
    };

    /// Verifies records on up to `jobs` threads. Malformed records are counted and skipped.
    [[nodiscard]] auto verify_stream(std::span<const GraphRecord> records, const VerifyOptions & = {}, int jobs = 1) -> SweepReport;
    [[nodiscard]] auto verify_stream(std::span<const Graph> graphs, const VerifyOptions & = {}, int jobs = 1) -> SweepReport;

    /// True for claims where equality is meaningful (everything except eq1 and lk-threshold).
    [[nodiscard]] auto supports_tightness(ClaimId) -> bool;

    /// graph6 strings of the graphs whose verdict for this claim is tight, in input order.
    /// Throws std::invalid_argument for claims without a notion of tightness.
    [[nodiscard]] auto hunt_tight(ClaimId claim, std::span<const GraphRecord> records, const VerifyOptions & = {}, int jobs = 1)
        -> std::vector<std::string>;
    [[nodiscard]] auto hunt_tight(ClaimId claim, std::span<const Graph> graphs, const VerifyOptions & = {}, int jobs = 1)
        -> std::vector<std::string>;
}

#endif
