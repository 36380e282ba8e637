#ifndef PACKBOUND_FAMILIES_HH
#define PACKBOUND_FAMILIES_HH

#include <packbound/graph.hh>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace packbound
{
    /**
     * The four extremal families:
     *
     *   omega        clique S with G − S (k−1)-regular and every vertex of S
     *                having exactly k neighbours outside S; attains the L_k
     *                order/size bound.
     *   sigma        clique S with G − S a disjoint union of K₂ and every vertex
     *                of S having exactly one neighbour outside; attains
     *                ρₒ = n − √(2m − n).
     *   gamma        t disjoint K₂ forming an induced matching H of minimum
     *                degree vertices, each with δ − 1 private neighbours that
     *                partition V − V(H); attains ρₒ = n/δ.
     *   gamma_prime  independent H of minimum degree vertices whose open
     *                neighbourhoods partition V − H; attains ρ = n/(δ+1).
     */
    enum class FamilyKind
    {
        omega,
        sigma,
        gamma,
        gamma_prime
    };

    [[nodiscard]] auto to_string(FamilyKind) -> std::string;
    /// Accepts "omega", "sigma", "gamma", "gamma-prime"/"gamma_prime". Throws std::invalid_argument.
    [[nodiscard]] auto parse_family_kind(const std::string &) -> FamilyKind;

    struct FamilyWitness
    {
        FamilyKind family;
        /// Ω: the k of property p₁. Σ: 1. Γ: δ − 1. Γ′: δ.
        int k = 0;
        std::optional<VertexSet> clique_s;
        /// Γ only: the t matching edges, u < v, sorted.
        std::vector<std::pair<int, int>> matching_h;
        /// Γ′ only: the independent core, sorted.
        std::vector<int> independent_h;
        std::map<int, std::vector<int>> private_neighbours;
    };

    /// Smallest clique S satisfying p₁ for this k, ties broken lexicographically.
    [[nodiscard]] auto recognize_omega(const Graph & g, int k) -> std::optional<FamilyWitness>;

    [[nodiscard]] auto recognize_sigma(const Graph & g) -> std::optional<FamilyWitness>;

    /// Throws std::invalid_argument unless g is connected with n >= 2.
    [[nodiscard]] auto recognize_gamma(const Graph & g) -> std::optional<FamilyWitness>;

    /// Throws std::invalid_argument unless g is connected and nonempty.
    [[nodiscard]] auto recognize_gamma_prime(const Graph & g) -> std::optional<FamilyWitness>;

    /// Re-checks every defining condition of the witness directly against g.
    [[nodiscard]] auto check_certificate(const Graph & g, const FamilyWitness & w) -> bool;

    /// S is vertices 0..clique_size-1; the rest are numbered from clique_size.
    /// outside_edges and attachments use 0-based outside indices.
    struct OmegaParams
    {
        int k = 1;
        int clique_size = 0;
        int outside_size = 0;
        std::vector<Edge> outside_edges;
        std::vector<std::vector<int>> attachments;
    };

    /// S is 0..clique_size-1; matching edge i joins clique_size + 2i and clique_size + 2i + 1.
    struct SigmaParams
    {
        int clique_size = 0;
        int matching_edges = 1;
        /// attachments[i] is the 0-based outside index joined to S vertex i.
        std::vector<int> attachments;
    };

    /// H is 0..2t-1 with pairs (2i, 2i+1). Private vertex j (0-based, 0..2tk-1)
    /// becomes vertex 2t + j and hangs off H vertex j / k. private_edges join
    /// private vertices by their 0-based index.
    struct GammaParams
    {
        int t = 1;
        int k = 0;
        std::vector<Edge> private_edges;
    };

    /// H is 0..t-1. Private vertex j becomes t + j and hangs off H vertex j / k.
    struct GammaPrimeParams
    {
        int t = 1;
        int k = 0;
        std::vector<Edge> private_edges;
    };

    using FamilyParams = std::variant<OmegaParams, SigmaParams, GammaParams, GammaPrimeParams>;

    /// Build a family member. Throws std::invalid_argument if the parameters cannot
    /// produce a member (wrong regularity, degree shortfall, disconnected Γ or Γ′).
    [[nodiscard]] auto generate_family(const FamilyParams & params) -> Graph;

    [[nodiscard]] auto sample_omega(int k, std::mt19937_64 & rng) -> OmegaParams;
    [[nodiscard]] auto sample_sigma(std::mt19937_64 & rng) -> SigmaParams;
    [[nodiscard]] auto sample_gamma(int t, int k, std::mt19937_64 & rng) -> GammaParams;
    [[nodiscard]] auto sample_gamma_prime(int t, int k, std::mt19937_64 & rng) -> GammaPrimeParams;
}

#endif
