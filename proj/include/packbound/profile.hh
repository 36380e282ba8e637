#ifndef PACKBOUND_PROFILE_HH
#define PACKBOUND_PROFILE_HH

#include <packbound/graph.hh>

#include <map>
#include <optional>

namespace packbound
{
    /// Pendant/support census of a graph.
    struct StructuralProfile
    {
        VertexSet pendants;
        VertexSet supports;
        /// Supports with exactly one pendant neighbour.
        VertexSet weak_supports;
        std::map<int, int> pendant_count_per_support;
        /// Minimum degree over vertices of degree at least two; absent if there are none.
        std::optional<int> delta_star;

        [[nodiscard]] auto pendant_count() const -> int { return pendants.size(); }
        [[nodiscard]] auto support_count() const -> int { return supports.size(); }
        [[nodiscard]] auto weak_support_count() const -> int { return weak_supports.size(); }
    };

    [[nodiscard]] auto structural_profile(const Graph & g) -> StructuralProfile;

    /**
     * Attach one new pendant vertex to every weak support. New vertices take
     * ids n, n+1, ... in increasing order of the support they hang from, so
     * the original graph is an induced subgraph on 0..n-1.
     *
     * Throws std::invalid_argument unless g is connected with n >= 3.
     */
    [[nodiscard]] auto augment_weak_supports(const Graph & g) -> Graph;
}

#endif
