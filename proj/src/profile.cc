#include <packbound/profile.hh>

#include <stdexcept>

using namespace packbound;

auto packbound::structural_profile(const Graph & g) -> StructuralProfile
{
    StructuralProfile result{g.empty_set(), g.empty_set(), g.empty_set(), {}, std::nullopt};
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1)
            result.pendants.insert(v);
        else if (g.degree(v) >= 2 && (! result.delta_star || g.degree(v) < *result.delta_star))
            result.delta_star = g.degree(v);
    }

    for (auto p : result.pendants) {
        int support = g.neighbours(p).first();
        result.supports.insert(support);
        ++result.pendant_count_per_support[support];
    }

    for (const auto & [support, count] : result.pendant_count_per_support)
        if (count == 1)
            result.weak_supports.insert(support);

    return result;
}

auto packbound::augment_weak_supports(const Graph & g) -> Graph
{
    if (g.order() < 3 || ! g.is_connected())
        throw std::invalid_argument("augment_weak_supports needs a connected graph with at least three vertices");

    auto profile = structural_profile(g);
    if (profile.weak_supports.empty())
        return g;

    auto edges = g.edges();
    int next = g.order();
    for (auto u : profile.weak_supports)
        edges.push_back({u, next++});
    return Graph(next, edges);
}
