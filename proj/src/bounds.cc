#include <packbound/bounds.hh>
#include <packbound/profile.hh>

#include <stdexcept>

using namespace packbound;

auto packbound::to_string(BoundId id) -> std::string
{
    switch (id) {
        case BoundId::l2_pendant:                  return "l2_pendant";
        case BoundId::lk_order_size:               return "lk_order_size";
        case BoundId::open_packing_order_size:     return "open_packing_order_size";
        case BoundId::open_packing_min_degree:     return "open_packing_min_degree";
        case BoundId::packing_min_degree:          return "packing_min_degree";
        case BoundId::double_domination_sum:       return "double_domination_sum";
        case BoundId::double_domination_sum_prior: return "double_domination_sum_prior";
        case BoundId::double_domination_prior:     return "double_domination_prior";
    }
    return "unknown";
}

namespace
{
    auto inapplicable(BoundId id, std::string reason, std::optional<int> k = std::nullopt) -> BoundEvaluation
    {
        return BoundEvaluation{id, k, ExactReal{}, false, std::move(reason), {}, {}, {}};
    }

    auto applicable(BoundId id, ExactReal value, std::optional<int> k = std::nullopt) -> BoundEvaluation
    {
        return BoundEvaluation{id, k, value, true, {}, {}, {}, {}};
    }
}

auto packbound::assess(BoundEvaluation evaluation, long invariant) -> BoundEvaluation
{
    evaluation.invariant = invariant;
    if (evaluation.applicable) {
        auto order = evaluation.value.compare(invariant);
        evaluation.holds = order >= 0;
        evaluation.tight = order == 0;
    }
    return evaluation;
}

auto packbound::l2_pendant_bound(const Graph & g) -> BoundEvaluation
{
    if (g.order() < 3)
        return inapplicable(BoundId::l2_pendant, "needs n >= 3");
    if (! g.is_connected())
        return inapplicable(BoundId::l2_pendant, "needs a connected graph");

    auto profile = structural_profile(g);
    if (! profile.delta_star)
        return inapplicable(BoundId::l2_pendant, "delta* undefined");

    long n = g.order(), ell = profile.pendant_count(), s = profile.support_count(), ds = *profile.delta_star;
    return applicable(BoundId::l2_pendant, ExactReal::rational(2 * (n - ell + s * ds), 1 + ds));
}

auto packbound::lk_order_size_bound(const Graph & g, int k) -> BoundEvaluation
{
    if (k < 1)
        throw std::invalid_argument("lk_order_size_bound needs k >= 1");

    std::int64_t n = g.order(), m = g.edge_count(), kk = k;

    // k ≤ 2(n − √D) with D = n² − n − 2m  ⇔  k ≤ 2n and (2n − k)² ≥ 4D
    std::int64_t slack = n * n - n - 2 * m;
    bool order_size_condition = kk <= 2 * n && (2 * n - kk) * (2 * n - kk) >= 4 * slack;
    bool degree_condition = g.order() > 0 && g.min_degree() >= k - 1;
    if (! order_size_condition && ! degree_condition)
        return inapplicable(BoundId::lk_order_size, "needs k <= 2(n - sqrt(n^2 - n - 2m)) or min degree >= k - 1", k);

    // n + k/2 − √(k²/4 + (1−k)n + 2m) = (2n + k − √(k² + 4(1−k)n + 8m)) / 2
    std::int64_t radicand = kk * kk + 4 * (1 - kk) * n + 8 * m;
    if (radicand < 0)
        return inapplicable(BoundId::lk_order_size, "negative radicand", k);
    return applicable(BoundId::lk_order_size, ExactReal(2 * n + kk, -1, radicand, 2), k);
}

auto packbound::open_packing_order_size_bound(const Graph & g) -> BoundEvaluation
{
    if (0 == g.order() || g.min_degree() < 1)
        return inapplicable(BoundId::open_packing_order_size, "needs no isolated vertex");
    std::int64_t n = g.order(), m = g.edge_count();
    return applicable(BoundId::open_packing_order_size, ExactReal(n, -1, 2 * m - n, 1));
}

auto packbound::open_packing_min_degree_bound(const Graph & g) -> BoundEvaluation
{
    if (g.order() < 2)
        return inapplicable(BoundId::open_packing_min_degree, "needs n >= 2");
    if (! g.is_connected())
        return inapplicable(BoundId::open_packing_min_degree, "needs a connected graph");
    return applicable(BoundId::open_packing_min_degree, ExactReal::rational(g.order(), g.min_degree()));
}

auto packbound::packing_min_degree_bound(const Graph & g) -> BoundEvaluation
{
    if (0 == g.order())
        return inapplicable(BoundId::packing_min_degree, "needs a nonempty graph");
    if (! g.is_connected())
        return inapplicable(BoundId::packing_min_degree, "needs a connected graph");
    return applicable(BoundId::packing_min_degree, ExactReal::rational(g.order(), g.min_degree() + 1));
}

auto packbound::double_domination_bounds(const Graph & g, std::optional<DoubleDominationValues> values) -> DoubleDominationReport
{
    DoubleDominationReport report;
    long n = g.order(), delta = g.min_degree();
    bool nonempty = n > 0;

    if (nonempty && delta >= 2) {
        report.evaluations.push_back(applicable(BoundId::double_domination_sum, ExactReal::integer(n - delta + 2)));
        report.evaluations.push_back(applicable(BoundId::double_domination_sum_prior, ExactReal::integer(n)));
    }
    else {
        report.evaluations.push_back(inapplicable(BoundId::double_domination_sum, "needs min degree >= 2"));
        report.evaluations.push_back(inapplicable(BoundId::double_domination_sum_prior, "needs min degree >= 2"));
    }

    if (nonempty && delta >= 1)
        report.evaluations.push_back(applicable(BoundId::double_domination_prior, ExactReal::integer(n - delta + 1)));
    else
        report.evaluations.push_back(inapplicable(BoundId::double_domination_prior, "needs no isolated vertex"));

    if (values) {
        report.evaluations[0] = assess(report.evaluations[0], values->gamma_x2 + values->rho);
        report.evaluations[1] = assess(report.evaluations[1], values->gamma_x2 + values->rho);
        report.evaluations[2] = assess(report.evaluations[2], values->gamma_x2);
        if (report.evaluations[0].applicable)
            report.dominates_prior = (n - delta + 2 <= n) && (n - delta + 2 - values->rho <= n - delta + 1);
    }
    return report;
}

auto packbound::lk_trivial_threshold(const Graph & g, int k) -> bool
{
    return k >= g.max_degree() + 1;
}
