#include <packbound/verifier.hh>
#include <packbound/bounds.hh>
#include <packbound/families.hh>
#include <packbound/graph6.hh>
#include <packbound/profile.hh>
#include <packbound/report.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

using namespace packbound;
using nlohmann::json;

auto packbound::to_string(ClaimId c) -> std::string
{
    switch (c) {
        case ClaimId::thm2_1:                return "thm2.1";
        case ClaimId::thm2_2_lk:             return "thm2.2-lk";
        case ClaimId::thm2_2_rho_o:          return "thm2.2-rho_o";
        case ClaimId::eq_rho_o_n_delta:      return "eq-rho_o-n/delta";
        case ClaimId::remark_rho:            return "remark-rho";
        case ClaimId::thm3_3:                return "thm3.3";
        case ClaimId::eq1:                   return "eq1";
        case ClaimId::monotonicity:          return "monotonicity";
        case ClaimId::lk_threshold:          return "lk-threshold";
        case ClaimId::tightness_omega:       return "tightness-omega";
        case ClaimId::tightness_sigma:       return "tightness-sigma";
        case ClaimId::tightness_gamma:       return "tightness-gamma";
        case ClaimId::tightness_gamma_prime: return "tightness-gamma-prime";
    }
    return "unknown";
}

auto packbound::parse_claim_id(const std::string & s) -> ClaimId
{
    for (auto c : all_claims)
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("unknown claim id '" + s + "'");
}

auto packbound::to_string(VerdictStatus s) -> std::string
{
    switch (s) {
        case VerdictStatus::holds:        return "holds";
        case VerdictStatus::tight:        return "tight";
        case VerdictStatus::violated:     return "violated";
        case VerdictStatus::inapplicable: return "inapplicable";
        case VerdictStatus::finding:      return "finding";
    }
    return "unknown";
}

auto ClaimCounts::add(VerdictStatus s) -> void
{
    switch (s) {
        case VerdictStatus::holds:        ++holds; break;
        case VerdictStatus::tight:        ++tight; break;
        case VerdictStatus::violated:     ++violated; break;
        case VerdictStatus::inapplicable: ++inapplicable; break;
        case VerdictStatus::finding:      ++finding; break;
    }
}

auto ClaimCounts::operator+= (const ClaimCounts & other) -> ClaimCounts &
{
    holds += other.holds;
    tight += other.tight;
    violated += other.violated;
    inapplicable += other.inapplicable;
    finding += other.finding;
    return *this;
}

auto SweepSummary::violations() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & [_, c] : counts)
        total += c.violated;
    return total;
}

auto SweepSummary::findings() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto & [_, c] : counts)
        total += c.finding;
    return total;
}

auto SweepSummary::merge(const SweepSummary & other) -> void
{
    graphs_processed += other.graphs_processed;
    malformed_records += other.malformed_records;
    for (const auto & [claim, c] : other.counts)
        counts[claim] += c;
    for (const auto & [claim, graphs] : other.tight_witnesses) {
        auto & mine = tight_witnesses[claim];
        mine.insert(mine.end(), graphs.begin(), graphs.end());
    }
    wall_seconds += other.wall_seconds;
}

auto packbound::supports_tightness(ClaimId c) -> bool
{
    return c != ClaimId::lk_threshold && c != ClaimId::eq1;
}

namespace
{
    struct ResourceExhausted
    {
    };

    // Lazily computed invariants for one graph. A node-limit hit turns into
    // ResourceExhausted, which the claim evaluator reports as inapplicable.
    class Invariants
    {
        private:
            const Graph & _g;
            SolveOptions _opts;
            std::map<int, SolveResult> _limited;
            std::optional<SolveResult> _open;
            std::optional<SolveResult> _double;

            template <typename F_>
            auto guarded(F_ && f) -> SolveResult
            {
                try {
                    return f();
                }
                catch (const NodeLimitExceeded &) {
                    throw ResourceExhausted{};
                }
            }

        public:
            Invariants(const Graph & g, const SolveOptions & opts) : _g(g), _opts(opts) { }

            auto limited(int k) -> const SolveResult &
            {
                auto found = _limited.find(k);
                if (found == _limited.end())
                    found = _limited.emplace(k, guarded([&] { return limited_packing_number(_g, k, _opts); })).first;
                return found->second;
            }

            auto packing() -> const SolveResult & { return limited(1); }

            auto open_packing() -> const SolveResult &
            {
                if (! _open)
                    _open = guarded([&] { return open_packing_number(_g, _opts); });
                return *_open;
            }

            auto double_domination() -> const SolveResult &
            {
                if (! _double)
                    _double = guarded([&] { return tuple_domination_number(_g, 2, _opts); });
                return *_double;
            }
    };

    auto inapplicable(const std::string & reason) -> std::pair<VerdictStatus, json>
    {
        return {VerdictStatus::inapplicable, json{{"reason", reason}}};
    }

    auto status_of(const BoundEvaluation & e) -> VerdictStatus
    {
        if (! e.applicable)
            return VerdictStatus::inapplicable;
        if (! e.holds.value_or(false))
            return VerdictStatus::violated;
        return e.tight.value_or(false) ? VerdictStatus::tight : VerdictStatus::holds;
    }

    // Per-k claims fold into one verdict: any violation wins, then any tight k.
    auto fold(const std::vector<VerdictStatus> & statuses) -> VerdictStatus
    {
        auto has = [&] (VerdictStatus s) { return std::find(statuses.begin(), statuses.end(), s) != statuses.end(); };
        if (has(VerdictStatus::violated))
            return VerdictStatus::violated;
        if (has(VerdictStatus::finding))
            return VerdictStatus::finding;
        if (has(VerdictStatus::tight))
            return VerdictStatus::tight;
        if (has(VerdictStatus::holds))
            return VerdictStatus::holds;
        return VerdictStatus::inapplicable;
    }

    auto bound_claim(const BoundEvaluation & bound, long invariant, const char * name) -> std::pair<VerdictStatus, json>
    {
        if (! bound.applicable)
            return inapplicable(bound.reason);
        auto assessed = assess(bound, invariant);
        return {status_of(assessed), json{{"bound", to_json(assessed.value)}, {name, invariant}}};
    }

    // Equivalence between attaining a bound and family membership.
    auto equivalence(bool attains, const std::optional<FamilyWitness> & witness, const Graph & g, bool soft)
        -> std::pair<VerdictStatus, json>
    {
        bool member = witness.has_value();
        json details{{"attains_bound", attains}, {"member", member}};
        if (witness) {
            details["witness"] = to_json(*witness);
            if (! check_certificate(g, *witness)) {
                details["certificate_valid"] = false;
                return {VerdictStatus::violated, details};
            }
        }
        if (attains != member)
            return {soft ? VerdictStatus::finding : VerdictStatus::violated, details};
        return {attains ? VerdictStatus::tight : VerdictStatus::holds, details};
    }

    auto k_bounds(const VerifyOptions & opts, int top) -> std::pair<int, int>
    {
        int lo = 1, hi = top;
        if (opts.k_range) {
            lo = std::max(lo, opts.k_range->first);
            hi = std::min(hi, opts.k_range->second);
        }
        return {lo, hi};
    }

    auto evaluate(ClaimId claim, const Graph & g, Invariants & inv, const VerifyOptions & opts) -> std::pair<VerdictStatus, json>
    {
        const int n = g.order(), delta = g.min_degree(), big_delta = g.max_degree();
        const bool connected = g.is_connected();
        if (0 == n)
            return inapplicable("empty graph");

        switch (claim) {
            case ClaimId::thm2_1: {
                auto bound = l2_pendant_bound(g);
                if (! bound.applicable)
                    return inapplicable(bound.reason);
                auto profile = structural_profile(g);
                auto [status, details] = bound_claim(bound, inv.limited(2).value, "L2");
                details["pendants"] = profile.pendant_count();
                details["supports"] = profile.support_count();
                details["delta_star"] = *profile.delta_star;
                return {status, details};
            }

            case ClaimId::thm2_2_lk: {
                auto [lo, hi] = k_bounds(opts, big_delta);
                std::vector<VerdictStatus> statuses;
                json per_k = json::array();
                for (int k = lo; k <= hi; ++k) {
                    auto bound = lk_order_size_bound(g, k);
                    if (! bound.applicable)
                        continue;
                    auto assessed = assess(bound, inv.limited(k).value);
                    statuses.push_back(status_of(assessed));
                    per_k.push_back(json{{"k", k}, {"bound", to_json(assessed.value)}, {"L_k", inv.limited(k).value},
                            {"status", to_string(statuses.back())}});
                }
                if (statuses.empty())
                    return inapplicable("no k in 1..max degree satisfies the hypothesis");
                return {fold(statuses), json{{"per_k", per_k}}};
            }

            case ClaimId::thm2_2_rho_o: {
                auto bound = open_packing_order_size_bound(g);
                if (! bound.applicable)
                    return inapplicable(bound.reason);
                return bound_claim(bound, inv.open_packing().value, "rho_o");
            }

            case ClaimId::eq_rho_o_n_delta: {
                auto bound = open_packing_min_degree_bound(g);
                if (! bound.applicable)
                    return inapplicable(bound.reason);
                return bound_claim(bound, inv.open_packing().value, "rho_o");
            }

            case ClaimId::remark_rho: {
                if (n < 2)
                    return inapplicable("needs n >= 2");
                auto bound = packing_min_degree_bound(g);
                if (! bound.applicable)
                    return inapplicable(bound.reason);
                return bound_claim(bound, inv.packing().value, "rho");
            }

            case ClaimId::thm3_3: {
                if (delta < 2)
                    return inapplicable("needs min degree >= 2");
                long gamma_x2 = inv.double_domination().value, rho = inv.packing().value;
                auto report = double_domination_bounds(g, DoubleDominationValues{gamma_x2, rho});
                json evaluations = json::array();
                for (const auto & e : report.evaluations)
                    evaluations.push_back(to_json(e));
                json details{{"gamma_x2", gamma_x2}, {"rho", rho}, {"n", n}, {"min_degree", delta},
                    {"evaluations", evaluations}, {"dominates_prior", report.dominates_prior.value_or(false)}};

                auto status = status_of(report.evaluations[0]);
                for (std::size_t i = 1; i < report.evaluations.size(); ++i)
                    if (status_of(report.evaluations[i]) == VerdictStatus::violated)
                        status = VerdictStatus::violated;
                if (! report.dominates_prior.value_or(false))
                    status = VerdictStatus::violated;
                return {status, details};
            }

            case ClaimId::eq1: {
                if (delta < 2)
                    return inapplicable("needs min degree >= 2");
                const auto & packing = inv.limited(delta - 1);
                long gamma_x2 = inv.double_domination().value;
                auto complement = packing.witness.complement();
                bool complement_dominates = is_tuple_dominating(g, complement, 2);
                json details{{"gamma_x2", gamma_x2}, {"L_delta_minus_1", packing.value}, {"n", n},
                    {"packing", to_json(packing.witness)}, {"complement_double_dominates", complement_dominates},
                    {"equality", gamma_x2 + packing.value == n}};
                long lhs = gamma_x2 + packing.value;
                if (lhs > n || ! complement_dominates)
                    return {VerdictStatus::violated, details};
                // a consequence without a sharpness statement: equality is recorded in details only
                return {VerdictStatus::holds, details};
            }

            case ClaimId::monotonicity: {
                auto [lo, hi] = k_bounds(opts, big_delta);
                std::vector<VerdictStatus> statuses;
                json per_k = json::array();
                for (int k = lo; k <= hi; ++k) {
                    int here = inv.limited(k).value, next = inv.limited(k + 1).value;
                    statuses.push_back(next < here + 1 ? VerdictStatus::violated
                            : next == here + 1 ? VerdictStatus::tight : VerdictStatus::holds);
                    per_k.push_back(json{{"k", k}, {"L_k", here}, {"L_k_plus_1", next}});
                }
                if (statuses.empty())
                    return inapplicable("needs max degree >= 1");
                return {fold(statuses), json{{"per_k", per_k}}};
            }

            case ClaimId::lk_threshold: {
                auto [lo, hi] = k_bounds(opts, big_delta + 1);
                std::vector<VerdictStatus> statuses;
                json per_k = json::array();
                for (int k = lo; k <= hi; ++k) {
                    int value = inv.limited(k).value;
                    bool agrees = (value == n) == lk_trivial_threshold(g, k);
                    statuses.push_back(agrees ? VerdictStatus::holds : VerdictStatus::violated);
                    per_k.push_back(json{{"k", k}, {"L_k", value}, {"threshold", lk_trivial_threshold(g, k)}});
                }
                if (statuses.empty())
                    return inapplicable("k range is empty");
                return {fold(statuses), json{{"max_degree", big_delta}, {"per_k", per_k}}};
            }

            case ClaimId::tightness_omega: {
                auto [lo, hi] = k_bounds(opts, big_delta);
                std::vector<VerdictStatus> statuses;
                json per_k = json::array();
                for (int k = lo; k <= hi; ++k) {
                    auto bound = lk_order_size_bound(g, k);
                    if (! bound.applicable)
                        continue;
                    auto assessed = assess(bound, inv.limited(k).value);
                    auto [status, details] = equivalence(*assessed.tight, recognize_omega(g, k), g, false);
                    details["k"] = k;
                    statuses.push_back(status);
                    per_k.push_back(details);
                }
                if (statuses.empty())
                    return inapplicable("no k in 1..max degree satisfies the hypothesis");
                return {fold(statuses), json{{"per_k", per_k}}};
            }

            case ClaimId::tightness_sigma: {
                auto bound = open_packing_order_size_bound(g);
                if (! bound.applicable)
                    return inapplicable(bound.reason);
                auto assessed = assess(bound, inv.open_packing().value);
                return equivalence(*assessed.tight, recognize_sigma(g), g, false);
            }

            case ClaimId::tightness_gamma: {
                if (n < 2 || ! connected)
                    return inapplicable(n < 2 ? "needs n >= 2" : "needs a connected graph");
                auto assessed = assess(open_packing_min_degree_bound(g), inv.open_packing().value);
                return equivalence(*assessed.tight, recognize_gamma(g), g, false);
            }

            case ClaimId::tightness_gamma_prime: {
                if (n < 2 || ! connected)
                    return inapplicable(n < 2 ? "needs n >= 2" : "needs a connected graph");
                auto assessed = assess(packing_min_degree_bound(g), inv.packing().value);
                return equivalence(*assessed.tight, recognize_gamma_prime(g), g, true);
            }
        }
        return inapplicable("unknown claim");
    }
}

auto packbound::verify_graph(const Graph & g, const VerifyOptions & opts) -> std::vector<TheoremVerdict>
{
    auto text = to_graph6(g);
    Invariants inv(g, opts.solve);
    std::vector<TheoremVerdict> verdicts;
    for (auto claim : all_claims) {
        try {
            auto [status, details] = evaluate(claim, g, inv, opts);
            if (status == VerdictStatus::violated) {
                details["n"] = g.order();
                details["m"] = g.edge_count();
            }
            verdicts.push_back({text, claim, status, std::move(details)});
        }
        catch (const ResourceExhausted &) {
            verdicts.push_back({text, claim, VerdictStatus::inapplicable, json{{"reason", "resource: node limit exceeded"}}});
        }
    }
    return verdicts;
}

namespace
{
    auto run_parallel(std::span<const Graph * const> graphs, const VerifyOptions & opts, int jobs)
        -> std::vector<std::vector<TheoremVerdict>>
    {
        std::vector<std::vector<TheoremVerdict>> results(graphs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (auto i = next++; i < graphs.size(); i = next++)
                results[i] = verify_graph(*graphs[i], opts);
        };

        int threads = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
        if (threads <= 1)
            worker();
        else {
            std::vector<std::jthread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker);
        }
        return results;
    }

    auto summarise(std::vector<std::vector<TheoremVerdict>> per_graph, std::size_t malformed) -> SweepReport
    {
        SweepReport report;
        report.summary.malformed_records = malformed;
        for (auto claim : all_claims)
            report.summary.counts[claim];
        for (auto & verdicts : per_graph) {
            ++report.summary.graphs_processed;
            for (auto & v : verdicts) {
                report.summary.counts[v.claim].add(v.status);
                if (v.status == VerdictStatus::tight)
                    report.summary.tight_witnesses[v.claim].push_back(v.graph);
                report.verdicts.push_back(std::move(v));
            }
        }
        return report;
    }
}

auto packbound::verify_stream(std::span<const GraphRecord> records, const VerifyOptions & opts, int jobs) -> SweepReport
{
    auto start = std::chrono::steady_clock::now();
    std::vector<const Graph *> graphs;
    std::size_t malformed = 0;
    for (const auto & r : records) {
        if (r.graph)
            graphs.push_back(&*r.graph);
        else
            ++malformed;
    }
    auto report = summarise(run_parallel(graphs, opts, jobs), malformed);
    report.summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto packbound::verify_stream(std::span<const Graph> graphs, const VerifyOptions & opts, int jobs) -> SweepReport
{
    auto start = std::chrono::steady_clock::now();
    std::vector<const Graph *> pointers;
    for (const auto & g : graphs)
        pointers.push_back(&g);
    auto report = summarise(run_parallel(pointers, opts, jobs), 0);
    report.summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace
{
    auto tight_for(ClaimId claim, const SweepReport & report) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (const auto & v : report.verdicts)
            if (v.claim == claim && v.status == VerdictStatus::tight)
                result.push_back(v.graph);
        return result;
    }

    auto require_tightness(ClaimId claim) -> void
    {
        if (! supports_tightness(claim))
            throw std::invalid_argument("claim '" + to_string(claim) + "' has no notion of tightness");
    }
}

auto packbound::hunt_tight(ClaimId claim, std::span<const GraphRecord> records, const VerifyOptions & opts, int jobs)
    -> std::vector<std::string>
{
    require_tightness(claim);
    return tight_for(claim, verify_stream(records, opts, jobs));
}

auto packbound::hunt_tight(ClaimId claim, std::span<const Graph> graphs, const VerifyOptions & opts, int jobs)
    -> std::vector<std::string>
{
    require_tightness(claim);
    return tight_for(claim, verify_stream(graphs, opts, jobs));
}
