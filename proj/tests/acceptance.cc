#include "oracles.hh"

#include <packbound/bounds.hh>
#include <packbound/enumerate.hh>
#include <packbound/families.hh>
#include <packbound/graph6.hh>
#include <packbound/solvers.hh>
#include <packbound/verifier.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace packbound;

namespace
{
    using clock_type = std::chrono::steady_clock;

    int failures = 0;

    struct Outcome
    {
        bool pass;
        std::string detail;
    };

    auto run(const std::string & name, const std::function<Outcome()> & criterion) -> void
    {
        auto start = clock_type::now();
        Outcome outcome;
        try {
            outcome = criterion();
        }
        catch (const std::exception & e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        if (! outcome.pass)
            ++failures;
        std::printf("%s %s: %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str(), seconds);
        std::fflush(stdout);
    }

    auto jobs() -> int
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto corpus(int max_n) -> std::vector<Graph>
    {
        std::vector<Graph> graphs;
        for (int n = 1; n <= max_n; ++n)
            for (auto & g : enumerate_connected(n))
                graphs.push_back(std::move(g));
        return graphs;
    }

    auto sweep(int max_n, double budget_seconds) -> Outcome
    {
        auto start = clock_type::now();
        auto report = verify_stream(corpus(max_n), {}, jobs());
        double seconds = std::chrono::duration<double>(clock_type::now() - start).count();
        std::ostringstream detail;
        detail << report.summary.graphs_processed << " graphs, " << report.summary.violations() << " violations";
        for (const auto & [claim, counts] : report.summary.counts)
            if (counts.violated > 0)
                detail << ", " << to_string(claim) << " violated " << counts.violated;
        detail << ", " << seconds << "s of " << budget_seconds << "s budget";
        return {report.summary.violations() == 0 && seconds < budget_seconds, detail.str()};
    }

    auto enumeration_counts() -> Outcome
    {
        const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
        std::ostringstream detail;
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            auto graphs = enumerate_connected(n);
            std::set<std::uint64_t> codes;
            for (const auto & g : graphs)
                codes.insert(oracle::canonical_code(n, oracle::adjacency_of(g)));
            auto classes = oracle::connected_classes(n);
            ok = ok && graphs.size() == expected[n - 1] && codes == classes;
            detail << (n > 1 ? "+" : "") << graphs.size();
        }
        detail << " connected graphs, matching the brute-force class scan";
        return {ok, detail.str()};
    }

    struct Agreement
    {
        std::size_t agree = 0;
        std::size_t total = 0;

        auto add(bool a, bool b) -> void
        {
            ++total;
            agree += a == b ? 1 : 0;
        }

        auto text() const -> std::string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, "%zu/%zu (%.1f%%)", agree, total, total ? 100.0 * agree / total : 100.0);
            return buffer;
        }
    };

    auto equivalences() -> Outcome
    {
        Agreement omega, sigma, gamma;
        for (const auto & g : corpus(6)) {
            for (int k = 1; k <= g.max_degree(); ++k) {
                auto bound = lk_order_size_bound(g, k);
                if (! bound.applicable)
                    continue;
                bool tight = bound.value.compare(limited_packing_number(g, k).value) == 0;
                omega.add(tight, recognize_omega(g, k).has_value());
            }

            auto rho_o = open_packing_number(g).value;
            auto sigma_bound = open_packing_order_size_bound(g);
            if (sigma_bound.applicable)
                sigma.add(sigma_bound.value.compare(rho_o) == 0, recognize_sigma(g).has_value());

            if (g.order() >= 2)
                gamma.add(rho_o * g.min_degree() == g.order(), recognize_gamma(g).has_value());
        }
        bool ok = omega.agree == omega.total && sigma.agree == sigma.total && gamma.agree == gamma.total;
        return {ok, "omega " + omega.text() + ", sigma " + sigma.text() + ", gamma " + gamma.text()};
    }

    auto gamma_prime_finding() -> Outcome
    {
        Agreement agreement;
        std::size_t members = 0;
        for (const auto & g : corpus(6)) {
            bool attains = packing_number(g).value * (g.min_degree() + 1) == g.order();
            bool member = recognize_gamma_prime(g).has_value();
            members += member ? 1 : 0;
            agreement.add(attains, member);
        }
        return {true, "finding mode, agreement " + agreement.text() + ", " + std::to_string(members) + " members"};
    }

    auto sharpness() -> Outcome
    {
        std::ostringstream detail;
        bool ok = true;
        for (int n = 3; n <= 8; ++n) {
            auto star = star_graph(n - 1);
            auto l2 = limited_packing_number(star, 2).value;
            auto bound = l2_pendant_bound(star);
            ok = ok && l2 == 2 && bound.applicable && bound.value == ExactReal::integer(2);

            auto k = complete_graph(n);
            auto sum = tuple_domination_number(k, 2).value + packing_number(k).value;
            ok = ok && sum == 3 && n - k.min_degree() + 2 == 3;
        }
        detail << "stars and complete graphs for n = 3..8";
        return {ok, detail.str()};
    }

    auto solver_agreement() -> Outcome
    {
        std::mt19937_64 rng(20240601);
        const double probabilities[] = {0.3, 0.5, 0.7};
        const SolveOptions exhaustive{true, std::nullopt};
        std::size_t comparisons = 0, mismatches = 0;
        auto compare = [&] (long a, long b) {
            ++comparisons;
            mismatches += a == b ? 0 : 1;
        };

        for (int i = 0; i < 200; ++i) {
            int n = std::uniform_int_distribution<int>(4, 12)(rng);
            auto g = random_connected_graph(n, probabilities[i % 3], rng);

            compare(packing_number(g).value, packing_number(g, exhaustive).value);
            compare(open_packing_number(g).value, open_packing_number(g, exhaustive).value);

            std::set<int> ks{1, 2, g.min_degree() - 1, g.max_degree()};
            for (auto k : ks)
                if (k >= 1)
                    compare(limited_packing_number(g, k).value, limited_packing_number(g, k, exhaustive).value);

            compare(tuple_domination_number(g, 1).value, tuple_domination_number(g, 1, exhaustive).value);
            compare(tuple_domination_number(g, 2).value, tuple_domination_number(g, 2, exhaustive).value);
        }
        return {0 == mismatches, std::to_string(comparisons) + " comparisons on 200 graphs, "
                + std::to_string(mismatches) + " mismatches"};
    }

    auto family_round_trip() -> Outcome
    {
        std::mt19937_64 rng(424242);
        std::ostringstream detail;
        bool ok = true;

        auto tally = [&] (const std::string & name, auto make, auto recognize, auto extra) {
            int good = 0;
            for (int i = 0; i < 50; ++i) {
                auto g = generate_family(make());
                auto w = recognize(g);
                if (w && check_certificate(g, *w) && extra(g))
                    ++good;
            }
            ok = ok && 50 == good;
            detail << name << " " << good << "/50 ";
        };
        auto always = [] (const Graph &) { return true; };

        for (int k = 1; k <= 3; ++k)
            tally("omega(k=" + std::to_string(k) + ")", [&] { return FamilyParams{sample_omega(k, rng)}; },
                    [k] (const Graph & g) { return recognize_omega(g, k); }, always);

        tally("sigma", [&] { return FamilyParams{sample_sigma(rng)}; },
                [] (const Graph & g) { return recognize_sigma(g); }, always);

        for (int t = 1; t <= 3; ++t)
            tally("gamma(t=" + std::to_string(t) + ")",
                    [&] { return FamilyParams{sample_gamma(t, std::uniform_int_distribution<int>(1, 3)(rng), rng)}; },
                    [] (const Graph & g) { return recognize_gamma(g); },
                    [] (const Graph & g) { return open_packing_number(g).value * g.min_degree() == g.order(); });

        tally("gamma-prime",
                [&] {
                    int t = std::uniform_int_distribution<int>(1, 3)(rng);
                    int k = std::uniform_int_distribution<int>(1, 4)(rng);
                    return FamilyParams{sample_gamma_prime(t, k, rng)};
                },
                [] (const Graph & g) { return recognize_gamma_prime(g); }, always);

        auto text = detail.str();
        text.pop_back();
        return {ok, text};
    }

    auto graph6_round_trip() -> Outcome
    {
        std::size_t checked = 0, failed = 0;
        auto check = [&] (const Graph & g) {
            ++checked;
            auto text = to_graph6(g);
            failed += (parse_graph6(text) == g && to_graph6(parse_graph6(text)) == text) ? 0 : 1;
        };
        for (const auto & g : corpus(7))
            check(g);
        std::mt19937_64 rng(6);
        for (int i = 0; i < 1000; ++i) {
            int n = std::uniform_int_distribution<int>(0, 30)(rng);
            check(random_graph(n, std::uniform_real_distribution<double>(0.0, 1.0)(rng), rng));
        }
        return {0 == failed, std::to_string(checked) + " graphs, " + std::to_string(failed) + " failures"};
    }
}

auto main() -> int
{
    run("criterion-1 enumeration", enumeration_counts);
    run("criterion-1 soundness sweep n<=6", [] { return sweep(6, 120.0); });
    run("criterion-1 extended sweep n<=7", [] { return sweep(7, 900.0); });
    run("criterion-2 exact equivalences", equivalences);
    run("criterion-2 gamma-prime agreement", gamma_prime_finding);
    run("criterion-3 sharpness instances", sharpness);
    run("criterion-4 branch and bound vs exhaustive", solver_agreement);
    run("criterion-5 family round trip", family_round_trip);
    run("criterion-6 graph6 round trip", graph6_round_trip);

    std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
