#include "oracles.hh"

#include <packbound/bounds.hh>
#include <packbound/enumerate.hh>
#include <packbound/families.hh>
#include <packbound/solvers.hh>

#include <doctest.h>

using namespace packbound;

namespace
{
    auto set_of(int n, std::vector<int> members) -> VertexSet
    {
        return VertexSet::from_members(n, members);
    }
}

TEST_CASE("family names")
{
    for (auto f : {FamilyKind::omega, FamilyKind::sigma, FamilyKind::gamma, FamilyKind::gamma_prime})
        CHECK(parse_family_kind(to_string(f)) == f);
    CHECK(parse_family_kind("gamma_prime") == FamilyKind::gamma_prime);
    CHECK_THROWS_AS((void) parse_family_kind("delta"), std::invalid_argument);
}

TEST_CASE("omega recognition")
{
    auto p4 = recognize_omega(path_graph(4), 1);
    REQUIRE(p4);
    CHECK(*p4->clique_s == set_of(4, {1, 2}));
    CHECK(check_certificate(path_graph(4), *p4));

    for (int n = 2; n <= 7; ++n) {
        auto w = recognize_omega(complete_graph(n), 1);
        REQUIRE(w);
        CHECK(w->clique_s->size() == n - 1);
        auto full = recognize_omega(complete_graph(n), n);
        REQUIRE(full);
        CHECK(full->clique_s->empty());
    }

    CHECK(! recognize_omega(star_graph(3), 1));
    CHECK(! recognize_omega(path_graph(5), 1));
    CHECK_THROWS_AS((void) recognize_omega(path_graph(4), 0), std::invalid_argument);
}

TEST_CASE("sigma recognition")
{
    auto c4 = recognize_sigma(cycle_graph(4));
    REQUIRE(c4);
    CHECK(*c4->clique_s == set_of(4, {0, 1}));

    auto k2 = recognize_sigma(complete_graph(2));
    REQUIRE(k2);
    CHECK(k2->clique_s->empty());

    CHECK(! recognize_sigma(complete_graph(3)));
    CHECK(recognize_sigma(path_graph(3)));
    CHECK(! recognize_sigma(star_graph(3)));
}

TEST_CASE("gamma recognition")
{
    auto c4 = recognize_gamma(cycle_graph(4));
    REQUIRE(c4);
    CHECK(c4->k == 1);
    CHECK(c4->matching_h == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(c4->private_neighbours.at(0) == std::vector<int>{3});
    CHECK(c4->private_neighbours.at(1) == std::vector<int>{2});
    CHECK(check_certificate(cycle_graph(4), *c4));

    auto k2 = recognize_gamma(complete_graph(2));
    REQUIRE(k2);
    CHECK(k2->k == 0);

    CHECK(! recognize_gamma(complete_graph(3)));
    CHECK_THROWS_AS((void) recognize_gamma(complete_graph(1)), std::invalid_argument);
    CHECK_THROWS_AS((void) recognize_gamma(Graph(2)), std::invalid_argument);
}

TEST_CASE("gamma prime recognition")
{
    auto c6 = recognize_gamma_prime(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->independent_h == std::vector<int>{0, 3});
    CHECK(c6->k == 2);
    CHECK(check_certificate(cycle_graph(6), *c6));

    auto k2 = recognize_gamma_prime(complete_graph(2));
    REQUIRE(k2);
    CHECK(k2->independent_h == std::vector<int>{0});

    CHECK(! recognize_gamma_prime(cycle_graph(4)));
    CHECK(recognize_gamma_prime(complete_graph(1)));
    CHECK_THROWS_AS((void) recognize_gamma_prime(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS((void) recognize_gamma_prime(Graph(3)), std::invalid_argument);
}

TEST_CASE("tampered certificates are rejected")
{
    auto c4 = *recognize_gamma(cycle_graph(4));
    auto bad = c4;
    bad.private_neighbours[0] = {2};
    CHECK(! check_certificate(cycle_graph(4), bad));
    bad = c4;
    bad.k = 2;
    CHECK(! check_certificate(cycle_graph(4), bad));
    bad = c4;
    bad.matching_h = {{0, 2}};
    CHECK(! check_certificate(cycle_graph(4), bad));

    auto p4 = *recognize_omega(path_graph(4), 1);
    bad = p4;
    bad.clique_s = set_of(4, {0, 1});
    CHECK(! check_certificate(path_graph(4), bad));
    bad = p4;
    bad.clique_s = set_of(4, {0, 2});
    CHECK(! check_certificate(path_graph(4), bad));

    auto c6 = *recognize_gamma_prime(cycle_graph(6));
    bad = c6;
    bad.independent_h = {0, 2};
    CHECK(! check_certificate(cycle_graph(6), bad));
    bad = c6;
    bad.private_neighbours.erase(3);
    CHECK(! check_certificate(cycle_graph(6), bad));

    CHECK(! check_certificate(cycle_graph(6), c4));
}

TEST_CASE("generator examples")
{
    auto c4 = generate_family(GammaParams{1, 1, {{0, 1}}});
    CHECK(are_isomorphic(c4, cycle_graph(4)));

    auto k2 = generate_family(SigmaParams{0, 1, {}});
    CHECK(k2 == complete_graph(2));

    auto p4 = generate_family(OmegaParams{1, 2, 2, {}, {{0}, {1}}});
    CHECK(are_isomorphic(p4, path_graph(4)));

    auto c6 = generate_family(GammaPrimeParams{2, 2, {{0, 2}, {1, 3}}});
    CHECK(are_isomorphic(c6, cycle_graph(6)));
}

TEST_CASE("generator rejects bad parameters")
{
    // outside part not (k−1)-regular
    CHECK_THROWS_AS((void) generate_family(OmegaParams{2, 1, 3, {{0, 1}}, {{0, 1}}}), std::invalid_argument);
    // wrong attachment count
    CHECK_THROWS_AS((void) generate_family(OmegaParams{1, 1, 2, {}, {{0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS((void) generate_family(OmegaParams{1, 2, 2, {}, {{0}}}), std::invalid_argument);
    CHECK_THROWS_AS((void) generate_family(SigmaParams{1, 1, {5}}), std::invalid_argument);
    // private vertices of Γ need k neighbours among themselves
    CHECK_THROWS_AS((void) generate_family(GammaParams{1, 1, {}}), std::invalid_argument);
    // two disjoint K₂ are disconnected
    CHECK_THROWS_AS((void) generate_family(GammaParams{2, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS((void) generate_family(GammaPrimeParams{0, 1, {}}), std::invalid_argument);
    CHECK_THROWS_AS((void) generate_family(GammaPrimeParams{1, 2, {{0, 0}}}), std::invalid_argument);

    std::mt19937_64 rng(1);
    CHECK_THROWS_AS((void) sample_omega(0, rng), std::invalid_argument);
    CHECK_THROWS_AS((void) sample_gamma(2, 0, rng), std::invalid_argument);
}

TEST_CASE("sampled members are recognized")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        for (int k = 1; k <= 3; ++k) {
            auto g = generate_family(sample_omega(k, rng));
            auto w = recognize_omega(g, k);
            REQUIRE(w);
            CHECK(check_certificate(g, *w));
        }
        auto s = generate_family(sample_sigma(rng));
        auto ws = recognize_sigma(s);
        REQUIRE(ws);
        CHECK(check_certificate(s, *ws));

        for (int t = 1; t <= 3; ++t) {
            auto g = generate_family(sample_gamma(t, 1 + i % 3, rng));
            auto w = recognize_gamma(g);
            REQUIRE(w);
            CHECK(check_certificate(g, *w));
            CHECK(open_packing_number(g).value * g.min_degree() == g.order());
        }

        auto gp = generate_family(sample_gamma_prime(1 + i % 3, 1 + i % 4, rng));
        auto wp = recognize_gamma_prime(gp);
        REQUIRE(wp);
        CHECK(check_certificate(gp, *wp));
    }
}

TEST_CASE("recognizers match the extremal equalities on connected graphs n <= 6")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_connected(n)) {
            long delta = g.min_degree();
            auto rho_o = open_packing_number(g).value;

            auto sigma_value = open_packing_order_size_bound(g).value;
            CHECK(recognize_sigma(g).has_value() == (sigma_value.compare(rho_o) == 0));

            CHECK(recognize_gamma(g).has_value() == (rho_o * delta == n));

            for (int k = 1; k <= g.max_degree(); ++k) {
                auto bound = lk_order_size_bound(g, k);
                if (! bound.applicable)
                    continue;
                bool tight = bound.value.compare(limited_packing_number(g, k).value) == 0;
                CHECK(recognize_omega(g, k).has_value() == tight);
            }
        }
}
