#include "oracles.hh"

#include <packbound/enumerate.hh>
#include <packbound/graph6.hh>

#include <doctest.h>

#include <random>
#include <set>

using namespace packbound;

TEST_CASE("enumeration matches brute force over labelled graphs")
{
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        auto expected = oracle::connected_classes(n);
        std::set<std::uint64_t> produced;
        auto graphs = enumerate_connected(n);
        for (const auto & g : graphs) {
            CHECK(g.is_connected());
            produced.insert(oracle::canonical_code(n, oracle::adjacency_of(g)));
        }
        CHECK(produced.size() == graphs.size());
        CHECK(produced == expected);
    }
}

TEST_CASE("class counts")
{
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(6).size() == 112);
}

TEST_CASE("n = 7 has 853 pairwise non-isomorphic connected graphs")
{
    auto graphs = enumerate_connected(7);
    CHECK(graphs.size() == 853);
    std::set<std::uint64_t> codes;
    for (const auto & g : graphs) {
        CHECK(g.is_connected());
        codes.insert(oracle::canonical_code(7, oracle::adjacency_of(g)));
    }
    CHECK(codes.size() == 853);
}

TEST_CASE("enumeration is deterministic and range-checked")
{
    auto a = enumerate_connected(5), b = enumerate_connected(5);
    CHECK(a == b);
    CHECK(to_graph6(enumerate_connected(1).front()) == "@");
    CHECK_THROWS_AS((void) enumerate_connected(0), std::invalid_argument);
    CHECK_THROWS_AS((void) enumerate_connected(8), std::invalid_argument);
}

TEST_CASE("canonical form is a complete invariant on random relabellings")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 8;
        auto g = random_graph(n, 0.45, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        auto h = g.relabel(p);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(are_isomorphic(g, h));
    }
    CHECK(! are_isomorphic(path_graph(4), star_graph(3)));
    CHECK_THROWS_AS((void) canonical_form(Graph(12)), std::invalid_argument);
}
