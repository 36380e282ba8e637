#include <packbound/enumerate.hh>
#include <packbound/graph.hh>
#include <packbound/graph6.hh>
#include <packbound/graph_io.hh>
#include <packbound/profile.hh>

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace packbound;

TEST_CASE("vertex set basics")
{
    VertexSet s(10);
    CHECK(s.empty());
    s.insert(3);
    s.insert(7);
    s.insert(3);
    CHECK(s.size() == 2);
    CHECK(s.contains(7));
    CHECK(! s.contains(4));
    CHECK(s.members() == std::vector<int>{3, 7});
    CHECK(s.complement().size() == 8);
    CHECK_THROWS_AS(s.insert(10), std::out_of_range);
    CHECK_THROWS_AS(VertexSet(65), std::invalid_argument);
    CHECK_THROWS_AS(VertexSet::from_bits(3, 0b1000), std::invalid_argument);
    CHECK(VertexSet::full(64).size() == 64);
}

TEST_CASE("graph construction and invariants")
{
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
    Graph p4(4, edges);
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.min_degree() == 1);
    CHECK(p4.max_degree() == 2);
    CHECK(p4.adjacent(2, 1));
    CHECK(p4.closed_neighbours(1).members() == std::vector<int>{0, 1, 2});
    CHECK(p4.is_connected());
    CHECK(p4 == path_graph(4));

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
    std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(3, twice), std::invalid_argument);
    std::vector<Edge> outside{{0, 3}};
    CHECK_THROWS_AS(Graph(3, outside), std::invalid_argument);

    CHECK(! Graph(2).is_connected());
    CHECK(Graph(1).is_connected());
}

TEST_CASE("handshake lemma on random graphs")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph(1 + i % 40, 0.3, rng);
        int total = 0;
        for (int v = 0; v < g.order(); ++v) {
            total += g.degree(v);
            for (auto w : g.neighbours(v))
                CHECK(g.adjacent(w, v));
            CHECK(! g.adjacent(v, v));
        }
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 hand-encoded records")
{
    // K2: one bit x01 = 1 -> 100000 -> 32 + 63 = '_'
    auto k2 = parse_graph6("A_");
    CHECK(k2 == complete_graph(2));
    // K3: x01 x02 x12 = 111 -> 111000 -> 56 + 63 = 'w'
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("?") == Graph(0));

    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("A_\r\n") == complete_graph(2));
}

TEST_CASE("graph6 rejects malformed records")
{
    CHECK_THROWS_AS((void) parse_graph6(""), ParseError);
    CHECK_THROWS_AS((void) parse_graph6("B"), ParseError);        // truncated
    CHECK_THROWS_AS((void) parse_graph6("A__"), ParseError);      // trailing data
    CHECK_THROWS_AS((void) parse_graph6("A "), ParseError);       // below 63
    CHECK_THROWS_AS((void) parse_graph6("~?@A"), ParseError);     // long form
    CHECK_THROWS_AS((void) to_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 agrees with an independent encoder")
{
    // Produced by networkx's graph6 writer from its graph atlas.
    std::ifstream in(PACKBOUND_TEST_DATA "/atlas_connected_le6.g6");
    REQUIRE(in);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        auto g = parse_graph6(line);
        CHECK(to_graph6(g) == line);
        ++count;
    }
    CHECK(count == 143);
}

TEST_CASE("graph6 round trip")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_connected(n))
            CHECK(parse_graph6(to_graph6(g)) == g);

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(i % 31, 0.4, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge list format")
{
    auto g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list(to_edge_list(cycle_graph(5))) == cycle_graph(5));
    CHECK_THROWS_AS((void) parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS((void) parse_edge_list("3 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS((void) parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK(looks_like_edge_list_header("12 30"));
    CHECK(! looks_like_edge_list_header("Bw"));
}

TEST_CASE("record reader auto-detects format")
{
    std::istringstream g6("A_\nBw\n\nbogus line\n@\n");
    auto records = read_graphs(g6);
    REQUIRE(records.size() == 4);
    CHECK(records[0].graph == complete_graph(2));
    CHECK(records[1].graph == complete_graph(3));
    CHECK(! records[2].graph);
    CHECK(records[2].line == 4);
    CHECK(! records[2].error.empty());
    CHECK(records[3].graph == Graph(1));

    std::istringstream el("3 3\n0 1\n1 2\n0 2\n2 1\n0 1\n");
    auto blocks = read_graphs(el);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].graph == complete_graph(3));
    CHECK(blocks[1].graph == complete_graph(2));

    std::istringstream empty("");
    CHECK(read_graphs(empty).empty());
}

TEST_CASE("structural profile")
{
    SUBCASE("star K_{1,3}")
    {
        auto p = structural_profile(star_graph(3));
        CHECK(p.pendant_count() == 3);
        CHECK(p.support_count() == 1);
        CHECK(p.weak_support_count() == 0);
        CHECK(p.pendant_count_per_support.at(0) == 3);
        CHECK(p.delta_star == 3);
    }
    SUBCASE("path P4")
    {
        auto p = structural_profile(path_graph(4));
        CHECK(p.pendant_count() == 2);
        CHECK(p.support_count() == 2);
        CHECK(p.weak_support_count() == 2);
        CHECK(p.delta_star == 2);
    }
    SUBCASE("cycle C4")
    {
        auto p = structural_profile(cycle_graph(4));
        CHECK(p.pendant_count() == 0);
        CHECK(p.support_count() == 0);
        CHECK(p.weak_support_count() == 0);
        CHECK(p.delta_star == 2);
    }
    SUBCASE("K2 has no delta*")
    {
        auto p = structural_profile(complete_graph(2));
        CHECK(p.pendant_count() == 2);
        CHECK(! p.delta_star);
    }
}

TEST_CASE("augment weak supports")
{
    auto spider = augment_weak_supports(path_graph(4));
    CHECK(spider.order() == 6);
    auto p = structural_profile(spider);
    CHECK(p.pendant_count() == 4);
    CHECK(p.support_count() == 2);
    CHECK(p.weak_support_count() == 0);
    CHECK(p.delta_star == 3);
    std::vector<Edge> h_edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
    CHECK(are_isomorphic(spider, Graph(6, h_edges)));
    CHECK(spider.induced(VertexSet::from_members(6, {0, 1, 2, 3})) == path_graph(4));

    CHECK(augment_weak_supports(cycle_graph(4)) == cycle_graph(4));
    CHECK(augment_weak_supports(star_graph(3)) == star_graph(3));

    CHECK_THROWS_AS((void) augment_weak_supports(complete_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS((void) augment_weak_supports(Graph(3)), std::invalid_argument);
}

TEST_CASE("augmentation properties over all connected graphs n <= 7")
{
    int raised = 0;
    for (int n = 3; n <= 7; ++n)
        for (const auto & g : enumerate_connected(n)) {
            auto before = structural_profile(g);
            auto h = augment_weak_supports(g);
            auto after = structural_profile(h);
            CHECK(h.order() == g.order() + before.weak_support_count());
            CHECK(after.pendant_count() == before.pendant_count() + before.weak_support_count());
            CHECK(after.support_count() == before.support_count());
            // supports gain degree, so δ* can only rise; P₄ is the smallest case where it does
            REQUIRE(after.delta_star);
            CHECK(*after.delta_star >= *before.delta_star);
            if (*after.delta_star != *before.delta_star)
                ++raised;
            for (const auto & [support, pendants] : after.pendant_count_per_support)
                CHECK(pendants >= 2);
            if (before.weak_supports.empty())
                CHECK(h == g);
        }
    MESSAGE("augmentation raised delta* on " << raised << " graphs");
}

TEST_CASE("augmentation can raise delta*")
{
    auto p4 = structural_profile(path_graph(4));
    auto spider = structural_profile(augment_weak_supports(path_graph(4)));
    CHECK(*p4.delta_star == 2);
    CHECK(*spider.delta_star == 3);
}
