#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "srg/error.hpp"
#include "srg/graph.hpp"

#include <random>

using srg::Graph;

TEST_CASE("basic construction")
{
    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 1);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), srg::InputError);
    CHECK_THROWS_AS(g.add_edge(0, 4), srg::InputError);
    CHECK_THROWS_AS(Graph(63), srg::InputError);
}

TEST_CASE("named graphs")
{
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::cycle(7).edge_count() == 7);
    CHECK(Graph::path(7).edge_count() == 6);
    const Graph p = Graph::petersen();
    CHECK(p.edge_count() == 15);
    CHECK(srg::is_strongly_regular(p, {10, 3, 0, 1}).is_srg);
}

TEST_CASE("relabeling preserves structure")
{
    const Graph g = fixtures::petersen();
    std::vector<srg::Vertex> perm{3, 1, 4, 0, 9, 2, 6, 5, 8, 7};
    const Graph h = g.relabeled(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v)
            CHECK(g.adjacent(u, v) == h.adjacent(perm[u], perm[v]));
}

TEST_CASE("strong regularity agrees with the naive reference")
{
    for (const auto& f : fixtures::property_graphs()) {
        CAPTURE(f.name);
        CHECK(srg::is_strongly_regular(f.graph, f.params).is_srg);
        CHECK(fixtures::naive_is_srg(f.graph, f.params));
    }

    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2)
                    g.add_edge(u, v);
        const srg::SrgParams p{n, g.degree(0), static_cast<std::int64_t>(rng() % 3), static_cast<std::int64_t>(rng() % 3)};
        CHECK(srg::is_strongly_regular(g, p).is_srg == fixtures::naive_is_srg(g, p));
    }
}

TEST_CASE("violations are reported")
{
    SUBCASE("degree")
    {
        const auto r = srg::is_strongly_regular(Graph::path(5), {5, 2, 0, 1});
        CHECK_FALSE(r.is_srg);
        REQUIRE(r.degree_violation);
        CHECK(r.degree_violation->v == 0);
        CHECK(r.degree_violation->observed_degree == 1);
    }
    SUBCASE("mu")
    {
        // C6 is 2-regular with lambda = 0, but opposite vertices share no neighbour
        const auto r = srg::is_strongly_regular(Graph::cycle(6), {6, 2, 0, 1});
        CHECK_FALSE(r.is_srg);
        REQUIRE(r.violating_pair);
        CHECK_FALSE(r.violating_pair->adjacent);
        CHECK(r.violating_pair->expected == 1);
        CHECK(r.violating_pair->observed_common != 1);
    }
    SUBCASE("lambda")
    {
        const auto r = srg::is_strongly_regular(fixtures::paley9(), {9, 4, 0, 2});
        REQUIRE(r.violating_pair);
        CHECK(r.violating_pair->adjacent);
        CHECK(r.violating_pair->observed_common == 1);
    }
    CHECK_THROWS_AS(srg::is_strongly_regular(Graph::cycle(5), {6, 2, 0, 1}), srg::InputError);
}

TEST_CASE("triangle counts")
{
    for (const auto& f : fixtures::property_graphs()) {
        CAPTURE(f.name);
        CHECK(srg::triangle_count(f.graph) == fixtures::naive_triangles(f.graph));
        long long sum = 0;
        for (int v = 0; v < f.graph.order(); ++v)
            sum += srg::triangles_through(f.graph, v);
        CHECK(sum == 3 * srg::triangle_count(f.graph));
    }
    CHECK(srg::triangle_count(Graph::complete(6)) == 20);
    CHECK_THROWS_AS(srg::triangles_through(Graph::complete(3), 3), srg::InputError);
}

TEST_CASE("induced subgraph")
{
    const Graph g = fixtures::petersen();
    const Graph h = srg::induced_subgraph(g, srg::bit(0) | srg::bit(1) | srg::bit(7));
    CHECK(h.order() == 3);
    CHECK(h.adjacent(0, 1) == g.adjacent(0, 1));
    CHECK(h.adjacent(1, 2) == g.adjacent(1, 7));
    CHECK(h.adjacent(0, 2) == g.adjacent(0, 7));
}

TEST_CASE("common neighbours match the naive count")
{
    const Graph g = fixtures::paley13();
    for (int u = 0; u < 13; ++u)
        for (int v = u + 1; v < 13; ++v)
            CHECK(srg::common_neighbors(g, u, v) == fixtures::naive_common(g, u, v));
}
