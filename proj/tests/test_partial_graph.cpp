#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "srg/error.hpp"
#include "srg/partial_graph.hpp"

using srg::PairState;
using srg::PartialGraph;

TEST_CASE("decisions and undo")
{
    PartialGraph pg(5);
    CHECK(pg.undecided_pairs() == 10);
    CHECK(pg.state(0, 1) == PairState::undecided);
    pg.set_edge(0, 1);
    pg.set_non_edge(1, 2);
    const auto mark = pg.trail_size();
    pg.set_edge(0, 2);
    pg.set_edge(1, 3);
    CHECK(pg.state(2, 0) == PairState::edge);
    CHECK(pg.degree(0) == 2);
    CHECK(pg.committed_common(0, 3) == 1);
    CHECK(pg.undecided_pairs() == 6);

    pg.set_edge(0, 1); // same way: no-op
    CHECK(pg.trail_size() == mark + 2);
    CHECK_THROWS_AS(pg.set_non_edge(0, 1), srg::InputError);
    CHECK_THROWS_AS(pg.set_edge(3, 3), srg::InputError);

    pg.undo_to(mark);
    CHECK(pg.state(0, 2) == PairState::undecided);
    CHECK(pg.state(1, 3) == PairState::undecided);
    CHECK(pg.state(1, 2) == PairState::non_edge);
    CHECK(pg.degree(0) == 1);
}

TEST_CASE("possible common neighbours")
{
    PartialGraph pg(4);
    CHECK(pg.possible_common(0, 1) == 2);
    pg.set_non_edge(0, 2);
    CHECK(pg.possible_common(0, 1) == 1);
    pg.set_edge(0, 3);
    pg.set_edge(1, 3);
    CHECK(pg.committed_common(0, 1) == 1);
    CHECK(pg.possible_common(0, 1) == 1);
}

TEST_CASE("graph round trip")
{
    const auto g = fixtures::petersen();
    const auto pg = PartialGraph::from_graph(g);
    CHECK(pg.complete());
    CHECK(pg.to_graph() == g);
}

TEST_CASE("propagation accepts strongly regular graphs")
{
    for (const auto& f : fixtures::property_graphs()) {
        CAPTURE(f.name);
        auto pg = PartialGraph::from_graph(f.graph);
        const auto r = srg::propagate(pg, f.params);
        CHECK(r.consistent);
        CHECK(r.forced == 0);
    }
}

TEST_CASE("propagation rejects non-examples")
{
    auto c6 = PartialGraph::from_graph(srg::Graph::cycle(6));
    CHECK_FALSE(srg::propagate(c6, {6, 2, 0, 1}).consistent);

    PartialGraph star(4);
    star.set_edge(0, 1);
    star.set_edge(0, 2);
    star.set_edge(0, 3);
    CHECK_FALSE(srg::propagate(star, {4, 2, 0, 1}).consistent);
}

TEST_CASE("propagation forces")
{
    SUBCASE("degree fills a complete graph")
    {
        PartialGraph pg(4);
        const auto r = srg::propagate(pg, {4, 3, 2, 0});
        CHECK(r.consistent);
        CHECK(pg.complete());
        CHECK(pg.to_graph() == srg::Graph::complete(4));
    }
    SUBCASE("lambda cap")
    {
        // in srg(5,2,0,1) the edge 01 has no common neighbour, so 2 ~ 0 forbids 2 ~ 1
        PartialGraph pg(5);
        pg.set_edge(0, 1);
        pg.set_edge(0, 2);
        CHECK(srg::propagate(pg, {5, 2, 0, 1}).consistent);
        CHECK(pg.state(1, 2) == PairState::non_edge);
    }
    SUBCASE("seeded C5 completes")
    {
        PartialGraph pg(5);
        pg.set_edge(0, 1);
        pg.set_edge(0, 2);
        pg.set_edge(1, 3);
        CHECK(srg::propagate(pg, {5, 2, 0, 1}).consistent);
        CHECK(pg.complete());
        CHECK(srg::is_strongly_regular(pg.to_graph(), {5, 2, 0, 1}).is_srg);
    }
}

TEST_CASE("second shared neighbour of an edge contradicts lambda = 1")
{
    PartialGraph pg(9);
    pg.set_edge(0, 1);
    pg.set_edge(0, 2);
    pg.set_edge(1, 2);
    pg.set_edge(0, 3);
    pg.set_edge(1, 3);
    CHECK_FALSE(srg::propagate(pg, {9, 4, 1, 2}).consistent);
}

TEST_CASE("a vertex at degree k forbids new edges")
{
    PartialGraph pg(9);
    for (int v = 1; v <= 4; ++v)
        pg.set_edge(0, v);
    CHECK(srg::propagate(pg, {9, 4, 1, 2}).consistent);
    for (int v = 5; v < 9; ++v)
        CHECK(pg.state(0, v) == PairState::non_edge);
}
