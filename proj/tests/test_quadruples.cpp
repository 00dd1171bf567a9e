#include <gtest/gtest.h>

#include <set>

#include "pathcolor/errors.hpp"
#include "pathcolor/quadruples.hpp"

using namespace pathcolor;

namespace {

// A closed walk visiting every listed vertex once, consecutive (and last-first) adjacent.
bool is_cycle(const Graph& g, const std::vector<Vertex>& c) {
    if (c.size() < 3) return false;
    if (std::set<Vertex>(c.begin(), c.end()).size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

bool cycle_has_edge(const std::vector<Vertex>& c, const Edge& e) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (Edge(c[i], c[(i + 1) % c.size()]) == e) return true;
    return false;
}

}  // namespace

TEST(QuadrupleMap, LiftAndProject) {
    const QuadrupleMap qm(4);
    EXPECT_EQ(qm.small().n(), 4);
    const auto q = qm.quadruple(3);  // (1,1)
    EXPECT_EQ(q, (std::array<Vertex, 4>{10, 11, 14, 15}));
    for (Vertex v : q) EXPECT_EQ(qm.project(v), 3);
    VertexSubset all_small = qm.small().all();
    EXPECT_EQ(qm.lift(all_small), qm.big().all());
    EXPECT_EQ(qm.project(qm.lift(VertexSubset(4, {1, 2}))), VertexSubset(4, {1, 2}));
    EXPECT_THROW(QuadrupleMap(3), GraphError);
    EXPECT_THROW(QuadrupleMap(0), GraphError);
}

TEST(QuadrupleMap, DEdgesAreGridEdgesFacingTheirDirection) {
    const QuadrupleMap qm(6);
    for (Vertex v = 0; v < qm.small().n(); ++v)
        for (Direction d : kDirections) {
            const Edge e = qm.d_edge(v, d);
            EXPECT_TRUE(qm.big().has_edge(e));
            if (const auto nb = qm.neighbor(v, d)) {
                // Each endpoint of the d-side touches the neighbor's quadruple.
                const Edge f = qm.d_edge(*nb, opposite(d));
                EXPECT_TRUE(qm.big().adjacent(e.u, f.u) || qm.big().adjacent(e.u, f.v));
                EXPECT_TRUE(qm.big().adjacent(e.v, f.u) || qm.big().adjacent(e.v, f.v));
            }
        }
}

TEST(PathSpanningCycle, Examples) {
    const QuadrupleMap q2(2);
    const auto c1 = path_spanning_cycle(VertexSubset(1, {0}), q2);
    EXPECT_EQ(c1, (std::vector<Vertex>{0, 1, 3, 2}));

    const QuadrupleMap q4(4);
    const auto c2 = path_spanning_cycle(VertexSubset(4, {0, 1}), q4);
    EXPECT_EQ(c2.size(), 8u);
    EXPECT_TRUE(is_cycle(q4.big(), c2));
    EXPECT_EQ(VertexSubset(16, c2), q4.lift(VertexSubset(4, {0, 1})));

    const auto c4 = path_spanning_cycle(q4.small().all(), q4);
    EXPECT_EQ(c4.size(), 16u);
    EXPECT_TRUE(is_cycle(q4.big(), c4));

    EXPECT_THROW(path_spanning_cycle(VertexSubset(4, {0, 3}), q4), GraphError);
    EXPECT_THROW(path_spanning_cycle(VertexSubset(4), q4), GraphError);
}

TEST(PathSpanningCycle, OpenSidesStayOnTheCycle) {
    const QuadrupleMap qm(8);
    const VertexSubset s(16, {0, 1, 2, 5, 9, 10, 14});
    const auto c = path_spanning_cycle(s, qm);
    ASSERT_TRUE(is_cycle(qm.big(), c));
    s.for_each([&](Vertex v) {
        for (Direction d : kDirections)
            if (qm.is_open(s, v, d)) EXPECT_TRUE(cycle_has_edge(c, qm.d_edge(v, d))) << v << " " << to_string(d);
    });
}
