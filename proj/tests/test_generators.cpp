#include <gtest/gtest.h>

#include "pathcolor/errors.hpp"
#include "pathcolor/generators.hpp"

using namespace pathcolor;

TEST(Generators, BasicFamilies) {
    EXPECT_EQ(path_graph(3).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_EQ(complete_graph(4).edge_count(), 6);
    EXPECT_EQ(path_graph(0).n(), 0);

    const Graph b4 = complete_binary_tree(4);
    EXPECT_EQ(b4.n(), 15);
    int leaves = 0;
    for (Vertex v = 0; v < b4.n(); ++v) leaves += b4.degree(v) == 1;
    EXPECT_EQ(leaves, 8);
    EXPECT_TRUE(b4.adjacent(3, 7) && b4.adjacent(3, 8));
    for (int levels = 1; levels <= 8; ++levels) EXPECT_EQ(complete_binary_tree(levels).n(), (1 << levels) - 1);
}

TEST(Generators, Grid) {
    // 4-cycle 0-1-3-2.
    EXPECT_EQ(grid_graph(2).first.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    const auto [g3, layout] = grid_graph(3);
    EXPECT_EQ(g3.n(), 9);
    EXPECT_EQ(g3.edge_count(), 12);
    EXPECT_EQ(grid_graph(1).first.n(), 1);
    EXPECT_EQ(layout.id(2, 1), 5);

    for (int m = 2; m <= 7; ++m) {
        const auto [g, l] = grid_graph(m);
        EXPECT_EQ(g.edge_count(), 2 * m * (m - 1));
        for (Vertex v = 0; v < g.n(); ++v) {
            const bool bx = l.x(v) == 0 || l.x(v) == m - 1;
            const bool by = l.y(v) == 0 || l.y(v) == m - 1;
            EXPECT_EQ(g.degree(v), 4 - bx - by);
            for (Vertex w = 0; w < g.n(); ++w)
                EXPECT_EQ(g.adjacent(v, w), std::abs(l.x(v) - l.x(w)) + std::abs(l.y(v) - l.y(w)) == 1);
        }
    }
}

TEST(Generators, HedgehogStructure) {
    EXPECT_EQ(hedgehog(0).first.n(), 1);
    EXPECT_EQ(hedgehog(1).first.n(), 6);
    EXPECT_EQ(hedgehog(2).first.n(), 49);
    EXPECT_EQ(hedgehog_order(3), 15 * 50);
    EXPECT_THROW(hedgehog(5, 1000), ResourceError);

    for (int k = 1; k <= 3; ++k) {
        const auto [g, layout] = hedgehog(k);
        const int clique = (1 << (k + 1)) - 1;
        ASSERT_EQ(static_cast<int>(layout.clique.size()), clique);
        EXPECT_EQ(g.n(), hedgehog_order(k));
        for (int i = 0; i < clique; ++i) {
            EXPECT_EQ(layout.clique[static_cast<std::size_t>(i)], i);
            for (int j = i + 1; j < clique; ++j) EXPECT_TRUE(g.adjacent(i, j));
        }
        EXPECT_EQ(layout.port, 0);
        for (int i = 0; i < clique; ++i) {
            const auto& copy = layout.copies[static_cast<std::size_t>(i)];
            const auto members = copy.vertices();
            EXPECT_EQ(static_cast<std::int64_t>(members.size()), hedgehog_order(k - 1));
            for (Vertex v : members)
                for (int c = 0; c < clique; ++c)
                    EXPECT_EQ(g.adjacent(v, c), c == i && v == copy.port) << "k=" << k << " v=" << v;
        }
    }
}
