#include <gtest/gtest.h>

#include <map>

#include "pathcolor/errors.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/reduction.hpp"

using namespace pathcolor;

namespace {

void expect_structure(const Graph& g) {
    const int n = g.n();
    const auto r = build_reduction(g);
    EXPECT_EQ(r.gstar.n(), 2 * n + n * (n - 1));
    std::map<int, int> uses;
    for (int c : r.coloring.colors()) ++uses[c];
    EXPECT_EQ(static_cast<int>(uses.size()), n + n * (n - 1) / 2);
    for (const auto& [color, times] : uses) EXPECT_EQ(times, 2) << "color " << color;

    for (int i = 0; i < n; ++i) {
        EXPECT_EQ(r.coloring[r.up[static_cast<std::size_t>(i)]], i + 1);
        EXPECT_EQ(r.coloring[r.down[static_cast<std::size_t>(i)]], i + 1);
        const auto& p = r.connecting_paths[static_cast<std::size_t>(i)];
        ASSERT_EQ(static_cast<int>(p.size()), n + 1);
        EXPECT_TRUE(is_simple_path(r.gstar, p));
        // Induced: no chords.
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 2; b < p.size(); ++b) EXPECT_FALSE(r.gstar.adjacent(p[a], p[b]));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) {
            const int want = n + (i - 1) * (i - 2) / 2 + j;
            EXPECT_EQ(r.coloring[r.connector.at({i - 1, j - 1})], want);
            EXPECT_EQ(r.coloring[r.connector.at({j - 1, i - 1})], want);
        }
    for (const Edge& e : g.edges()) {
        EXPECT_TRUE(r.gstar.adjacent(e.u, e.v));
        EXPECT_TRUE(r.gstar.adjacent(n + e.u, n + e.v));
        EXPECT_FALSE(r.gstar.adjacent(e.u, n + e.v));
    }
}

}  // namespace

TEST(Reduction, Sizes) {
    const auto k2 = build_reduction(complete_graph(2));
    EXPECT_EQ(k2.gstar.n(), 6);
    EXPECT_EQ(k2.coloring.k(), 3);
    const auto p3 = build_reduction(path_graph(3));
    EXPECT_EQ(p3.gstar.n(), 12);
    EXPECT_EQ(p3.coloring.k(), 6);
    EXPECT_THROW(build_reduction(Graph(1)), GraphError);
}

TEST(Reduction, Layout) {
    const auto r = build_reduction(path_graph(3));
    EXPECT_EQ(r.up, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(r.down, (std::vector<Vertex>{3, 4, 5}));
    EXPECT_EQ(r.connector.at({0, 1}), 6);
    EXPECT_EQ(r.connector.at({0, 2}), 7);
    EXPECT_EQ(r.connector.at({1, 0}), 8);
    EXPECT_EQ(r.connector.at({2, 1}), 11);
    EXPECT_EQ(r.connecting_paths[1], (std::vector<Vertex>{1, 8, 9, 4}));
    EXPECT_EQ(r.gstar.labels(8).at("role"), "connector");
}

TEST(Reduction, StructureOnAllSmallGraphs) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : all_labeled_graphs(n)) expect_structure(g);
}

TEST(Reduction, ConnectorColorsOnFourVertices) {
    const auto r = build_reduction(cycle_graph(4));
    std::vector<int> got;
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) got.push_back(r.coloring[r.connector.at({i, j})]);
    EXPECT_EQ(got, (std::vector<int>{5, 6, 7, 8, 9, 10}));
}

TEST(Hamiltonian, Examples) {
    EXPECT_EQ(*hamiltonian_path_exists(path_graph(4)), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_FALSE(hamiltonian_path_exists(star_graph(3)));
    EXPECT_TRUE(hamiltonian_path_exists(cycle_graph(5)));
    EXPECT_THROW(hamiltonian_path_exists(path_graph(13)), ResourceError);
}

TEST(Equivalence, Examples) {
    const auto k2 = check_reduction_equivalence(complete_graph(2));
    EXPECT_EQ(k2.agreement, Agreement::agree);
    ASSERT_TRUE(k2.zigzag);
    const auto r = build_reduction(complete_graph(2));
    std::vector<int> colors;
    for (Vertex v : *k2.zigzag) colors.push_back(r.coloring[v]);
    EXPECT_EQ(colors, (std::vector<int>{1, 3, 1, 2, 3, 2}));

    const auto empty = check_reduction_equivalence(Graph(2));
    EXPECT_FALSE(empty.has_hamiltonian_path);
    EXPECT_EQ(empty.cf_outcome, Outcome::valid);
    EXPECT_EQ(empty.agreement, Agreement::agree);

    int connected = 0;
    for (const auto& g : all_labeled_graphs(4)) {
        if (!g.connected()) continue;
        ++connected;
        EXPECT_EQ(check_reduction_equivalence(g).agreement, Agreement::agree);
    }
    EXPECT_EQ(connected, 38);  // labeled; 6 up to isomorphism
}

TEST(Equivalence, ZigzagIsAViolatingPathForEveryHamiltonianOrder) {
    for (int n = 2; n <= 5; ++n) {
        const Graph g = path_graph(n);
        const auto r = build_reduction(g);
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        const auto z = zigzag_path(r, order);
        EXPECT_EQ(static_cast<int>(z.size()), r.gstar.n());
        EXPECT_TRUE(is_simple_path(r.gstar, z));
        EXPECT_TRUE(path_violates(ColoringKind::conflict_free, r.coloring, z));
    }
}

TEST(Equivalence, BudgetExhaustionIsInconclusive) {
    const auto r = check_reduction_equivalence(Graph(4), 5);
    EXPECT_EQ(r.agreement, Agreement::inconclusive);
}
