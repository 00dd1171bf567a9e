#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pathcolor/errors.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/graph.hpp"

using namespace pathcolor;

TEST(VertexSubset, SetOperations) {
    VertexSubset a(70, {1, 5, 69});
    VertexSubset b(70, {5, 6});
    EXPECT_EQ((a | b).count(), 4);
    EXPECT_EQ((a & b).members(), std::vector<Vertex>{5});
    EXPECT_EQ((a - b).members(), (std::vector<Vertex>{1, 69}));
    EXPECT_TRUE(a.contains(69));
    EXPECT_FALSE(a.contains(68));
    EXPECT_EQ(a.first(), 1);
    EXPECT_EQ(a.next(5), 69);
    EXPECT_THROW(a.insert(70), GraphError);
    EXPECT_THROW(a |= VertexSubset(3), GraphError);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph(3, {{0, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
    const Graph g(3, {{2, 1}, {0, 1}});
    EXPECT_EQ(g.edges().front(), Edge(0, 1));
    EXPECT_TRUE(g.adjacent(1, 2) && g.adjacent(2, 1));
    EXPECT_EQ(std::vector<Vertex>(g.neighbors(1).begin(), g.neighbors(1).end()), (std::vector<Vertex>{0, 2}));
}

TEST(Components, Examples) {
    const Graph p3 = path_graph(3);
    ASSERT_EQ(connected_components(p3, p3.all()).size(), 1u);
    const auto split = connected_components(p3, VertexSubset(3, {0, 2}));
    ASSERT_EQ(split.size(), 2u);
    EXPECT_EQ(split[0].members(), std::vector<Vertex>{0});
    EXPECT_EQ(split[1].members(), std::vector<Vertex>{2});
    EXPECT_EQ(connected_components(grid_graph(2).first).size(), 1u);
    EXPECT_TRUE(connected_components(p3, p3.none()).empty());
}

TEST(Separator, Examples) {
    const Graph p3 = path_graph(3);
    EXPECT_TRUE(is_separator(p3, VertexSubset(3, {1})));
    EXPECT_FALSE(is_separator(p3, VertexSubset(3, {0})));
    const Graph k4 = complete_graph(4);
    EXPECT_TRUE(is_separator(k4, k4.all()));
    EXPECT_THROW(is_separator(Graph(2), VertexSubset(2)), GraphError);
}

TEST(Minors, ContractEdgeCarriesMaxColor) {
    const auto r = contract_edge(path_graph(3), Coloring({1, 2, 1}), Edge(0, 1));
    EXPECT_EQ(r.graph, path_graph(2));
    ASSERT_TRUE(r.coloring);
    EXPECT_EQ(r.coloring->colors(), (std::vector<int>{2, 1}));
    EXPECT_EQ(r.renumber, (std::vector<Vertex>{0, 0, 1}));

    EXPECT_EQ(contract_edge(complete_graph(3), std::nullopt, Edge(1, 2)).graph, complete_graph(2));
    const Graph pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    EXPECT_EQ(contract_edge(pendant, std::nullopt, Edge(2, 3)).graph, complete_graph(3));
    EXPECT_THROW(contract_edge(path_graph(3), std::nullopt, Edge(0, 2)), GraphError);
}

TEST(Minors, Deletions) {
    const auto r = delete_vertex(path_graph(3), 1);
    EXPECT_EQ(r.graph, Graph(2));
    EXPECT_EQ(r.renumber, (std::vector<Vertex>{0, -1, 1}));
    EXPECT_EQ(delete_edge(complete_graph(3), Edge(0, 2)), path_graph(3));
    EXPECT_EQ(delete_vertex(Graph(1), 0).graph.n(), 0);
    EXPECT_THROW(delete_vertex(path_graph(2), 5), GraphError);
    EXPECT_THROW(delete_edge(path_graph(3), Edge(0, 2)), GraphError);
}

TEST(Enumeration, Examples) {
    std::vector<std::vector<Vertex>> seen;
    auto collect = [&](std::span<const Vertex> p) {
        seen.emplace_back(p.begin(), p.end());
        return true;
    };
    const Graph p2 = path_graph(2);
    auto r = enumerate_simple_paths(p2, p2.all(), 100, collect);
    EXPECT_EQ(r.status, EnumerationStatus::exhausted);
    EXPECT_EQ(seen.size(), 3u);

    const Graph k3 = complete_graph(3);
    r = enumerate_simple_paths(k3, k3.all(), 100, [](auto) { return true; });
    EXPECT_EQ(r.emitted, 9u);
    EXPECT_EQ(oracle::count_paths(k3), 9u);

    const Graph p3 = path_graph(3);
    r = enumerate_simple_paths(p3, p3.all(), 2, [](auto) { return true; });
    EXPECT_EQ(r.status, EnumerationStatus::budget_exceeded);
    EXPECT_EQ(r.emitted, 2u);
}

TEST(Enumeration, MatchesPermutationCountOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(2 + trial % 6, 0.5, rng);
        std::set<std::vector<Vertex>> seen;
        enumerate_simple_paths(g, g.all(), 1'000'000, [&](std::span<const Vertex> p) {
            std::vector<Vertex> v(p.begin(), p.end());
            EXPECT_TRUE(PathWitness(v).is_path_in(g));
            EXPECT_TRUE(v.size() == 1 || v.front() < v.back());
            EXPECT_TRUE(seen.insert(v).second);
            return true;
        });
        EXPECT_EQ(seen.size(), oracle::count_paths(g));
    }
}

TEST(Ordering, Examples) {
    const Graph p3 = path_graph(3);
    EXPECT_EQ(always_connected_ordering(p3, p3.all()), (std::vector<Vertex>{0, 1, 2}));
    const Graph star = star_graph(3);
    EXPECT_EQ(always_connected_ordering(star, star.all()), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(always_connected_ordering(p3, VertexSubset(3, {2})), std::vector<Vertex>{2});
    EXPECT_THROW(always_connected_ordering(p3, VertexSubset(3, {0, 2})), GraphError);
    EXPECT_THROW(always_connected_ordering(p3, p3.none()), GraphError);
}

TEST(PathWitness, CanonicalOrientation) {
    const PathWitness w({3, 2, 1});
    EXPECT_EQ(w.vertices(), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_TRUE(w.is_path_in(path_graph(4)));
    EXPECT_FALSE(PathWitness({0, 2}).is_path_in(path_graph(4)));
}

TEST(Hamiltonian, SubsetDp) {
    EXPECT_TRUE(find_hamiltonian_path(path_graph(4), path_graph(4).all()));
    EXPECT_FALSE(find_hamiltonian_path(star_graph(3), star_graph(3).all()));
    const auto c5 = find_hamiltonian_path(cycle_graph(5), cycle_graph(5).all());
    ASSERT_TRUE(c5);
    EXPECT_TRUE(is_simple_path(cycle_graph(5), *c5));
    EXPECT_EQ(c5->size(), 5u);
}
