#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pathcolor/coloring.hpp"
#include "pathcolor/errors.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/reduction.hpp"

using namespace pathcolor;

namespace {

std::vector<Vertex> witness(const Verdict& v) { return v.witness ? v.witness->vertices() : std::vector<Vertex>{}; }

}  // namespace

TEST(Coloring, RejectsNonPositiveColors) {
    EXPECT_THROW(Coloring({1, 0}), GraphError);
    const Coloring c({2, 5, 2});
    EXPECT_EQ(c.k(), 5);
    EXPECT_EQ(c.distinct(), 2);
}

TEST(VerifyProper, Examples) {
    const auto bad = verify_proper(path_graph(2), Coloring({1, 1}));
    EXPECT_TRUE(bad.invalid());
    EXPECT_EQ(witness(bad), (std::vector<Vertex>{0, 1}));
    EXPECT_TRUE(verify_proper(complete_graph(3), Coloring({1, 2, 3})).valid());
    EXPECT_TRUE(verify_proper(path_graph(3), Coloring({1, 2, 1})).valid());
    EXPECT_THROW(verify_proper(path_graph(3), Coloring({1, 2})), GraphError);
}

TEST(VerifyUniqueMaximum, Examples) {
    EXPECT_TRUE(verify_unique_maximum(path_graph(3), Coloring({1, 2, 1})).valid());
    const auto bad = verify_unique_maximum(path_graph(3), Coloring({1, 2, 2}));
    EXPECT_TRUE(bad.invalid());
    EXPECT_EQ(witness(bad), (std::vector<Vertex>{1, 2}));
    const auto c4 = verify_unique_maximum(cycle_graph(4), Coloring({1, 2, 1, 2}));
    EXPECT_TRUE(c4.invalid());
    EXPECT_TRUE(path_violates(ColoringKind::unique_maximum, Coloring({1, 2, 1, 2}), witness(c4)));
    EXPECT_FALSE(oracle::valid(cycle_graph(4), Coloring({1, 2, 1, 2}), ColoringKind::unique_maximum));
}

TEST(VerifyConflictFree, Examples) {
    EXPECT_TRUE(verify_conflict_free(path_graph(3), Coloring({1, 2, 1})).valid());
    const auto p4 = verify_conflict_free(path_graph(4), Coloring({1, 2, 1, 2}));
    EXPECT_TRUE(p4.invalid());
    EXPECT_EQ(witness(p4), (std::vector<Vertex>{0, 1, 2, 3}));

    const auto r = build_reduction(complete_graph(2));
    EXPECT_TRUE(verify_conflict_free(r.gstar, r.coloring).invalid());
}

TEST(VerifyConflictFree, BudgetIsNeverValid) {
    const auto [g, layout] = hedgehog(2);
    const auto v = verify_conflict_free(g, cf_coloring_hedgehog(layout), 10);
    EXPECT_TRUE(v.inconclusive());
    EXPECT_FALSE(v.witness);
}

TEST(Constructors, PathRuler) {
    EXPECT_EQ(um_coloring_path(1).colors(), std::vector<int>{1});
    EXPECT_EQ(um_coloring_path(3).colors(), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(um_coloring_path(7).k(), 3);
    for (int n = 1; n <= 40; ++n) {
        const Coloring c = um_coloring_path(n);
        EXPECT_EQ(c.k(), std::bit_width(static_cast<unsigned>(n)));
        EXPECT_TRUE(verify_unique_maximum(path_graph(n), c).valid());
    }
}

TEST(Constructors, HedgehogConflictFree) {
    EXPECT_EQ(cf_coloring_hedgehog(hedgehog(0).second).colors(), std::vector<int>{1});
    const auto [h1, l1] = hedgehog(1);
    const Coloring c1 = cf_coloring_hedgehog(l1);
    // Clique 0,1,2 then the pendants of clique vertices 1,2,3 (1-based).
    EXPECT_EQ(c1.colors(), (std::vector<int>{1, 2, 3, 2, 3, 1}));
    EXPECT_TRUE(verify_conflict_free(h1, c1).valid());
    EXPECT_TRUE(oracle::valid(h1, c1, ColoringKind::conflict_free));
}

TEST(Constructors, HedgehogUniqueMaximum) {
    EXPECT_EQ(um_coloring_hedgehog(hedgehog(0).second).k(), 1);
    const auto [h1, l1] = hedgehog(1);
    const Coloring c1 = um_coloring_hedgehog(l1);
    EXPECT_EQ(c1.colors(), (std::vector<int>{2, 3, 4, 1, 1, 1}));
    const auto [h2, l2] = hedgehog(2);
    const Coloring c2 = um_coloring_hedgehog(l2);
    EXPECT_LE(c2.k(), 11);
    EXPECT_TRUE(verify_unique_maximum(h2, c2).valid());
}

TEST(BruteForce, AgreesOnAllSmallPathColorings) {
    const Graph p4 = path_graph(4);
    std::vector<int> c(4, 1);
    int checked = 0;
    while (true) {
        const Coloring col(c);
        EXPECT_EQ(verify_unique_maximum(p4, col).outcome,
                  brute_force_verify(p4, col, ColoringKind::unique_maximum).outcome);
        ++checked;
        std::size_t i = 0;
        while (i < 4 && c[i] == 3) c[i++] = 1;
        if (i == 4) break;
        ++c[i];
    }
    EXPECT_EQ(checked, 81);
}

TEST(BruteForce, AgreesOnRandomGridColorings) {
    const Graph g3 = grid_graph(3).first;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> color(1, 5);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> c(9);
        for (auto& x : c) x = color(rng);
        const Coloring col(c);
        const auto fast = verify_conflict_free(g3, col);
        const auto slow = brute_force_verify(g3, col, ColoringKind::conflict_free);
        ASSERT_EQ(fast.outcome, slow.outcome) << "trial " << t;
        if (fast.invalid()) EXPECT_TRUE(path_violates(ColoringKind::conflict_free, col, witness(fast)));
    }
}

TEST(BruteForce, SingleVertex) {
    const Graph k1 = Graph(1);
    for (auto kind : {ColoringKind::unique_maximum, ColoringKind::conflict_free, ColoringKind::proper})
        EXPECT_TRUE(brute_force_verify(k1, Coloring({4}), kind).valid());
}
