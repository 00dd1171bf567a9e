#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pathcolor/coloring.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/quadruples.hpp"
#include "pathcolor/solvers.hpp"

using namespace pathcolor;

namespace {

constexpr int kCases = 500;

Graph random_connected(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> p(0.25, 0.8);
    while (true) {
        Graph g = random_graph(n, p(rng), rng);
        if (g.connected()) return g;
    }
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Coloring random_coloring(int n, int k, std::mt19937_64& rng) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = pick(rng, 1, k);
    return Coloring(c);
}

/// A random unique-maximum coloring: in each component a random vertex takes
/// the component's top color, then recurse below it.
void random_ranking(const Graph& g, const VertexSubset& within, int top, std::vector<int>& colors,
                    std::mt19937_64& rng) {
    for (const auto& comp : connected_components(g, within)) {
        const auto members = comp.members();
        const Vertex v = members[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(members.size()) - 1))];
        colors[static_cast<std::size_t>(v)] = top;
        VertexSubset rest = comp;
        rest.erase(v);
        random_ranking(g, rest, top - 1 - pick(rng, 0, 1), colors, rng);
    }
}

Coloring random_um_coloring(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
    random_ranking(g, g.all(), 2 * g.n() + 1, colors, rng);
    return Coloring(colors);
}

}  // namespace

TEST(Properties, SubgraphMonotonicity) {
    std::mt19937_64 rng(101);
    for (int t = 0; t < kCases; ++t) {
        const Graph g = random_connected(pick(rng, 2, 6), rng);
        Graph sub;
        if (g.edge_count() > 0 && pick(rng, 0, 1)) {
            sub = delete_edge(g, g.edges()[static_cast<std::size_t>(pick(rng, 0, g.edge_count() - 1))]);
        } else {
            sub = delete_vertex(g, pick(rng, 0, g.n() - 1)).graph;
        }
        EXPECT_LE(chi_um_exact(sub).k, chi_um_exact(g).k) << "case " << t;
        EXPECT_LE(chi_cf_exact(sub).k, chi_cf_exact(g).k) << "case " << t;
    }
}

TEST(Properties, ChromaticChain) {
    std::mt19937_64 rng(202);
    for (int t = 0; t < kCases; ++t) {
        const Graph g = random_graph(pick(rng, 1, 7), 0.5, rng);
        const int chi = chi_exact(g).k;
        const int cf = chi_cf_exact(g).k;
        const int um = chi_um_exact(g).k;
        EXPECT_LE(chi, cf) << "case " << t;
        EXPECT_LE(cf, um) << "case " << t;
        EXPECT_LE(um, (1 << cf) - 1) << "case " << t;
    }
}

TEST(Properties, VertexDeletionLowersChiUmByAtMostOne) {
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_labeled_graphs(n)) {
            if (!g.connected()) continue;
            const int um = chi_um_exact(g).k;
            for (Vertex v = 0; v < n; ++v) {
                ASSERT_GE(chi_um_exact(delete_vertex(g, v).graph).k, um - 1);
                ++checked;
            }
        }
    EXPECT_GE(checked, kCases);
}

namespace {

/// The quotient check: u, w adjacent in the minor iff some preimages are adjacent.
bool is_contraction_quotient(const Graph& g, const MinorResult& r) {
    for (Vertex a = 0; a < r.graph.n(); ++a)
        for (Vertex b = a + 1; b < r.graph.n(); ++b) {
            bool joined = false;
            for (Vertex x = 0; x < g.n(); ++x)
                for (Vertex y = 0; y < g.n(); ++y)
                    if (r.renumber[static_cast<std::size_t>(x)] == a && r.renumber[static_cast<std::size_t>(y)] == b &&
                        g.adjacent(x, y))
                        joined = true;
            if (joined != r.graph.adjacent(a, b)) return false;
        }
    return true;
}

}  // namespace

TEST(Properties, MinorsKeepUniqueMaximumColorings) {
    std::mt19937_64 rng(303);
    for (int t = 0; t < kCases; ++t) {
        Graph g = random_connected(pick(rng, 2, 8), rng);
        Coloring c = random_um_coloring(g, rng);
        ASSERT_TRUE(verify_unique_maximum(g, c).valid());
        const int um_before = chi_um_exact(g).k;
        for (int step = 0; step < 3 && g.n() > 1; ++step) {
            MinorResult r;
            const int op = pick(rng, 0, 2);
            if (op == 0 && g.edge_count() > 0) {
                r = contract_edge(g, c, g.edges()[static_cast<std::size_t>(pick(rng, 0, g.edge_count() - 1))]);
                ASSERT_TRUE(is_contraction_quotient(g, r)) << "case " << t;
            } else if (op == 1 && g.edge_count() > 0) {
                r.graph = delete_edge(g, g.edges()[static_cast<std::size_t>(pick(rng, 0, g.edge_count() - 1))]);
                r.coloring = c;
            } else {
                r = delete_vertex(g, c, pick(rng, 0, g.n() - 1));
            }
            g = r.graph;
            c = *r.coloring;
            EXPECT_TRUE(verify_unique_maximum(g, c).valid()) << "case " << t << " step " << step;
            EXPECT_LE(chi_um_exact(g).k, um_before) << "case " << t;
        }
    }
}

TEST(Properties, ColoringHierarchyAndRestriction) {
    std::mt19937_64 rng(404);
    for (int t = 0; t < kCases; ++t) {
        const Graph g = random_graph(pick(rng, 1, 7), 0.5, rng);
        const Coloring c = random_coloring(g.n(), pick(rng, 1, 5), rng);
        const bool um = verify_unique_maximum(g, c).valid();
        const bool cf = verify_conflict_free(g, c).valid();
        const bool proper = verify_proper(g, c).valid();
        if (um) EXPECT_TRUE(cf) << "case " << t;
        if (cf) EXPECT_TRUE(proper) << "case " << t;

        VertexSubset keep(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
            if (pick(rng, 0, 3)) keep.insert(v);
        const auto sub = induced_subgraph(g, keep, c);
        if (um) EXPECT_TRUE(verify_unique_maximum(sub.graph, *sub.coloring).valid());
        if (cf) EXPECT_TRUE(verify_conflict_free(sub.graph, *sub.coloring).valid());

        const Coloring r = random_um_coloring(g, rng);
        EXPECT_TRUE(verify_conflict_free(g, r).valid());
    }
}

TEST(Properties, WitnessesAreSound) {
    std::mt19937_64 rng(505);
    for (int t = 0; t < kCases; ++t) {
        const Graph g = random_graph(pick(rng, 2, 8), 0.5, rng);
        const Coloring c = random_coloring(g.n(), pick(rng, 2, 4), rng);
        for (auto kind : {ColoringKind::proper, ColoringKind::unique_maximum, ColoringKind::conflict_free}) {
            const Verdict v = verify(g, c, kind);
            EXPECT_EQ(v.invalid(), v.witness.has_value());
            if (v.witness) {
                EXPECT_TRUE(v.witness->is_path_in(g));
                EXPECT_TRUE(oracle::violates(c, v.witness->vertices(), kind));
            }
        }
    }
}

TEST(Properties, SeparatorsAndOrderings) {
    std::mt19937_64 rng(606);
    for (int t = 0; t < kCases; ++t) {
        const Graph g = random_connected(pick(rng, 1, 9), rng);
        VertexSubset s(g.n());
        for (Vertex v = 0; v < g.n(); ++v)
            if (pick(rng, 0, 2) == 0) s.insert(v);
        const auto rest = g.all() - s;
        const auto comps = connected_components(g, rest);
        EXPECT_EQ(is_separator(g, s), rest.empty() || comps.size() != 1);

        const auto order = always_connected_ordering(g, g.all());
        VertexSubset prefix(g.n());
        for (Vertex v : order) {
            prefix.insert(v);
            ASSERT_TRUE(is_connected(g, prefix));
        }
        EXPECT_EQ(prefix, g.all());
    }
}

TEST(Properties, PathSpanningCycles) {
    std::mt19937_64 rng(707);
    for (int t = 0; t < kCases; ++t) {
        const int m = 2 * pick(rng, 1, 6);
        const QuadrupleMap qm(m);
        const Graph& small = qm.small();
        // Random connected S by growing from a random start.
        VertexSubset s(small.n());
        s.insert(pick(rng, 0, small.n() - 1));
        const int target = pick(rng, 1, small.n());
        while (s.count() < target) {
            std::vector<Vertex> frontier;
            s.for_each([&](Vertex v) {
                for (Vertex w : small.neighbors(v))
                    if (!s.contains(w)) frontier.push_back(w);
            });
            if (frontier.empty()) break;
            s.insert(frontier[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(frontier.size()) - 1))]);
        }
        const auto cycle = path_spanning_cycle(s, qm);
        ASSERT_EQ(VertexSubset(qm.big().n(), cycle), qm.lift(s)) << "case " << t;
        ASSERT_EQ(cycle.size(), static_cast<std::size_t>(4 * s.count()));
        for (std::size_t i = 0; i < cycle.size(); ++i)
            ASSERT_TRUE(qm.big().adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) << "case " << t;
        // Dropping one edge leaves a path with the lifted vertex set.
        EXPECT_TRUE(is_simple_path(qm.big(), cycle));
        s.for_each([&](Vertex v) {
            for (Direction d : kDirections) {
                if (!qm.is_open(s, v, d)) continue;
                const Edge e = qm.d_edge(v, d);
                bool found = false;
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    found = found || Edge(cycle[i], cycle[(i + 1) % cycle.size()]) == e;
                EXPECT_TRUE(found) << "case " << t << " vertex " << v << " " << to_string(d);
            }
        });
    }
}
