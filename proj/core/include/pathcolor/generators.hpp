#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pathcolor/graph.hpp"

namespace pathcolor {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Star K_{1,leaves} centered at vertex 0.
Graph star_graph(int leaves);
/// Heap-numbered complete binary tree: children of i are 2i+1 and 2i+2.
Graph complete_binary_tree(int levels);

/// m x m grid, row-major: id(x, y) = y * m + x.
struct GridLayout {
    int m = 0;

    Vertex id(int x, int y) const { return y * m + x; }
    int x(Vertex v) const { return v % m; }
    int y(Vertex v) const { return v / m; }
    bool in_range(int x, int y) const { return x >= 0 && y >= 0 && x < m && y < m; }
};

std::pair<Graph, GridLayout> grid_graph(int m);

/// Recursive hedgehog layout. The clique occupies this layout's lowest ids;
/// copies follow in order.
struct HedgehogLayout {
    int k = 0;
    std::vector<Vertex> clique;           // empty when k == 0
    std::vector<HedgehogLayout> copies;   // copies[i] hangs off clique[i]
    Vertex port = 0;                      // vertex attached to the parent clique
    int vertex_count = 1;

    /// All vertex ids of this (sub)layout.
    std::vector<Vertex> vertices() const;
};

/// Vertex count of H_k: |H_0| = 1, |H_k| = (2^{k+1}-1)(1 + |H_{k-1}|).
std::int64_t hedgehog_order(int k);

inline constexpr std::int64_t kDefaultHedgehogCap = 100000;

/// H_k. Throws ResourceError when |H_k| exceeds `vertex_cap`.
std::pair<Graph, HedgehogLayout> hedgehog(int k, std::int64_t vertex_cap = kDefaultHedgehogCap);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Every labeled graph on n vertices (2^{n(n-1)/2} of them); n <= 7.
std::vector<Graph> all_labeled_graphs(int n);

}  // namespace pathcolor
