#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "pathcolor/graph.hpp"

namespace pathcolor::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline int popcount(Mask m) { return std::popcount(m); }

/// Adjacency as 64-bit rows, for graphs with at most 64 vertices.
struct BitGraph {
    int n = 0;
    std::vector<Mask> adj;

    BitGraph() = default;
    explicit BitGraph(const Graph& g) : n(g.n()), adj(g.adjacency_masks()) {}

    Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    /// Component of `start` inside `within`.
    Mask component(Mask within, Vertex start) const {
        Mask seen = bit(start);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                next |= adj[static_cast<std::size_t>(lowest(f))];
                f &= f - 1;
            }
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool connected(Mask within) const { return within == 0 || component(within, lowest(within)) == within; }

    template <typename F>
    void for_each_component(Mask within, F&& f) const {
        while (within) {
            const Mask c = component(within, lowest(within));
            within &= ~c;
            f(c);
        }
    }
};

}  // namespace pathcolor::detail
