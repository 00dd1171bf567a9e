#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "bitmask.hpp"

namespace pathcolor::detail {

/// Memoized value of the connected-component game on vertex subsets:
///   value(empty) = 0
///   value(U)     = max over components S of U of (1 + min_{v in S} value(S - v)).
/// Memo keys are connected vertex sets of the host graph.
class RankingEngine {
public:
    explicit RankingEngine(const Graph& g) : graph_(g) { memo_.reserve(1024); }

    const BitGraph& graph() const { return graph_; }

    int value(Mask u) {
        int best = 0;
        graph_.for_each_component(u, [&](Mask c) {
            const int v = connected_value(c);
            if (v > best) best = v;
        });
        return best;
    }

    int connected_value(Mask u) {
        const int size = popcount(u);
        if (size <= 1) return size;
        if (auto it = memo_.find(u); it != memo_.end()) return it->second;
        ++nodes_;

        int best = size;
        // High-degree vertices first: they tend to split the set and tighten `best` early.
        std::vector<std::pair<int, Vertex>> order;
        for (Mask m = u; m; m &= m - 1) {
            const Vertex v = lowest(m);
            order.emplace_back(-popcount(graph_.adj[static_cast<std::size_t>(v)] & u), v);
        }
        std::sort(order.begin(), order.end());
        for (const auto& [negdeg, v] : order) {
            (void)negdeg;
            const int worst = bounded_value(u & ~bit(v), best - 1);
            if (1 + worst < best) best = 1 + worst;
            if (best == 2) break;  // a connected set with >= 2 vertices needs 2
        }
        memo_.emplace(u, static_cast<std::uint8_t>(best));
        return best;
    }

    /// Smallest-id vertex of connected `u` whose removal attains the optimum.
    Vertex best_vertex(Mask u) {
        const int target = connected_value(u) - 1;
        for (Mask m = u; m; m &= m - 1) {
            const Vertex v = lowest(m);
            if (value(u & ~bit(v)) == target) return v;
        }
        return lowest(u);
    }

    /// Component of `u` with the largest value; smallest id on ties.
    Mask best_component(Mask u) {
        Mask best = 0;
        int best_value = -1;
        graph_.for_each_component(u, [&](Mask c) {
            const int v = connected_value(c);
            if (v > best_value) {
                best_value = v;
                best = c;
            }
        });
        return best;
    }

    /// Optimal unique-maximum coloring of g[u] written into `colors`.
    void color(Mask u, std::vector<int>& colors) {
        graph_.for_each_component(u, [&](Mask c) {
            const Vertex v = best_vertex(c);
            colors[static_cast<std::size_t>(v)] = connected_value(c);
            color(c & ~bit(v), colors);
        });
    }

    std::uint64_t nodes() const { return nodes_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    // max over components of value, stopping early once it reaches `cutoff`.
    int bounded_value(Mask u, int cutoff) {
        int best = 0;
        Mask rest = u;
        while (rest) {
            const Mask c = graph_.component(rest, lowest(rest));
            rest &= ~c;
            const int v = connected_value(c);
            if (v > best) best = v;
            if (best >= cutoff) break;
        }
        return best;
    }

    BitGraph graph_;
    std::unordered_map<Mask, std::uint8_t> memo_;
    std::uint64_t nodes_ = 0;
};

}  // namespace pathcolor::detail
