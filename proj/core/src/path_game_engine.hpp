#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bitmask.hpp"

namespace pathcolor::detail {

struct BudgetExhausted {};

/// Memoized value of the path game on vertex subsets:
///   value(empty) = 0
///   value(U)     = max over path vertex sets S of G[U] of (1 + min_{v in S} value(S - v)).
/// Path sets are deduplicated before recursion. Every step of path
/// enumeration is charged against the budget; running out throws
/// BudgetExhausted and leaves the memo consistent.
class PathGameEngine {
public:
    /// Requires n <= 58 (state keys pack the vertex set with the tail id).
    PathGameEngine(const Graph& g, std::uint64_t budget) : graph_(g), budget_(budget) { memo_.reserve(1024); }

    const BitGraph& graph() const { return graph_; }

    int value(Mask u) {
        if (!u) return 0;
        if (auto it = memo_.find(u); it != memo_.end()) return it->second;
        int best = 0;
        if (!graph_.connected(u)) {
            graph_.for_each_component(u, [&](Mask c) { best = std::max(best, value(c)); });
        } else {
            const auto sets = path_sets(u);
            for (Mask s : sets) {
                if (popcount(s) <= best) break;  // offer value never exceeds |S|
                best = std::max(best, offer_value(s, best));
            }
        }
        memo_.emplace(u, static_cast<std::uint8_t>(best));
        return best;
    }

    /// 1 + min_v value(S - v), or anything <= floor once it cannot beat floor.
    int offer_value(Mask s, int floor) {
        int worst = popcount(s);
        for (Mask m = s; m; m &= m - 1) {
            worst = std::min(worst, value(s & ~bit(lowest(m))));
            if (1 + worst <= floor) break;
        }
        return 1 + worst;
    }

    /// An optimal offer in G[u]: largest sets first, then smallest mask.
    Mask best_set(Mask u) {
        const int target = value(u);
        for (Mask s : path_sets(u))
            if (offer_value(s, target - 1) == target) return s;
        return bit(lowest(u));
    }

    /// Reply minimizing the remaining value; smallest id on ties.
    Vertex best_vertex(Mask s) {
        Vertex pick = lowest(s);
        int best = 1 << 30;
        for (Mask m = s; m; m &= m - 1) {
            const Vertex v = lowest(m);
            const int val = value(s & ~bit(v));
            if (val < best) {
                best = val;
                pick = v;
            }
        }
        return pick;
    }

    std::uint64_t steps() const { return steps_; }
    int longest_path_seen() const { return longest_; }

    /// Distinct vertex sets of simple paths in G[u] (u connected), sorted by
    /// decreasing size, then increasing mask.
    std::vector<Mask> path_sets(Mask u) {
        std::unordered_set<Mask> seen;
        std::unordered_set<Mask> states;  // (vertex set, tail) already expanded
        for (Mask m = u; m; m &= m - 1) {
            const Vertex s = lowest(m);
            grow(u, bit(s), s, seen, states);
        }
        std::vector<Mask> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
            const int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa > pb : a < b;
        });
        return out;
    }

private:
    void grow(Mask u, Mask on_path, Vertex tail, std::unordered_set<Mask>& seen, std::unordered_set<Mask>& states) {
        if (!states.insert((on_path << 6) | static_cast<Mask>(tail)).second) return;
        if (++steps_ > budget_) throw BudgetExhausted{};
        seen.insert(on_path);
        longest_ = std::max(longest_, popcount(on_path));
        for (Mask ext = graph_.adj[static_cast<std::size_t>(tail)] & u & ~on_path; ext; ext &= ext - 1) {
            const Vertex w = lowest(ext);
            grow(u, on_path | bit(w), w, seen, states);
        }
    }

    BitGraph graph_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    int longest_ = 0;
    std::unordered_map<Mask, std::uint8_t> memo_;
};

}  // namespace pathcolor::detail
