#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pathcolor/graph.hpp"

namespace pathcolor {

class QuadrupleMap;

namespace detail {
class RankingEngine;
class PathGameEngine;
}  // namespace detail

/// component: the maximizer offers a connected component of what is left.
/// path: the maximizer offers the vertex set of a simple path of what is left.
/// Either way the minimizer deletes one offered vertex and play continues on
/// the rest of the offered set.
enum class GameKind { component, path };

std::string to_string(GameKind kind);

struct GamePosition {
    VertexSubset alive;
    int round = 0;
};

struct GameRound {
    VertexSubset chosen;
    Vertex removed = -1;
    std::vector<Vertex> path;  // spanning path of `chosen` (path game only)
};

struct GameTranscript {
    std::vector<GameRound> rounds;

    int length() const noexcept { return static_cast<int>(rounds.size()); }
};

/// Line-based log: one round per line, `i|sorted,ids|v`, rounds numbered from 1.
std::string serialize_transcript(const GameTranscript& t);
GameTranscript parse_transcript(const std::string& text, int universe);

/// Everything a strategy may look at.
struct GameView {
    const Graph& graph;
    GameKind kind;
    const GamePosition& position;
    const GameTranscript& history;
};

/// Maximizer move. For the path game `path` lists the chosen set in path
/// order; if left empty the engine searches for one (|set| <= 24).
struct SetMove {
    VertexSubset set;
    std::vector<Vertex> path;
};

/// Strategies are pure functions of the view: any internal caches are
/// synchronized, so one instance may serve concurrent matches.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual SetMove choose_set(const GameView& view) const;
    virtual Vertex choose_vertex(const GameView& view, const VertexSubset& chosen) const;
};

/// Play to completion, validating every move. Throws GameRuleError naming the
/// round and the rule broken.
GameTranscript play_game(const Graph& g, GameKind kind, const Strategy& maximizer, const Strategy& minimizer);

/// Shortest game the maximizer can be held to, over every minimizer reply
/// sequence. Throws ResourceError after `node_budget` game-tree nodes.
int min_length_against_all(const Graph& g, GameKind kind, const Strategy& maximizer,
                           std::uint64_t node_budget = 50'000'000);

/// Optimal value of the connected-component game (equal to chi_um).
int vcs_value(const Graph& g, int cap = 24);

struct VpResult {
    bool solved = true;
    int value = 0;
    int lower = 0;
    int upper = 0;
    std::uint64_t nodes = 0;
};

/// Optimal value of the path game by subset minimax. `budget` bounds the
/// number of path-enumeration steps; when it runs out, [lower, upper]
/// brackets the value.
VpResult vp_value(const Graph& g, std::uint64_t budget = 50'000'000, int cap = 16);

// --- strategies -------------------------------------------------------------

/// Offers a component of largest game value (smallest id on ties).
class OptimalComponentMaximizer : public Strategy {
public:
    explicit OptimalComponentMaximizer(const Graph& g);
    ~OptimalComponentMaximizer() override;
    std::string name() const override { return "optimal"; }
    SetMove choose_set(const GameView& view) const override;

private:
    std::unique_ptr<detail::RankingEngine> engine_;
    mutable std::mutex mutex_;
};

/// Removes a vertex minimizing the remaining component-game value.
class OptimalComponentMinimizer : public Strategy {
public:
    explicit OptimalComponentMinimizer(const Graph& g);
    ~OptimalComponentMinimizer() override;
    std::string name() const override { return "optimal"; }
    Vertex choose_vertex(const GameView& view, const VertexSubset& chosen) const override;

private:
    std::unique_ptr<detail::RankingEngine> engine_;
    mutable std::mutex mutex_;
};

class OptimalPathMaximizer : public Strategy {
public:
    explicit OptimalPathMaximizer(const Graph& g, std::uint64_t budget = 50'000'000);
    ~OptimalPathMaximizer() override;
    std::string name() const override { return "optimal"; }
    SetMove choose_set(const GameView& view) const override;

private:
    std::unique_ptr<detail::PathGameEngine> engine_;
    mutable std::mutex mutex_;
};

class OptimalPathMinimizer : public Strategy {
public:
    explicit OptimalPathMinimizer(const Graph& g, std::uint64_t budget = 50'000'000);
    ~OptimalPathMinimizer() override;
    std::string name() const override { return "optimal"; }
    Vertex choose_vertex(const GameView& view, const VertexSubset& chosen) const override;

private:
    std::unique_ptr<detail::PathGameEngine> engine_;
    mutable std::mutex mutex_;
};

/// Component game: the largest component. Path game: a longest path
/// (first in canonical enumeration order).
class GreedyMaximizer : public Strategy {
public:
    std::string name() const override { return "longest"; }
    SetMove choose_set(const GameView& view) const override;
};

/// Removes the smallest offered id.
class FirstVertexMinimizer : public Strategy {
public:
    std::string name() const override { return "first"; }
    Vertex choose_vertex(const GameView& view, const VertexSubset& chosen) const override;
};

/// Seeded random play; the choice depends only on the seed and the history.
class RandomStrategy : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : seed_(seed) {}
    std::string name() const override { return "random"; }
    SetMove choose_set(const GameView& view) const override;
    Vertex choose_vertex(const GameView& view, const VertexSubset& chosen) const override;

private:
    std::uint64_t seed_;
};

/// Path-game maximizer on G_m that shadows an optimal component game on
/// G_{floor(m/2)}: each simulated offer S is lifted to its quadruples and
/// played along a spanning cycle; the reply v is projected back. Odd m
/// plays inside the G_{m-1} corner. Once the simulation is exhausted it
/// offers greedy paths. Requires floor(m/2)^2 <= 64.
class TranslatedMaximizer : public Strategy {
public:
    explicit TranslatedMaximizer(int m);
    ~TranslatedMaximizer() override;
    std::string name() const override { return "translated"; }
    SetMove choose_set(const GameView& view) const override;

    int m() const { return m_; }

private:
    int m_;
    int even_m_;
    std::unique_ptr<QuadrupleMap> quadruples_;
    std::unique_ptr<detail::RankingEngine> engine_;
    mutable std::mutex mutex_;
};

std::unique_ptr<Strategy> translated_maximizer(int m);

enum class Role { maximizer, minimizer };

/// Strategy by name: optimal, longest (maximizer), first (minimizer),
/// random, translated (path-game maximizer on a square grid).
std::unique_ptr<Strategy> make_strategy(const std::string& name, Role role, GameKind kind, const Graph& g,
                                        std::uint64_t seed);

}  // namespace pathcolor
