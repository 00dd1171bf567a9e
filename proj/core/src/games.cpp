#include "pathcolor/games.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <sstream>

#include "path_game_engine.hpp"
#include "pathcolor/errors.hpp"
#include "pathcolor/quadruples.hpp"
#include "ranking_engine.hpp"

namespace pathcolor {

using detail::bit;
using detail::lowest;
using detail::Mask;

std::string to_string(GameKind kind) { return kind == GameKind::component ? "component" : "path"; }

// --- transcripts --------------------------------------------------------------

std::string serialize_transcript(const GameTranscript& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        out << (i + 1) << '|';
        bool first = true;
        t.rounds[i].chosen.for_each([&](Vertex v) {
            out << (first ? "" : ",") << v;
            first = false;
        });
        out << '|' << t.rounds[i].removed << '\n';
    }
    return out.str();
}

GameTranscript parse_transcript(const std::string& text, int universe) {
    GameTranscript t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto bar1 = line.find('|');
        const auto bar2 = line.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
        if (bar1 == std::string::npos || bar2 == std::string::npos)
            throw GraphError("transcript line " + std::to_string(lineno) + ": expected i|S|v");
        try {
            const int index = std::stoi(line.substr(0, bar1));
            if (index != t.length() + 1)
                throw GraphError("transcript line " + std::to_string(lineno) + ": round out of sequence");
            GameRound r;
            r.chosen = VertexSubset(universe);
            std::istringstream ids(line.substr(bar1 + 1, bar2 - bar1 - 1));
            std::string tok;
            while (std::getline(ids, tok, ','))
                if (!tok.empty()) r.chosen.insert(std::stoi(tok));
            r.removed = std::stoi(line.substr(bar2 + 1));
            t.rounds.push_back(std::move(r));
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const GraphError*>(&e)) throw;
            throw GraphError("transcript line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return t;
}

// --- engine -------------------------------------------------------------------

SetMove Strategy::choose_set(const GameView&) const {
    throw GraphError("strategy '" + name() + "' cannot play the maximizer");
}

Vertex Strategy::choose_vertex(const GameView&, const VertexSubset&) const {
    throw GraphError("strategy '" + name() + "' cannot play the minimizer");
}

namespace {

/// Returns the spanning path order of the offer (path game) or empty (component game).
std::vector<Vertex> validate_offer(const Graph& g, GameKind kind, const VertexSubset& alive, const SetMove& move,
                                   int round) {
    if (move.set.universe() != g.n()) throw GameRuleError(round, "offer", "set is not over the game graph");
    if (move.set.empty()) throw GameRuleError(round, "offer", "empty set");
    if (!move.set.is_subset_of(alive)) throw GameRuleError(round, "offer", "set uses deleted vertices");

    if (kind == GameKind::component) {
        if (!is_connected(g, move.set)) throw GameRuleError(round, "component", "offered set is not connected");
        bool maximal = true;
        move.set.for_each([&](Vertex v) {
            for (Vertex w : g.neighbors(v))
                if (alive.contains(w) && !move.set.contains(w)) maximal = false;
        });
        if (!maximal) throw GameRuleError(round, "component", "offered set is not a whole component");
        return {};
    }

    if (!move.path.empty()) {
        if (!is_simple_path(g, move.path) || VertexSubset(g.n(), move.path) != move.set ||
            static_cast<int>(move.path.size()) != move.set.count())
            throw GameRuleError(round, "path", "supplied order is not a path spanning the offered set");
        return move.path;
    }
    if (move.set.count() > 24) throw GameRuleError(round, "path", "offers above 24 vertices must list the path");
    auto found = find_hamiltonian_path(g, move.set);
    if (!found) throw GameRuleError(round, "path", "offered set is not the vertex set of a path");
    return *found;
}

void check_reply(const VertexSubset& offer, Vertex v, int round) {
    if (!offer.contains(v)) throw GameRuleError(round, "reply", "vertex " + std::to_string(v) + " not in offered set");
}

}  // namespace

GameTranscript play_game(const Graph& g, GameKind kind, const Strategy& maximizer, const Strategy& minimizer) {
    GamePosition pos{g.all(), 0};
    GameTranscript t;
    while (!pos.alive.empty()) {
        ++pos.round;
        const GameView view{g, kind, pos, t};
        SetMove move = maximizer.choose_set(view);
        std::vector<Vertex> path = validate_offer(g, kind, pos.alive, move, pos.round);
        const Vertex v = minimizer.choose_vertex(view, move.set);
        check_reply(move.set, v, pos.round);
        pos.alive = move.set;
        pos.alive.erase(v);
        t.rounds.push_back({std::move(move.set), v, std::move(path)});
    }
    return t;
}

namespace {

struct AdversaryWalk {
    const Graph& g;
    GameKind kind;
    const Strategy& maximizer;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    int explore(GamePosition& pos, GameTranscript& t) {
        if (++nodes > budget) throw ResourceError("exhaustive adversary exceeded its node budget");
        if (pos.alive.empty()) return t.length();
        const GamePosition here = pos;
        ++pos.round;
        const GameView view{g, kind, pos, t};
        SetMove move = maximizer.choose_set(view);
        std::vector<Vertex> path = validate_offer(g, kind, pos.alive, move, pos.round);
        int best = std::numeric_limits<int>::max();
        for (Vertex v : move.set.members()) {
            pos.alive = move.set;
            pos.alive.erase(v);
            t.rounds.push_back({move.set, v, path});
            best = std::min(best, explore(pos, t));
            t.rounds.pop_back();
            pos.round = here.round + 1;
        }
        pos = here;
        return best;
    }
};

}  // namespace

int min_length_against_all(const Graph& g, GameKind kind, const Strategy& maximizer, std::uint64_t node_budget) {
    AdversaryWalk walk{g, kind, maximizer, node_budget};
    GamePosition pos{g.all(), 0};
    GameTranscript t;
    return walk.explore(pos, t);
}

int vcs_value(const Graph& g, int cap) {
    if (g.n() > std::min(cap, 64))
        throw ResourceError("vcs_value: " + std::to_string(g.n()) + " vertices exceeds cap " + std::to_string(cap));
    if (g.n() == 0) return 0;
    detail::RankingEngine engine(g);
    return engine.value(engine.graph().all());
}

VpResult vp_value(const Graph& g, std::uint64_t budget, int cap) {
    if (g.n() > std::min(cap, 58))
        throw ResourceError("vp_value: " + std::to_string(g.n()) + " vertices exceeds cap " + std::to_string(cap));
    VpResult out;
    if (g.n() == 0) return out;
    detail::PathGameEngine engine(g, budget);
    try {
        out.value = out.lower = out.upper = engine.value(engine.graph().all());
        out.nodes = engine.steps();
        return out;
    } catch (const detail::BudgetExhausted&) {
        out.solved = false;
        out.nodes = engine.steps();
        // vp is monotone under subgraphs and vp(P_L) = floor(log2 L) + 1.
        out.lower = std::bit_width(static_cast<unsigned>(std::max(1, engine.longest_path_seen())));
        // vp <= chi_cf <= chi_um = vcs.
        out.upper = g.n() <= 24 ? vcs_value(g) : g.n();
        return out;
    }
}

// --- strategies -----------------------------------------------------------------

namespace {

Mask mask_of(const VertexSubset& s) {
    if (s.universe() > 64) throw ResourceError("strategy requires at most 64 vertices");
    return s.mask();
}

std::vector<Vertex> greedy_path(const Graph& g, const VertexSubset& alive) {
    std::vector<Vertex> path{alive.first()};
    VertexSubset used(g.n());
    used.insert(path.front());
    while (true) {
        Vertex next = -1;
        for (Vertex w : g.neighbors(path.back()))
            if (alive.contains(w) && !used.contains(w)) {
                next = w;
                break;
            }
        if (next == -1) break;
        path.push_back(next);
        used.insert(next);
    }
    return path;
}

SetMove move_from_path(const Graph& g, std::vector<Vertex> path) {
    SetMove m{VertexSubset(g.n(), path), std::move(path)};
    return m;
}

std::mt19937_64 rng_for(std::uint64_t seed, const GameView& view) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(view.position.round),
                      static_cast<std::uint32_t>(view.position.alive.hash())};
    return std::mt19937_64(seq);
}

}  // namespace

OptimalComponentMaximizer::OptimalComponentMaximizer(const Graph& g)
    : engine_(std::make_unique<detail::RankingEngine>(g)) {}
OptimalComponentMaximizer::~OptimalComponentMaximizer() = default;

SetMove OptimalComponentMaximizer::choose_set(const GameView& view) const {
    std::lock_guard lock(mutex_);
    const Mask best = engine_->best_component(mask_of(view.position.alive));
    return {VertexSubset::from_mask(view.graph.n(), best), {}};
}

OptimalComponentMinimizer::OptimalComponentMinimizer(const Graph& g)
    : engine_(std::make_unique<detail::RankingEngine>(g)) {}
OptimalComponentMinimizer::~OptimalComponentMinimizer() = default;

Vertex OptimalComponentMinimizer::choose_vertex(const GameView&, const VertexSubset& chosen) const {
    std::lock_guard lock(mutex_);
    const Mask s = mask_of(chosen);
    Vertex pick = lowest(s);
    int best = std::numeric_limits<int>::max();
    for (Mask m = s; m; m &= m - 1) {
        const Vertex v = lowest(m);
        const int val = engine_->value(s & ~bit(v));
        if (val < best) {
            best = val;
            pick = v;
        }
    }
    return pick;
}

OptimalPathMaximizer::OptimalPathMaximizer(const Graph& g, std::uint64_t budget)
    : engine_(std::make_unique<detail::PathGameEngine>(g, budget)) {}
OptimalPathMaximizer::~OptimalPathMaximizer() = default;

SetMove OptimalPathMaximizer::choose_set(const GameView& view) const {
    std::lock_guard lock(mutex_);
    try {
        const Mask s = engine_->best_set(mask_of(view.position.alive));
        const VertexSubset set = VertexSubset::from_mask(view.graph.n(), s);
        return move_from_path(view.graph, *find_hamiltonian_path(view.graph, set));
    } catch (const detail::BudgetExhausted&) {
        throw ResourceError("optimal path maximizer exceeded its budget");
    }
}

OptimalPathMinimizer::OptimalPathMinimizer(const Graph& g, std::uint64_t budget)
    : engine_(std::make_unique<detail::PathGameEngine>(g, budget)) {}
OptimalPathMinimizer::~OptimalPathMinimizer() = default;

Vertex OptimalPathMinimizer::choose_vertex(const GameView&, const VertexSubset& chosen) const {
    std::lock_guard lock(mutex_);
    try {
        return engine_->best_vertex(mask_of(chosen));
    } catch (const detail::BudgetExhausted&) {
        throw ResourceError("optimal path minimizer exceeded its budget");
    }
}

SetMove GreedyMaximizer::choose_set(const GameView& view) const {
    const Graph& g = view.graph;
    if (view.kind == GameKind::component) {
        VertexSubset best;
        for (auto& c : connected_components(g, view.position.alive))
            if (best.universe() == 0 || c.count() > best.count()) best = std::move(c);
        return {std::move(best), {}};
    }
    std::vector<Vertex> best;
    enumerate_simple_paths(g, view.position.alive, 10'000'000, [&](std::span<const Vertex> p) {
        if (p.size() > best.size()) best.assign(p.begin(), p.end());
        return best.size() < static_cast<std::size_t>(view.position.alive.count());
    });
    return move_from_path(g, std::move(best));
}

Vertex FirstVertexMinimizer::choose_vertex(const GameView&, const VertexSubset& chosen) const {
    return chosen.first();
}

SetMove RandomStrategy::choose_set(const GameView& view) const {
    auto rng = rng_for(seed_, view);
    const Graph& g = view.graph;
    if (view.kind == GameKind::component) {
        auto comps = connected_components(g, view.position.alive);
        std::uniform_int_distribution<std::size_t> pick(0, comps.size() - 1);
        return {std::move(comps[pick(rng)]), {}};
    }
    const auto members = view.position.alive.members();
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    std::vector<Vertex> path{members[pick(rng)]};
    VertexSubset used(g.n());
    used.insert(path.front());
    std::bernoulli_distribution stop(0.2);
    while (!stop(rng)) {
        std::vector<Vertex> options;
        for (Vertex w : g.neighbors(path.back()))
            if (view.position.alive.contains(w) && !used.contains(w)) options.push_back(w);
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> which(0, options.size() - 1);
        path.push_back(options[which(rng)]);
        used.insert(path.back());
    }
    return move_from_path(g, std::move(path));
}

Vertex RandomStrategy::choose_vertex(const GameView& view, const VertexSubset& chosen) const {
    auto rng = rng_for(seed_ ^ 0x5bd1e995ULL, view);
    const auto members = chosen.members();
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    return members[pick(rng)];
}

TranslatedMaximizer::TranslatedMaximizer(int m) : m_(m), even_m_(m - m % 2) {
    if (m < 2) throw GraphError("translated maximizer needs m >= 2");
    const int half = even_m_ / 2;
    if (half * half > 64) throw ResourceError("translated maximizer supports floor(m/2) <= 8");
    quadruples_ = std::make_unique<QuadrupleMap>(even_m_);
    engine_ = std::make_unique<detail::RankingEngine>(quadruples_->small());
}

TranslatedMaximizer::~TranslatedMaximizer() = default;

SetMove TranslatedMaximizer::choose_set(const GameView& view) const {
    const Graph& g = view.graph;
    if (g.n() != m_ * m_) throw GraphError("translated maximizer was built for G_" + std::to_string(m_));
    const QuadrupleMap& qm = *quadruples_;
    const GridLayout& inner = qm.big_layout();
    auto to_game = [&](Vertex v) { return inner.y(v) * m_ + inner.x(v); };

    std::lock_guard lock(mutex_);
    // Replay the shadow component game from the transcript.
    Mask shadow = engine_->graph().all();
    for (const GameRound& r : view.history.rounds) {
        if (!shadow) break;
        const Mask offered = engine_->best_component(shadow);
        const int x = r.removed % m_, y = r.removed / m_;
        if (x >= even_m_ || y >= even_m_) break;
        const Vertex projected = qm.project(inner.id(x, y));
        if (!(offered & bit(projected))) break;
        shadow = offered & ~bit(projected);
    }

    if (!shadow) return move_from_path(g, greedy_path(g, view.position.alive));

    const Mask offer = engine_->best_component(shadow);
    const auto cycle = path_spanning_cycle(VertexSubset::from_mask(qm.small().n(), offer), qm);
    std::vector<Vertex> path;
    path.reserve(cycle.size());
    for (Vertex v : cycle) path.push_back(to_game(v));
    return move_from_path(g, std::move(path));
}

std::unique_ptr<Strategy> translated_maximizer(int m) { return std::make_unique<TranslatedMaximizer>(m); }

std::unique_ptr<Strategy> make_strategy(const std::string& name, Role role, GameKind kind, const Graph& g,
                                        std::uint64_t seed) {
    const bool max = role == Role::maximizer;
    if (name == "optimal") {
        if (kind == GameKind::component) {
            if (max) return std::make_unique<OptimalComponentMaximizer>(g);
            return std::make_unique<OptimalComponentMinimizer>(g);
        }
        if (max) return std::make_unique<OptimalPathMaximizer>(g);
        return std::make_unique<OptimalPathMinimizer>(g);
    }
    if (name == "random") return std::make_unique<RandomStrategy>(seed);
    if ((name == "longest" || name == "greedy") && max) return std::make_unique<GreedyMaximizer>();
    if (name == "first" && !max) return std::make_unique<FirstVertexMinimizer>();
    if (name == "translated" && max && kind == GameKind::path) {
        int m = 1;
        while (m * m < g.n()) ++m;
        if (m * m != g.n() || g.edges() != grid_graph(m).first.edges())
            throw GraphError("translated strategy needs a square grid graph");
        return std::make_unique<TranslatedMaximizer>(m);
    }
    throw GraphError("unknown " + std::string(max ? "maximizer" : "minimizer") + " strategy '" + name + "' for the " +
                     to_string(kind) + " game");
}

}  // namespace pathcolor
