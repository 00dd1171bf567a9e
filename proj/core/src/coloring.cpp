#include "pathcolor/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cf_search.hpp"
#include "pathcolor/errors.hpp"

namespace pathcolor {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1)
            throw GraphError("vertex " + std::to_string(v) + " has color " + std::to_string(colors_[v]) +
                             "; colors start at 1");
        k_ = std::max(k_, colors_[v]);
    }
}

int Coloring::distinct() const {
    std::vector<int> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::valid: return "valid";
        case Outcome::invalid: return "invalid";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(ColoringKind k) {
    switch (k) {
        case ColoringKind::proper: return "proper";
        case ColoringKind::unique_maximum: return "unique-maximum";
        case ColoringKind::conflict_free: return "conflict-free";
    }
    return "?";
}

namespace {

void require_total(const Graph& g, const Coloring& c) {
    if (c.size() != g.n())
        throw GraphError("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                         std::to_string(g.n()));
}

Verdict invalid_with(std::vector<Vertex> path, std::uint64_t examined) {
    Verdict v;
    v.outcome = Outcome::invalid;
    v.witness = PathWitness(std::move(path));
    v.paths_examined = examined;
    return v;
}

}  // namespace

bool path_violates(ColoringKind kind, const Coloring& c, std::span<const Vertex> path) {
    if (path.empty()) return false;
    switch (kind) {
        case ColoringKind::proper:
            for (std::size_t i = 1; i < path.size(); ++i)
                if (c[path[i - 1]] == c[path[i]]) return true;
            return false;
        case ColoringKind::unique_maximum: {
            int top = 0, times = 0;
            for (Vertex v : path) {
                if (c[v] > top) {
                    top = c[v];
                    times = 1;
                } else if (c[v] == top) {
                    ++times;
                }
            }
            return times >= 2;
        }
        case ColoringKind::conflict_free: {
            std::map<int, int> freq;
            for (Vertex v : path) ++freq[c[v]];
            return std::none_of(freq.begin(), freq.end(), [](const auto& kv) { return kv.second == 1; });
        }
    }
    return false;
}

Verdict verify_proper(const Graph& g, const Coloring& c) {
    require_total(g, c);
    Verdict out;
    for (const Edge& e : g.edges()) {
        ++out.paths_examined;
        if (c[e.u] == c[e.v]) return invalid_with({e.u, e.v}, out.paths_examined);
    }
    return out;
}

Verdict verify_unique_maximum(const Graph& g, const Coloring& c) {
    require_total(g, c);
    Verdict out;
    std::vector<VertexSubset> work = connected_components(g);
    while (!work.empty()) {
        VertexSubset comp = std::move(work.back());
        work.pop_back();
        ++out.paths_examined;

        int top = 0;
        comp.for_each([&](Vertex v) { top = std::max(top, c[v]); });
        std::vector<Vertex> tops;
        comp.for_each([&](Vertex v) {
            if (c[v] == top) tops.push_back(v);
        });
        if (tops.size() >= 2) {
            // Both ends carry the component maximum, so it repeats on the path.
            auto path = shortest_path(g, comp, tops[0], tops[1]);
            return invalid_with(std::move(*path), out.paths_examined);
        }
        comp.erase(tops.front());
        for (auto& sub : connected_components(g, comp)) work.push_back(std::move(sub));
    }
    return out;
}

namespace detail {

namespace {

class ConflictSearch {
public:
    ConflictSearch(const Graph& g, std::span<const int> colors, const VertexSubset& within,
                   std::optional<Vertex> required, std::uint64_t budget)
        : g_(g), colors_(colors), within_(within), required_(required.value_or(-1)), budget_(budget) {
        int top = 0;
        within.for_each([&](Vertex v) { top = std::max(top, colors_[static_cast<std::size_t>(v)]); });
        count_.assign(static_cast<std::size_t>(top) + 1, 0);
        remaining_.assign(static_cast<std::size_t>(top) + 1, 0);
        reach_color_.assign(static_cast<std::size_t>(top) + 1, 0);
        within.for_each([&](Vertex v) { ++remaining_[color(v)]; });
        on_path_.assign(static_cast<std::size_t>(g.n()), 0);
        stamp_.assign(static_cast<std::size_t>(g.n()), 0);
        queue_.reserve(static_cast<std::size_t>(g.n()));
    }

    ConflictSearchResult run() {
        if (required_ >= 0 && !within_.contains(required_)) return result_;
        for (Vertex s = within_.first(); s != -1 && !done_; s = within_.next(s)) {
            push(s);
            visit();
            pop();
        }
        return result_;
    }

private:
    std::size_t color(Vertex v) const { return static_cast<std::size_t>(colors_[static_cast<std::size_t>(v)]); }

    void push(Vertex v) {
        path_.push_back(v);
        on_path_[static_cast<std::size_t>(v)] = 1;
        const std::size_t c = color(v);
        --remaining_[c];
        if (++count_[c] == 1)
            ++once_;
        else if (count_[c] == 2)
            --once_;
    }

    void pop() {
        const Vertex v = path_.back();
        path_.pop_back();
        on_path_[static_cast<std::size_t>(v)] = 0;
        const std::size_t c = color(v);
        ++remaining_[c];
        if (--count_[c] == 1)
            ++once_;
        else if (count_[c] == 0)
            --once_;
    }

    bool has_required() const { return required_ < 0 || on_path_[static_cast<std::size_t>(required_)]; }

    // Necessary condition for some extension of the current path to be a
    // conflict path: every once-color and the required vertex remain
    // reachable from the tail through uncovered vertices.
    bool extendable() {
        std::vector<std::size_t> need;
        for (Vertex v : path_) {
            const std::size_t c = color(v);
            if (count_[c] == 1) {
                if (remaining_[c] == 0) return false;
                need.push_back(c);
            }
        }
        const bool need_required = !has_required();
        if (need.empty() && !need_required) return true;

        ++epoch_;
        ++color_epoch_;
        std::size_t missing = need.size() + (need_required ? 1 : 0);
        for (std::size_t c : need) reach_color_[c] = -color_epoch_;  // marks "wanted"
        queue_.clear();
        const Vertex tail = path_.back();
        queue_.push_back(tail);
        stamp_[static_cast<std::size_t>(tail)] = epoch_;
        for (std::size_t head = 0; head < queue_.size() && missing > 0; ++head) {
            const Vertex u = queue_[head];
            for (Vertex w : g_.neighbors(u)) {
                const auto wi = static_cast<std::size_t>(w);
                if (stamp_[wi] == epoch_ || on_path_[wi] || !within_.contains(w)) continue;
                stamp_[wi] = epoch_;
                queue_.push_back(w);
                const std::size_t c = color(w);
                if (reach_color_[c] == -color_epoch_) {
                    reach_color_[c] = color_epoch_;
                    --missing;
                }
                if (w == required_ && need_required) --missing;
            }
        }
        return missing == 0;
    }

    void visit() {
        if (result_.examined == budget_) {
            result_.status = SearchStatus::budget_exceeded;
            done_ = true;
            return;
        }
        ++result_.examined;
        if (once_ == 0 && has_required()) {
            result_.status = SearchStatus::found;
            result_.path = path_;
            done_ = true;
            return;
        }
        if (!extendable()) return;
        const Vertex tail = path_.back();
        for (Vertex w : g_.neighbors(tail)) {
            if (done_) return;
            if (on_path_[static_cast<std::size_t>(w)] || !within_.contains(w)) continue;
            push(w);
            visit();
            pop();
        }
    }

    const Graph& g_;
    std::span<const int> colors_;
    const VertexSubset& within_;
    Vertex required_;
    std::uint64_t budget_;

    std::vector<Vertex> path_;
    std::vector<char> on_path_;
    std::vector<int> count_;
    std::vector<int> remaining_;
    std::vector<long long> reach_color_;
    std::vector<std::uint64_t> stamp_;
    std::vector<Vertex> queue_;
    std::uint64_t epoch_ = 0;
    long long color_epoch_ = 0;
    int once_ = 0;
    bool done_ = false;
    ConflictSearchResult result_;
};

}  // namespace

ConflictSearchResult find_conflict_path(const Graph& g, std::span<const int> colors, const VertexSubset& within,
                                        std::optional<Vertex> required, std::uint64_t budget) {
    if (budget == 0) throw GraphError("path budget must be positive");
    if (static_cast<int>(colors.size()) != g.n()) throw GraphError("color table does not match graph order");
    return ConflictSearch(g, colors, within, required, budget).run();
}

}  // namespace detail

Verdict verify_conflict_free(const Graph& g, const Coloring& c, std::uint64_t budget) {
    require_total(g, c);
    const auto found = detail::find_conflict_path(g, c.colors(), g.all(), std::nullopt, budget);
    switch (found.status) {
        case detail::SearchStatus::found: return invalid_with(found.path, found.examined);
        case detail::SearchStatus::budget_exceeded: {
            Verdict v;
            v.outcome = Outcome::inconclusive;
            v.paths_examined = found.examined;
            return v;
        }
        case detail::SearchStatus::none_found: break;
    }
    Verdict v;
    v.paths_examined = found.examined;
    return v;
}

Verdict brute_force_verify(const Graph& g, const Coloring& c, ColoringKind kind, std::uint64_t budget) {
    require_total(g, c);
    Verdict out;
    std::optional<std::vector<Vertex>> bad;
    const auto res = enumerate_simple_paths(g, g.all(), budget, [&](std::span<const Vertex> p) {
        if (path_violates(kind, c, p)) {
            bad.emplace(p.begin(), p.end());
            return false;
        }
        return true;
    });
    out.paths_examined = res.emitted;
    if (bad) return invalid_with(std::move(*bad), res.emitted);
    if (res.status == EnumerationStatus::budget_exceeded) out.outcome = Outcome::inconclusive;
    return out;
}

Verdict verify(const Graph& g, const Coloring& c, ColoringKind kind, std::uint64_t budget) {
    switch (kind) {
        case ColoringKind::proper: return verify_proper(g, c);
        case ColoringKind::unique_maximum: return verify_unique_maximum(g, c);
        case ColoringKind::conflict_free: return verify_conflict_free(g, c, budget);
    }
    throw GraphError("unknown coloring kind");
}

Coloring um_coloring_path(int n) {
    if (n < 1) throw GraphError("um_coloring_path: n must be positive");
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    // Segment [lo, hi): its center takes floor(log2 len) + 1, halves recurse.
    std::vector<std::pair<int, int>> work{{0, n}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const int len = hi - lo;
        if (len <= 0) continue;
        const int mid = lo + len / 2;
        colors[static_cast<std::size_t>(mid)] = std::bit_width(static_cast<unsigned>(len));
        work.emplace_back(lo, mid);
        work.emplace_back(mid + 1, hi);
    }
    return Coloring(std::move(colors));
}

namespace {

void color_cf(const HedgehogLayout& layout, std::vector<int>& out) {
    if (layout.k == 0) {
        out[static_cast<std::size_t>(layout.port)] = 1;
        return;
    }
    const int modulus = (1 << (layout.k + 1)) - 1;
    for (std::size_t i = 0; i < layout.clique.size(); ++i)
        out[static_cast<std::size_t>(layout.clique[i])] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < layout.copies.size(); ++i) {
        const auto& copy = layout.copies[i];
        color_cf(copy, out);
        const int shift = static_cast<int>(i) + 1;
        for (Vertex v : copy.vertices()) {
            int& c = out[static_cast<std::size_t>(v)];
            c = (c + shift - 1) % modulus + 1;
        }
    }
}

int color_um(const HedgehogLayout& layout, std::vector<int>& out) {
    if (layout.k == 0) {
        out[static_cast<std::size_t>(layout.port)] = 1;
        return 1;
    }
    int base = 0;
    for (const auto& copy : layout.copies) base = color_um(copy, out);
    for (std::size_t i = 0; i < layout.clique.size(); ++i)
        out[static_cast<std::size_t>(layout.clique[i])] = base + static_cast<int>(i) + 1;
    return base + static_cast<int>(layout.clique.size());
}

}  // namespace

Coloring cf_coloring_hedgehog(const HedgehogLayout& layout) {
    std::vector<int> out(static_cast<std::size_t>(layout.vertex_count), 0);
    color_cf(layout, out);
    return Coloring(std::move(out));
}

Coloring um_coloring_hedgehog(const HedgehogLayout& layout) {
    std::vector<int> out(static_cast<std::size_t>(layout.vertex_count), 0);
    color_um(layout, out);
    return Coloring(std::move(out));
}

}  // namespace pathcolor
