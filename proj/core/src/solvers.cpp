#include "pathcolor/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "bitmask.hpp"
#include "cf_search.hpp"
#include "pathcolor/errors.hpp"
#include "ranking_engine.hpp"

namespace pathcolor {

using detail::bit;
using detail::BitGraph;
using detail::lowest;
using detail::Mask;
using detail::popcount;

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw ResourceError(std::string(what) + ": graph has " + std::to_string(g.n()) + " vertices, cap is " +
                            std::to_string(cap));
}

class CliqueSearch {
public:
    explicit CliqueSearch(const BitGraph& g) : g_(g) {}

    int run() {
        expand(0, g_.all());
        return best_;
    }

private:
    void expand(int size, Mask candidates) {
        if (!candidates) {
            best_ = std::max(best_, size);
            return;
        }
        while (candidates) {
            if (size + popcount(candidates) <= best_) return;
            const Vertex v = lowest(candidates);
            candidates &= ~bit(v);
            expand(size + 1, candidates & g_.adj[static_cast<std::size_t>(v)]);
        }
        best_ = std::max(best_, size);
    }

    const BitGraph& g_;
    int best_ = 0;
};

class DsaturSearch {
public:
    DsaturSearch(const BitGraph& g, int lower) : g_(g), lower_(lower) {
        const auto n = static_cast<std::size_t>(g.n);
        colors_.assign(n, 0);
        sat_.assign(n * kStride, 0);
        best_k_ = g.n + 1;
    }

    void run() { expand(0, 0); }

    int best_k() const { return best_k_; }
    const std::vector<int>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static constexpr std::size_t kStride = 65;

    int saturation(Vertex v) const {
        int s = 0;
        for (std::size_t c = 1; c < kStride; ++c) s += sat_[static_cast<std::size_t>(v) * kStride + c] > 0;
        return s;
    }

    void expand(int colored, int used) {
        ++nodes_;
        if (used >= best_k_ || best_k_ <= lower_) return;
        if (colored == g_.n) {
            best_k_ = used;
            best_ = colors_;
            return;
        }
        Vertex pick = -1;
        int pick_sat = -1, pick_deg = -1;
        for (Vertex v = 0; v < g_.n; ++v) {
            if (colors_[static_cast<std::size_t>(v)]) continue;
            const int s = saturation(v);
            const int d = popcount(g_.adj[static_cast<std::size_t>(v)]);
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        const int top = std::min(used + 1, best_k_ - 1);
        for (int c = 1; c <= top; ++c) {
            if (sat_[static_cast<std::size_t>(pick) * kStride + static_cast<std::size_t>(c)]) continue;
            assign(pick, c, +1);
            expand(colored + 1, std::max(used, c));
            assign(pick, c, -1);
            if (best_k_ <= lower_) return;
        }
    }

    void assign(Vertex v, int c, int delta) {
        colors_[static_cast<std::size_t>(v)] = delta > 0 ? c : 0;
        for (Mask m = g_.adj[static_cast<std::size_t>(v)]; m; m &= m - 1)
            sat_[static_cast<std::size_t>(lowest(m)) * kStride + static_cast<std::size_t>(c)] += delta;
    }

    const BitGraph& g_;
    int lower_;
    std::vector<int> colors_;
    std::vector<int> sat_;
    std::vector<int> best_;
    int best_k_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    const BitGraph bg(g);
    return CliqueSearch(bg).run();
}

ExactResult chi_exact(const Graph& g, const SolverLimits& limits) {
    check_cap(g, std::min(limits.chi_cap, 64), "chi_exact");
    if (g.n() == 0) return {};
    const BitGraph bg(g);
    DsaturSearch search(bg, CliqueSearch(bg).run());
    search.run();
    return {search.best_k(), Coloring(search.best()), search.nodes()};
}

ExactResult chi_um_exact(const Graph& g, const SolverLimits& limits) {
    check_cap(g, std::min(limits.um_cap, 64), "chi_um_exact");
    if (g.n() == 0) return {};
    detail::RankingEngine engine(g);
    const Mask all = engine.graph().all();
    std::vector<int> colors(static_cast<std::size_t>(g.n()), 0);
    const int k = engine.value(all);
    engine.color(all, colors);
    return {k, Coloring(std::move(colors)), engine.nodes()};
}

namespace {

class CfSearch {
public:
    CfSearch(const Graph& g, std::vector<Vertex> order, std::uint64_t budget)
        : g_(g), order_(std::move(order)), budget_(budget), within_(g.n()) {
        colors_.assign(static_cast<std::size_t>(g.n()), 0);
    }

    enum class Result { found, refuted, out_of_budget };

    Result try_k(int k) {
        k_ = k;
        out_of_budget_ = false;
        std::fill(colors_.begin(), colors_.end(), 0);
        within_ = VertexSubset(g_.n());
        if (expand(0, 0)) return Result::found;
        return out_of_budget_ ? Result::out_of_budget : Result::refuted;
    }

    const std::vector<int>& colors() const { return colors_; }
    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t examined() const { return examined_; }

private:
    bool expand(std::size_t i, int used) {
        if (i == order_.size()) return true;
        const Vertex v = order_[i];
        const int top = std::min(used + 1, k_);
        for (int c = 1; c <= top; ++c) {
            ++nodes_;
            bool clash = false;
            for (Vertex w : g_.neighbors(v))
                if (colors_[static_cast<std::size_t>(w)] == c) clash = true;
            if (clash) continue;

            colors_[static_cast<std::size_t>(v)] = c;
            within_.insert(v);
            const auto check = detail::find_conflict_path(g_, colors_, within_, v, budget_ - examined_);
            examined_ += check.examined;
            if (check.status == detail::SearchStatus::budget_exceeded || examined_ >= budget_) {
                out_of_budget_ = true;
                return false;
            }
            if (check.status == detail::SearchStatus::none_found && expand(i + 1, std::max(used, c))) return true;
            if (out_of_budget_) return false;
            within_.erase(v);
            colors_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Vertex> order_;
    std::uint64_t budget_;
    VertexSubset within_;
    std::vector<int> colors_;
    int k_ = 0;
    bool out_of_budget_ = false;
    std::uint64_t nodes_ = 0;
    std::uint64_t examined_ = 0;
};

}  // namespace

CfResult chi_cf_exact(const Graph& g, const SolverLimits& limits) {
    check_cap(g, std::min(limits.cf_cap, 64), "chi_cf_exact");
    CfResult out;
    if (g.n() == 0) return out;

    std::vector<Vertex> order;
    for (const auto& comp : connected_components(g)) {
        auto part = always_connected_ordering(g, comp);
        order.insert(order.end(), part.begin(), part.end());
    }

    // A clique is a lower bound for chi, and chi <= chi_cf.
    out.lower = std::max(clique_number(g), 1);
    out.upper = g.n();
    if (g.n() <= std::min(limits.um_cap, 64)) out.upper = chi_um_exact(g, limits).k;

    CfSearch search(g, std::move(order), limits.cf_budget);
    for (int k = out.lower; k <= out.upper; ++k) {
        const auto r = search.try_k(k);
        out.nodes = search.nodes();
        out.paths_examined = search.examined();
        if (r == CfSearch::Result::found) {
            out.status = SolveStatus::solved;
            out.k = out.lower = out.upper = k;
            out.certificate = Coloring(search.colors());
            return out;
        }
        if (r == CfSearch::Result::out_of_budget) {
            out.status = SolveStatus::inconclusive;
            return out;
        }
        out.lower = k + 1;
    }
    // Unreachable for a correct upper bound; report what is known.
    out.status = SolveStatus::inconclusive;
    return out;
}

bool ChromaticReport::consistent() const {
    if (chi && chi_cf && *chi > *chi_cf) return false;
    if (chi_cf && chi_um && *chi_cf > *chi_um) return false;
    if (chi && chi_um && *chi > *chi_um) return false;
    if (chi_cf && chi_um && *chi_cf < 62 && *chi_um > (1LL << *chi_cf) - 1) return false;
    return true;
}

ChromaticReport chromatic_report(const Graph& g, const SolverLimits& limits) {
    ChromaticReport r;
    r.method = "chi: dsatur branch-and-bound; chi_um: component-game memo; chi_cf: iterative deepening";
    if (g.n() <= limits.chi_cap) {
        auto res = chi_exact(g, limits);
        r.chi = res.k;
        r.chi_certificate = std::move(res.certificate);
        r.nodes += res.nodes;
    }
    if (g.n() <= limits.um_cap) {
        auto res = chi_um_exact(g, limits);
        r.chi_um = res.k;
        r.um_certificate = std::move(res.certificate);
        r.nodes += res.nodes;
    }
    if (g.n() <= limits.cf_cap) {
        auto res = chi_cf_exact(g, limits);
        r.cf_lower = res.lower;
        r.cf_upper = res.upper;
        if (res.solved()) {
            r.chi_cf = res.k;
            r.cf_certificate = std::move(res.certificate);
        }
        r.nodes += res.nodes;
    }
    return r;
}

ClosedFormFamily parse_closed_form_family(const std::string& name) {
    if (name == "path_um") return ClosedFormFamily::path_um;
    if (name == "path_cf") return ClosedFormFamily::path_cf;
    if (name == "hedgehog_cf") return ClosedFormFamily::hedgehog_cf;
    if (name == "hedgehog_um_interval") return ClosedFormFamily::hedgehog_um_interval;
    throw GraphError("unknown closed-form family '" + name + "'");
}

IntInterval closed_form(ClosedFormFamily family, long long param) {
    switch (family) {
        case ClosedFormFamily::path_um:
        case ClosedFormFamily::path_cf: {
            if (param < 1) throw GraphError("path closed form needs n >= 1");
            const long long v = std::bit_width(static_cast<unsigned long long>(param));
            return {v, v};
        }
        case ClosedFormFamily::hedgehog_cf: {
            if (param < 0 || param > 60) throw GraphError("hedgehog closed form needs 0 <= k <= 60");
            const long long v = (1LL << (param + 1)) - 1;
            return {v, v};
        }
        case ClosedFormFamily::hedgehog_um_interval: {
            if (param < 0 || param > 60) throw GraphError("hedgehog closed form needs 0 <= k <= 60");
            const long long p = 1LL << (param + 2);
            return {p - 2 * param - 3, p - param - 3};
        }
    }
    throw GraphError("unknown closed-form family");
}

std::vector<GridBound> grid_bounds(int m) {
    if (m < 2) throw GraphError("grid_bounds: m must be at least 2");
    const double md = m;
    const int half = m / 2;
    const double hd = half;
    auto log_base = [](double x, double base) { return std::log(x) / std::log(base); };

    std::vector<GridBound> out;
    out.push_back({"um_lower_3m_over_2", "chi_um(G_m) >= 3m/2", 3.0 * md / 2.0, "earlier lower bound"});
    out.push_back({"um_upper_2_519m", "chi_um(G_m) <= 2.519m", 2519.0 * md / 1000.0,
                   "best known upper bound; construction not reproduced here"});
    out.push_back({"um_lower_5m_over_3", "chi_um(G_m) >= 5/3 m - log_{5/2} m",
                   5.0 * md / 3.0 - log_base(md, 2.5), "refined form of the 5m/3 lower bound"});
    out.push_back({"um_lower_5m_over_3_ambiguous", "chi_um(G_m) >= 5/3 m - L(m)", std::nullopt,
                   "logarithmic term L is ambiguous as stated; use um_lower_5m_over_3"});
    out.push_back({"cf_lower_5m_over_6", "chi_cf(G_m) >= 5/6 m - 10 log2 m", 5.0 * md / 6.0 - 10.0 * std::log2(md),
                   "follows from the half-grid relation"});
    out.push_back({"cf_lower_halfgrid_3m_over_2", "chi_cf(G_m) >= chi_um(G_floor(m/2)) >= 3 floor(m/2) / 2",
                   3.0 * hd / 2.0, "half-grid relation chained with the 3m/2 bound"});
    out.push_back({"cf_lower_halfgrid_5m_over_3",
                   "chi_cf(G_m) >= chi_um(G_floor(m/2)) >= 5/3 floor(m/2) - log_{5/2} floor(m/2)",
                   5.0 * hd / 3.0 - log_base(hd, 2.5), "half-grid relation chained with the 5m/3 bound"});
    return out;
}

}  // namespace pathcolor
