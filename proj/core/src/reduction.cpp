#include "pathcolor/reduction.hpp"

#include "pathcolor/errors.hpp"

namespace pathcolor {

ReductionArtifact build_reduction(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw GraphError("reduction needs at least 2 vertices, got " + std::to_string(n));

    ReductionArtifact r;
    const int total = 2 * n + n * (n - 1);
    std::vector<int> colors(static_cast<std::size_t>(total), 0);
    std::vector<Edge> edges;
    std::vector<Labels> labels(static_cast<std::size_t>(total));

    for (int i = 0; i < n; ++i) {
        r.up.push_back(i);
        r.down.push_back(n + i);
        colors[static_cast<std::size_t>(i)] = colors[static_cast<std::size_t>(n + i)] = i + 1;
        labels[static_cast<std::size_t>(i)] = {{"role", "up"}, {"i", std::to_string(i)}};
        labels[static_cast<std::size_t>(n + i)] = {{"role", "down"}, {"i", std::to_string(i)}};
    }
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
        edges.push_back({n + e.u, n + e.v});
    }

    Vertex next = 2 * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            r.connector[{i, j}] = next;
            labels[static_cast<std::size_t>(next)] = {{"role", "connector"}, {"i", std::to_string(i)},
                                                      {"j", std::to_string(j)}};
            ++next;
        }

    for (const auto& [ij, v] : r.connector) {
        // 1-based (a, b) with a > b.
        const long long a = std::max(ij.first, ij.second) + 1;
        const long long b = std::min(ij.first, ij.second) + 1;
        colors[static_cast<std::size_t>(v)] = static_cast<int>(n + (a - 1) * (a - 2) / 2 + b);
    }

    for (int i = 0; i < n; ++i) {
        std::vector<Vertex> path{r.up[static_cast<std::size_t>(i)]};
        for (int j = 0; j < n; ++j)
            if (j != i) path.push_back(r.connector.at({i, j}));
        path.push_back(r.down[static_cast<std::size_t>(i)]);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) edges.push_back({path[t], path[t + 1]});
        r.connecting_paths.push_back(std::move(path));
    }

    r.gstar = Graph(total, edges, std::move(labels));
    r.coloring = Coloring(std::move(colors));
    return r;
}

std::optional<std::vector<Vertex>> hamiltonian_path_exists(const Graph& g, int cap) {
    if (g.n() > cap)
        throw ResourceError("hamiltonian_path_exists: " + std::to_string(g.n()) + " vertices exceeds cap " +
                            std::to_string(cap));
    if (g.n() == 0) return std::nullopt;
    return find_hamiltonian_path(g, g.all());
}

std::vector<Vertex> zigzag_path(const ReductionArtifact& r, const std::vector<Vertex>& order) {
    std::vector<Vertex> out;
    for (std::size_t t = 0; t < order.size(); ++t) {
        const auto& p = r.connecting_paths.at(static_cast<std::size_t>(order[t]));
        if (t % 2 == 0)
            out.insert(out.end(), p.begin(), p.end());
        else
            out.insert(out.end(), p.rbegin(), p.rend());
    }
    return out;
}

std::string to_string(Agreement a) {
    switch (a) {
        case Agreement::agree: return "agree";
        case Agreement::disagree: return "disagree";
        case Agreement::inconclusive: return "inconclusive";
    }
    return "?";
}

EquivalenceReport check_reduction_equivalence(const Graph& g, std::uint64_t budget, int cap) {
    EquivalenceReport rep;
    const ReductionArtifact r = build_reduction(g);

    rep.hamiltonian_path = hamiltonian_path_exists(g, cap);
    rep.has_hamiltonian_path = rep.hamiltonian_path.has_value();
    if (rep.hamiltonian_path) {
        rep.zigzag = zigzag_path(r, *rep.hamiltonian_path);
        rep.zigzag_violates = is_simple_path(r.gstar, *rep.zigzag) &&
                              path_violates(ColoringKind::conflict_free, r.coloring, *rep.zigzag);
    }

    const Verdict v = verify_conflict_free(r.gstar, r.coloring, budget);
    rep.cf_outcome = v.outcome;
    rep.paths_examined = v.paths_examined;
    if (v.inconclusive()) {
        rep.agreement = Agreement::inconclusive;
        return rep;
    }
    const bool consistent = rep.has_hamiltonian_path == v.invalid();
    rep.agreement = consistent && rep.zigzag_violates.value_or(true) ? Agreement::agree : Agreement::disagree;
    return rep;
}

}  // namespace pathcolor
