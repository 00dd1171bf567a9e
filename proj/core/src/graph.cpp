#include "pathcolor/graph.hpp"

#include <algorithm>
#include <deque>

#include "pathcolor/errors.hpp"

namespace pathcolor {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<Labels> labels) : n_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    rows_.assign(static_cast<std::size_t>(n), VertexSubset(n));
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        const Edge e(raw.u, raw.v);
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (rows_[static_cast<std::size_t>(e.u)].contains(e.v))
            throw GraphError("parallel edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        rows_[static_cast<std::size_t>(e.u)].insert(e.v);
        rows_[static_cast<std::size_t>(e.v)].insert(e.u);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (Vertex v = 0; v < n; ++v) adjacency_[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].members();

    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n) throw GraphError("label table size differs from vertex count");
        if (std::any_of(labels.begin(), labels.end(), [](const Labels& l) { return !l.empty(); }))
            labels_ = std::move(labels);
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return rows_[static_cast<std::size_t>(u)].contains(v);
}

bool Graph::connected() const { return is_connected(*this, all()); }

const Labels& Graph::labels(Vertex v) const {
    static const Labels empty;
    check_vertex(v);
    return labels_.empty() ? empty : labels_[static_cast<std::size_t>(v)];
}

Graph Graph::with_labels(std::vector<Labels> labels) const { return Graph(n_, edges_, std::move(labels)); }

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw ResourceError("bitmask adjacency requires n <= 64, got " + std::to_string(n_));
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].mask();
    return out;
}

PathWitness::PathWitness(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() >= 2 && vertices_.front() > vertices_.back()) std::reverse(vertices_.begin(), vertices_.end());
}

bool PathWitness::is_path_in(const Graph& g) const { return is_simple_path(g, vertices_); }

bool is_simple_path(const Graph& g, std::span<const Vertex> seq) {
    if (seq.empty()) return false;
    VertexSubset seen(g.n());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Vertex v = seq[i];
        if (v < 0 || v >= g.n() || seen.contains(v)) return false;
        seen.insert(v);
        if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
    }
    return true;
}

namespace {

void check_subset(const Graph& g, const VertexSubset& s) {
    if (s.universe() != g.n()) throw GraphError("vertex subset universe differs from graph order");
}

VertexSubset flood(const Graph& g, const VertexSubset& within, Vertex start) {
    VertexSubset seen(g.n());
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (within.contains(w) && !seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& within) {
    check_subset(g, within);
    std::vector<VertexSubset> out;
    VertexSubset left = within;
    for (Vertex v = left.first(); v != -1; v = left.first()) {
        VertexSubset comp = flood(g, within, v);
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSubset> connected_components(const Graph& g) { return connected_components(g, g.all()); }

bool is_connected(const Graph& g, const VertexSubset& within) {
    check_subset(g, within);
    const Vertex v = within.first();
    if (v == -1) return true;
    return flood(g, within, v) == within;
}

bool is_separator(const Graph& g, const VertexSubset& s) {
    check_subset(g, s);
    if (!g.connected()) throw GraphError("separators are defined for connected graphs only");
    const VertexSubset rest = g.all() - s;
    if (rest.empty()) return true;
    return connected_components(g, rest).size() != 1;
}

Coloring transport(const Coloring& c, const std::vector<Vertex>& renumber, int new_n) {
    if (static_cast<int>(renumber.size()) != c.size()) throw GraphError("renumbering map does not match coloring");
    std::vector<int> out(static_cast<std::size_t>(new_n), 0);
    for (std::size_t old = 0; old < renumber.size(); ++old) {
        const Vertex nv = renumber[old];
        if (nv < 0) continue;
        auto& slot = out[static_cast<std::size_t>(nv)];
        slot = std::max(slot, c[static_cast<Vertex>(old)]);
    }
    return Coloring(std::move(out));
}

namespace {

MinorResult rebuild(const Graph& g, const std::optional<Coloring>& coloring, std::vector<Vertex> renumber, int new_n,
                    const std::optional<Edge>& skip_edge = std::nullopt) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (skip_edge && e == *skip_edge) continue;
        const Vertex a = renumber[static_cast<std::size_t>(e.u)];
        const Vertex b = renumber[static_cast<std::size_t>(e.v)];
        if (a < 0 || b < 0 || a == b) continue;
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Labels> labels;
    if (g.has_labels()) {
        labels.resize(static_cast<std::size_t>(new_n));
        // First surviving old vertex mapped to a slot supplies its labels.
        std::vector<bool> filled(static_cast<std::size_t>(new_n), false);
        for (Vertex old = 0; old < g.n(); ++old) {
            const Vertex nv = renumber[static_cast<std::size_t>(old)];
            if (nv < 0 || filled[static_cast<std::size_t>(nv)]) continue;
            labels[static_cast<std::size_t>(nv)] = g.labels(old);
            filled[static_cast<std::size_t>(nv)] = true;
        }
    }

    MinorResult out;
    out.graph = Graph(new_n, edges, std::move(labels));
    if (coloring) {
        if (coloring->size() != g.n()) throw GraphError("coloring size differs from vertex count");
        out.coloring = transport(*coloring, renumber, new_n);
    }
    out.renumber = std::move(renumber);
    return out;
}

}  // namespace

MinorResult contract_edge(const Graph& g, const std::optional<Coloring>& coloring, const Edge& e) {
    if (!g.has_edge(e))
        throw GraphError("cannot contract " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": not an edge");
    std::vector<Vertex> renumber(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) {
        if (v < e.v)
            renumber[static_cast<std::size_t>(v)] = v;
        else if (v == e.v)
            renumber[static_cast<std::size_t>(v)] = e.u;
        else
            renumber[static_cast<std::size_t>(v)] = v - 1;
    }
    return rebuild(g, coloring, std::move(renumber), g.n() - 1);
}

MinorResult delete_vertex(const Graph& g, const std::optional<Coloring>& coloring, Vertex v) {
    if (v < 0 || v >= g.n()) throw GraphError("cannot delete vertex " + std::to_string(v) + ": not in graph");
    std::vector<Vertex> renumber(static_cast<std::size_t>(g.n()));
    for (Vertex u = 0; u < g.n(); ++u) renumber[static_cast<std::size_t>(u)] = u < v ? u : (u == v ? -1 : u - 1);
    return rebuild(g, coloring, std::move(renumber), g.n() - 1);
}

MinorResult delete_vertex(const Graph& g, Vertex v) { return delete_vertex(g, std::nullopt, v); }

Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e))
        throw GraphError("cannot delete " + std::to_string(e.u) + "-" + std::to_string(e.v) + ": not an edge");
    std::vector<Vertex> identity(static_cast<std::size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) identity[static_cast<std::size_t>(v)] = v;
    return rebuild(g, std::nullopt, std::move(identity), g.n(), e).graph;
}

MinorResult induced_subgraph(const Graph& g, const VertexSubset& within, const std::optional<Coloring>& coloring) {
    check_subset(g, within);
    std::vector<Vertex> renumber(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    within.for_each([&](Vertex v) { renumber[static_cast<std::size_t>(v)] = next++; });
    return rebuild(g, coloring, std::move(renumber), next);
}

EnumerationResult enumerate_simple_paths(const Graph& g, const VertexSubset& within, std::uint64_t budget,
                                         const PathVisitor& visit) {
    check_subset(g, within);
    if (budget == 0) throw GraphError("path enumeration budget must be positive");

    EnumerationResult result;
    std::vector<Vertex> path;
    VertexSubset on_path(g.n());
    bool halt = false;

    // Returns false once enumeration must halt.
    auto emit = [&]() {
        if (result.emitted == budget) {
            result.status = EnumerationStatus::budget_exceeded;
            return false;
        }
        ++result.emitted;
        if (!visit(path)) {
            result.status = EnumerationStatus::stopped;
            return false;
        }
        return true;
    };

    std::function<void()> extend = [&]() {
        const Vertex tail = path.back();
        for (Vertex w : g.neighbors(tail)) {
            if (halt) return;
            if (!within.contains(w) || on_path.contains(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            if (w > path.front() && !emit()) halt = true;
            if (!halt) extend();
            on_path.erase(w);
            path.pop_back();
        }
    };

    for (Vertex s = within.first(); s != -1 && !halt; s = within.next(s)) {
        path.assign(1, s);
        on_path.insert(s);
        if (!emit()) halt = true;
        if (!halt) extend();
        on_path.erase(s);
    }
    return result;
}

std::vector<Vertex> always_connected_ordering(const Graph& g, const VertexSubset& within) {
    check_subset(g, within);
    if (within.empty()) throw GraphError("always-connected ordering of an empty vertex set");
    std::vector<Vertex> order;
    VertexSubset placed(g.n());
    VertexSubset frontier(g.n());
    Vertex v = within.first();
    while (true) {
        order.push_back(v);
        placed.insert(v);
        for (Vertex w : g.neighbors(v))
            if (within.contains(w) && !placed.contains(w)) frontier.insert(w);
        frontier.erase(v);
        v = frontier.first();
        if (v == -1) break;
    }
    if (static_cast<int>(order.size()) != within.count())
        throw GraphError("always-connected ordering requires a connected vertex set");
    return order;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSubset& within, Vertex from, Vertex to) {
    check_subset(g, within);
    if (!within.contains(from) || !within.contains(to)) return std::nullopt;
    std::vector<Vertex> parent(static_cast<std::size_t>(g.n()), -1);
    VertexSubset seen(g.n());
    std::deque<Vertex> queue{from};
    seen.insert(from);
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (Vertex w : g.neighbors(u)) {
            if (!within.contains(w) || seen.contains(w)) continue;
            seen.insert(w);
            parent[static_cast<std::size_t>(w)] = u;
            queue.push_back(w);
        }
    }
    if (!seen.contains(to)) return std::nullopt;
    std::vector<Vertex> out;
    for (Vertex v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<std::vector<Vertex>> find_hamiltonian_path(const Graph& g, const VertexSubset& within) {
    check_subset(g, within);
    const std::vector<Vertex> ids = within.members();
    const int k = static_cast<int>(ids.size());
    if (k == 0) return std::nullopt;
    if (k > 24) throw ResourceError("Hamiltonian path search limited to 24 vertices, got " + std::to_string(k));

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g.adjacent(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)])) adj[static_cast<std::size_t>(a)] |= 1U << b;

    // ends[mask]: endpoints of Hamiltonian paths of the local subgraph on mask.
    const std::uint32_t full = k == 32 ? ~0U : (1U << k) - 1;
    std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
    for (int v = 0; v < k; ++v) ends[1U << v] = 1U << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t e = ends[mask];
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1U << w)] |= 1U << w;
            }
        }
    }
    if (!ends[full]) return std::nullopt;

    std::vector<Vertex> out;
    std::uint32_t mask = full;
    int v = std::countr_zero(ends[full]);
    while (true) {
        out.push_back(ids[static_cast<std::size_t>(v)]);
        const std::uint32_t rest = mask & ~(1U << v);
        if (!rest) break;
        const std::uint32_t cand = ends[rest] & adj[static_cast<std::size_t>(v)];
        v = std::countr_zero(cand);
        mask = rest;
    }
    return out;
}

}  // namespace pathcolor
