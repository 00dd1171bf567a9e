#include "pathcolor/generators.hpp"

#include <string>

#include "pathcolor/errors.hpp"

namespace pathcolor {

Graph path_graph(int n) {
    if (n < 0) throw GraphError("path_graph: negative order");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("complete_graph: negative order");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw GraphError("star_graph: negative leaf count");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph complete_binary_tree(int levels) {
    if (levels < 1 || levels > 20) throw GraphError("complete_binary_tree: levels must be in 1..20");
    const int n = (1 << levels) - 1;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return Graph(n, edges);
}

std::pair<Graph, GridLayout> grid_graph(int m) {
    if (m < 1) throw GraphError("grid_graph: side must be at least 1");
    GridLayout layout{m};
    std::vector<Edge> edges;
    std::vector<Labels> labels(static_cast<std::size_t>(m * m));
    for (int y = 0; y < m; ++y) {
        for (int x = 0; x < m; ++x) {
            const Vertex v = layout.id(x, y);
            if (x + 1 < m) edges.emplace_back(v, layout.id(x + 1, y));
            if (y + 1 < m) edges.emplace_back(v, layout.id(x, y + 1));
            labels[static_cast<std::size_t>(v)] = {{"x", std::to_string(x)}, {"y", std::to_string(y)}};
        }
    }
    return {Graph(m * m, edges, std::move(labels)), layout};
}

std::vector<Vertex> HedgehogLayout::vertices() const {
    std::vector<Vertex> out;
    if (k == 0) {
        out.push_back(port);
        return out;
    }
    out = clique;
    for (const auto& c : copies) {
        auto sub = c.vertices();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::int64_t hedgehog_order(int k) {
    if (k < 0) throw GraphError("hedgehog: negative level");
    std::int64_t order = 1;
    for (int level = 1; level <= k; ++level) {
        const std::int64_t clique = (std::int64_t{1} << (level + 1)) - 1;
        if (order > (std::int64_t{1} << 40)) throw ResourceError("hedgehog order overflow");
        order = clique * (1 + order);
    }
    return order;
}

namespace {

HedgehogLayout build_hedgehog(int k, Vertex& next, std::vector<Edge>& edges, std::vector<Labels>& labels) {
    HedgehogLayout layout;
    layout.k = k;
    if (k == 0) {
        layout.port = next++;
        labels.push_back({{"role", "leaf"}, {"level", "0"}});
        return layout;
    }
    const int clique_size = (1 << (k + 1)) - 1;
    for (int i = 0; i < clique_size; ++i) {
        layout.clique.push_back(next++);
        labels.push_back({{"role", "clique"}, {"level", std::to_string(k)}});
    }
    for (int i = 0; i < clique_size; ++i)
        for (int j = i + 1; j < clique_size; ++j)
            edges.emplace_back(layout.clique[static_cast<std::size_t>(i)], layout.clique[static_cast<std::size_t>(j)]);
    for (int i = 0; i < clique_size; ++i) {
        HedgehogLayout copy = build_hedgehog(k - 1, next, edges, labels);
        edges.emplace_back(layout.clique[static_cast<std::size_t>(i)], copy.port);
        layout.copies.push_back(std::move(copy));
    }
    layout.port = layout.clique.front();
    layout.vertex_count = clique_size;
    for (const auto& c : layout.copies) layout.vertex_count += c.vertex_count;
    return layout;
}

}  // namespace

std::pair<Graph, HedgehogLayout> hedgehog(int k, std::int64_t vertex_cap) {
    const std::int64_t order = hedgehog_order(k);
    if (order > vertex_cap)
        throw ResourceError("hedgehog(" + std::to_string(k) + ") has " + std::to_string(order) +
                            " vertices, above cap " + std::to_string(vertex_cap));
    Vertex next = 0;
    std::vector<Edge> edges;
    std::vector<Labels> labels;
    HedgehogLayout layout = build_hedgehog(k, next, edges, labels);
    return {Graph(static_cast<int>(order), edges, std::move(labels)), std::move(layout)};
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Graph> all_labeled_graphs(int n) {
    if (n < 0 || n > 7) throw ResourceError("all_labeled_graphs supports n <= 7");
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    out.reserve(total);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((bits >> i) & 1U) edges.push_back(slots[i]);
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace pathcolor
