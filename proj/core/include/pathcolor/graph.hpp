#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathcolor/coloring_model.hpp"
#include "pathcolor/vertex_subset.hpp"

namespace pathcolor {

/// Undirected edge, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Labels = std::map<std::string, std::string>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction rejects self-loops, parallel edges and out-of-range ids.
/// Labels are opaque per-vertex metadata carried through serialization and
/// minor operations; no algorithm reads them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges, std::vector<Labels> labels = {});

    int n() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    const VertexSubset& neighborhood(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    VertexSubset all() const { return VertexSubset::full(n_); }
    VertexSubset none() const { return VertexSubset(n_); }

    bool connected() const;

    const Labels& labels(Vertex v) const;
    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<Labels>& label_table() const noexcept { return labels_; }
    Graph with_labels(std::vector<Labels> labels) const;

    /// Adjacency rows as 64-bit masks; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<VertexSubset> rows_;
    std::vector<Labels> labels_;
};

/// Simple path in canonical orientation (first id < last id when it has
/// at least two vertices).
class PathWitness {
public:
    PathWitness() = default;
    /// Reorients if needed; does not check adjacency.
    explicit PathWitness(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    int size() const noexcept { return static_cast<int>(vertices_.size()); }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

    /// Distinct vertices, each consecutive pair adjacent, nonempty.
    bool is_path_in(const Graph& g) const;
    VertexSubset vertex_set(int universe) const { return VertexSubset(universe, vertices_); }

    friend bool operator==(const PathWitness&, const PathWitness&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// True if `seq` is a nonempty sequence of distinct vertices with
/// consecutive pairs adjacent in g (either orientation accepted).
bool is_simple_path(const Graph& g, std::span<const Vertex> seq);

/// Maximal connected subsets of g[within], ordered by smallest member.
std::vector<VertexSubset> connected_components(const Graph& g, const VertexSubset& within);
std::vector<VertexSubset> connected_components(const Graph& g);

bool is_connected(const Graph& g, const VertexSubset& within);

/// True iff g - s is disconnected or empty. Throws GraphError if g is disconnected.
bool is_separator(const Graph& g, const VertexSubset& s);

/// Result of a vertex-removing or vertex-merging operation.
/// `renumber[old]` is the new id, or -1 for a deleted vertex.
struct MinorResult {
    Graph graph;
    std::optional<Coloring> coloring;
    std::vector<Vertex> renumber;
};

/// Merge the endpoints of e into one vertex carrying the larger color.
/// The merged vertex takes the position of the smaller endpoint; later ids shift down.
MinorResult contract_edge(const Graph& g, const std::optional<Coloring>& coloring, const Edge& e);
MinorResult delete_vertex(const Graph& g, const std::optional<Coloring>& coloring, Vertex v);
MinorResult delete_vertex(const Graph& g, Vertex v);
Graph delete_edge(const Graph& g, const Edge& e);

/// g[within] relabeled 0..|within|-1 in increasing id order.
MinorResult induced_subgraph(const Graph& g, const VertexSubset& within,
                             const std::optional<Coloring>& coloring = std::nullopt);

/// Restrict / transport a coloring along a renumbering map.
Coloring transport(const Coloring& c, const std::vector<Vertex>& renumber, int new_n);

enum class EnumerationStatus { exhausted, budget_exceeded, stopped };

struct EnumerationResult {
    EnumerationStatus status = EnumerationStatus::exhausted;
    std::uint64_t emitted = 0;
};

/// Receives each path in canonical orientation; return false to stop.
using PathVisitor = std::function<bool(std::span<const Vertex>)>;

/// Every simple path of g[within] exactly once, single vertices included.
/// Start vertices ascend; each start is explored depth-first with
/// neighbors in increasing order. Emitting a (budget+1)-th path is
/// refused and reported as budget_exceeded.
EnumerationResult enumerate_simple_paths(const Graph& g, const VertexSubset& within, std::uint64_t budget,
                                         const PathVisitor& visit);

/// Prefix-connected ordering: start at the smallest id, repeatedly append the
/// smallest id adjacent to the prefix. Throws on empty or disconnected input.
std::vector<Vertex> always_connected_ordering(const Graph& g, const VertexSubset& within);

/// Shortest path from `from` to `to` inside g[within] (BFS, smallest-id tie break).
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSubset& within, Vertex from, Vertex to);

/// Hamiltonian path of g[within] by subset DP over endpoints; requires |within| <= 24.
std::optional<std::vector<Vertex>> find_hamiltonian_path(const Graph& g, const VertexSubset& within);

}  // namespace pathcolor
