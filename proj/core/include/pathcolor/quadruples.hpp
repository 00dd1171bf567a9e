#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pathcolor/generators.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

enum class Direction { up, down, left, right };

inline constexpr std::array<Direction, 4> kDirections{Direction::up, Direction::down, Direction::left,
                                                      Direction::right};

Direction opposite(Direction d);
std::string to_string(Direction d);

/// Blocks the m x m grid (m even) into 2 x 2 quadruples
///   Q(x, y) = {(2x, 2y), (2x+1, 2y), (2x, 2y+1), (2x+1, 2y+1)}
/// indexed by the vertices (x, y) of the m/2 x m/2 grid. `lift` maps a small
/// vertex to its quadruple, `project` maps a big vertex back.
/// Directions follow the coordinates: up is +y, right is +x.
class QuadrupleMap {
public:
    explicit QuadrupleMap(int m);

    int m() const noexcept { return m_; }
    int half() const noexcept { return m_ / 2; }
    const Graph& big() const noexcept { return big_; }
    const Graph& small() const noexcept { return small_; }
    const GridLayout& big_layout() const noexcept { return big_layout_; }
    const GridLayout& small_layout() const noexcept { return small_layout_; }

    /// Vertices of Q(v) in G_m, ordered (2x,2y), (2x+1,2y), (2x,2y+1), (2x+1,2y+1).
    std::array<Vertex, 4> quadruple(Vertex small_vertex) const;
    VertexSubset lift(const VertexSubset& small_set) const;
    Vertex project(Vertex big_vertex) const;
    VertexSubset project(const VertexSubset& big_set) const;

    /// Neighbor of a small vertex in direction d, if it exists.
    std::optional<Vertex> neighbor(Vertex small_vertex, Direction d) const;
    /// The side of Q(v) facing direction d, as an edge of G_m.
    Edge d_edge(Vertex small_vertex, Direction d) const;
    /// v in s is open in direction d when its d-neighbor is missing or outside s.
    bool is_open(const VertexSubset& s, Vertex small_vertex, Direction d) const;

private:
    int m_;
    Graph big_;
    Graph small_;
    GridLayout big_layout_;
    GridLayout small_layout_;
};

/// A Hamiltonian cycle of G_m[lift(s)] for connected nonempty s, built by
/// adding quadruples along an always-connected ordering of s: each new
/// quadruple replaces the facing side of an already-placed neighbor by a
/// five-edge detour through its own four vertices. The cycle contains the
/// d-side of Q(v) whenever v is open in direction d.
///
/// Returned as a vertex sequence starting at its smallest id, continuing
/// toward the smaller of that vertex's two cycle neighbors.
std::vector<Vertex> path_spanning_cycle(const VertexSubset& s, const QuadrupleMap& qm);

}  // namespace pathcolor
