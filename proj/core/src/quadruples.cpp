#include "pathcolor/quadruples.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "pathcolor/errors.hpp"

namespace pathcolor {

Direction opposite(Direction d) {
    switch (d) {
        case Direction::up: return Direction::down;
        case Direction::down: return Direction::up;
        case Direction::left: return Direction::right;
        case Direction::right: return Direction::left;
    }
    return d;
}

std::string to_string(Direction d) {
    switch (d) {
        case Direction::up: return "up";
        case Direction::down: return "down";
        case Direction::left: return "left";
        case Direction::right: return "right";
    }
    return "?";
}

QuadrupleMap::QuadrupleMap(int m) : m_(m) {
    if (m < 2 || m % 2 != 0)
        throw GraphError("quadruple map needs an even side >= 2, got " + std::to_string(m) +
                         " (play inside G_{m-1} for odd m)");
    std::tie(big_, big_layout_) = grid_graph(m);
    std::tie(small_, small_layout_) = grid_graph(m / 2);
}

std::array<Vertex, 4> QuadrupleMap::quadruple(Vertex small_vertex) const {
    const int x = small_layout_.x(small_vertex);
    const int y = small_layout_.y(small_vertex);
    return {big_layout_.id(2 * x, 2 * y), big_layout_.id(2 * x + 1, 2 * y), big_layout_.id(2 * x, 2 * y + 1),
            big_layout_.id(2 * x + 1, 2 * y + 1)};
}

VertexSubset QuadrupleMap::lift(const VertexSubset& small_set) const {
    if (small_set.universe() != small_.n()) throw GraphError("lift: subset is not over the half grid");
    VertexSubset out(big_.n());
    small_set.for_each([&](Vertex v) {
        for (Vertex b : quadruple(v)) out.insert(b);
    });
    return out;
}

Vertex QuadrupleMap::project(Vertex big_vertex) const {
    return small_layout_.id(big_layout_.x(big_vertex) / 2, big_layout_.y(big_vertex) / 2);
}

VertexSubset QuadrupleMap::project(const VertexSubset& big_set) const {
    if (big_set.universe() != big_.n()) throw GraphError("project: subset is not over the full grid");
    VertexSubset out(small_.n());
    big_set.for_each([&](Vertex v) { out.insert(project(v)); });
    return out;
}

std::optional<Vertex> QuadrupleMap::neighbor(Vertex small_vertex, Direction d) const {
    int x = small_layout_.x(small_vertex);
    int y = small_layout_.y(small_vertex);
    switch (d) {
        case Direction::up: ++y; break;
        case Direction::down: --y; break;
        case Direction::left: --x; break;
        case Direction::right: ++x; break;
    }
    if (!small_layout_.in_range(x, y)) return std::nullopt;
    return small_layout_.id(x, y);
}

Edge QuadrupleMap::d_edge(Vertex small_vertex, Direction d) const {
    const auto q = quadruple(small_vertex);  // [0]=(2x,2y) [1]=(2x+1,2y) [2]=(2x,2y+1) [3]=(2x+1,2y+1)
    switch (d) {
        case Direction::up: return {q[2], q[3]};
        case Direction::down: return {q[0], q[1]};
        case Direction::left: return {q[0], q[2]};
        case Direction::right: return {q[1], q[3]};
    }
    throw GraphError("unknown direction");
}

bool QuadrupleMap::is_open(const VertexSubset& s, Vertex small_vertex, Direction d) const {
    const auto nb = neighbor(small_vertex, d);
    return !nb || !s.contains(*nb);
}

namespace {

// Cycle stored as each vertex's two cycle neighbors.
class CycleBuilder {
public:
    void add_edge(Vertex a, Vertex b) {
        slot(a).push_back(b);
        slot(b).push_back(a);
    }

    void replace(Vertex at, Vertex old_nb, Vertex new_nb) {
        auto& s = slot(at);
        for (auto& x : s)
            if (x == old_nb) {
                x = new_nb;
                return;
            }
        throw GraphError("cycle splice: missing edge");
    }

    void set(Vertex at, Vertex x, Vertex y) { next_[at] = {x, y}; }

    std::vector<Vertex> sequence() const {
        Vertex start = -1;
        for (const auto& [v, nbs] : next_)
            if (start == -1 || v < start) start = v;
        std::vector<Vertex> out{start};
        const auto& first = next_.at(start);
        Vertex prev = start;
        Vertex cur = std::min(first[0], first[1]);
        while (cur != start) {
            out.push_back(cur);
            const auto& nbs = next_.at(cur);
            const Vertex nxt = nbs[0] == prev ? nbs[1] : nbs[0];
            prev = cur;
            cur = nxt;
        }
        return out;
    }

private:
    std::vector<Vertex>& slot(Vertex v) { return next_[v]; }

    std::unordered_map<Vertex, std::vector<Vertex>> next_;
};

}  // namespace

std::vector<Vertex> path_spanning_cycle(const VertexSubset& s, const QuadrupleMap& qm) {
    if (s.universe() != qm.small().n()) throw GraphError("path_spanning_cycle: subset is not over the half grid");
    if (s.empty()) throw GraphError("path_spanning_cycle: empty set");
    if (!is_connected(qm.small(), s)) throw GraphError("path_spanning_cycle: set is not connected");

    const std::vector<Vertex> order = always_connected_ordering(qm.small(), s);
    CycleBuilder cycle;
    {
        const auto q = qm.quadruple(order.front());
        cycle.add_edge(q[0], q[1]);
        cycle.add_edge(q[1], q[3]);
        cycle.add_edge(q[3], q[2]);
        cycle.add_edge(q[2], q[0]);
    }
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Vertex fresh = order[k];
        // Attach to the earliest placed neighbor in the ordering.
        Vertex anchor = -1;
        Direction dir = Direction::up;
        for (std::size_t i = 0; i < k && anchor == -1; ++i) {
            for (Direction d : kDirections) {
                if (qm.neighbor(order[i], d) == fresh) {
                    anchor = order[i];
                    dir = d;
                    break;
                }
            }
        }
        if (anchor == -1) throw GraphError("path_spanning_cycle: ordering is not always-connected");

        const Edge side = qm.d_edge(anchor, dir);
        const Edge facing = qm.d_edge(fresh, opposite(dir));
        // Pair each endpoint of the anchor side with its grid neighbor on the facing side.
        Vertex a = side.u, b = side.v;
        Vertex a2 = qm.big().adjacent(a, facing.u) ? facing.u : facing.v;
        Vertex b2 = a2 == facing.u ? facing.v : facing.u;
        // The remaining two quadruple vertices, each next to one facing endpoint.
        Vertex ca = -1, cb = -1;
        for (Vertex q : qm.quadruple(fresh)) {
            if (q == a2 || q == b2) continue;
            if (qm.big().adjacent(q, a2))
                ca = q;
            else
                cb = q;
        }
        cycle.replace(a, b, a2);
        cycle.replace(b, a, b2);
        cycle.set(a2, a, ca);
        cycle.set(ca, a2, cb);
        cycle.set(cb, ca, b2);
        cycle.set(b2, cb, b);
    }
    return cycle.sequence();
}

}  // namespace pathcolor
