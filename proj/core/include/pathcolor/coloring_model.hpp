#pragma once

#include <vector>

#include "pathcolor/vertex_subset.hpp"

namespace pathcolor {

/// Total map vertex -> color in 1..k, with k the largest color in use.
class Coloring {
public:
    Coloring() = default;
    /// Throws GraphError if any entry is < 1.
    explicit Coloring(std::vector<int> colors);

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    int k() const noexcept { return k_; }
    int operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const noexcept { return colors_; }

    /// Number of distinct colors actually used (may be below k for CF purposes).
    int distinct() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
    int k_ = 0;
};

}  // namespace pathcolor
