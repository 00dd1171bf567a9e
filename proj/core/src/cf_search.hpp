#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pathcolor/graph.hpp"

namespace pathcolor::detail {

enum class SearchStatus { none_found, found, budget_exceeded };

struct ConflictSearchResult {
    SearchStatus status = SearchStatus::none_found;
    std::vector<Vertex> path;  // set when found, in discovery orientation
    std::uint64_t examined = 0;
};

/// Search g[within] for a simple path on which no color occurs exactly once.
/// `colors[v]` must be positive for every v in `within`; other entries are
/// ignored. When `required` is set only paths through it count.
ConflictSearchResult find_conflict_path(const Graph& g, std::span<const int> colors, const VertexSubset& within,
                                        std::optional<Vertex> required, std::uint64_t budget);

}  // namespace pathcolor::detail
