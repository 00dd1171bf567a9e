#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcolor/coloring.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

/// Two copies of G (the "up" block 0..n-1 and the "down" block n..2n-1)
/// joined by one connecting path per vertex i:
///   up_i, v(i,0), ..., v(i,i-1), v(i,i+1), ..., v(i,n-1), down_i
/// with the interior vertices numbered from 2n, grouped by i, ascending j.
/// Colors (1-based vertex numbers): up_i and down_i get i; for i > j both
/// v(i,j) and v(j,i) get n + C(i-1, 2) + j. Every color is used exactly twice.
struct ReductionArtifact {
    Graph gstar;
    Coloring coloring;
    std::vector<Vertex> up;
    std::vector<Vertex> down;
    std::map<std::pair<int, int>, Vertex> connector;  // 0-based (i, j), i != j
    std::vector<std::vector<Vertex>> connecting_paths;  // up_i ... down_i
};

ReductionArtifact build_reduction(const Graph& g);

/// Exact subset DP. Throws ResourceError above `cap` vertices.
std::optional<std::vector<Vertex>> hamiltonian_path_exists(const Graph& g, int cap = 12);

/// The all-vertex path of G* induced by a Hamiltonian path `order` of G: odd
/// positions run their connecting path downwards, even ones upwards, and
/// consecutive ones are joined through the copy where the previous one ended.
std::vector<Vertex> zigzag_path(const ReductionArtifact& r, const std::vector<Vertex>& order);

enum class Agreement { agree, disagree, inconclusive };
std::string to_string(Agreement a);

struct EquivalenceReport {
    Agreement agreement = Agreement::inconclusive;
    bool has_hamiltonian_path = false;
    Outcome cf_outcome = Outcome::inconclusive;
    std::optional<std::vector<Vertex>> hamiltonian_path;
    std::optional<std::vector<Vertex>> zigzag;
    /// Set when a zig-zag was built: it is a simple path of G* with no unique color.
    std::optional<bool> zigzag_violates;
    std::uint64_t paths_examined = 0;
};

/// Decides both sides independently and compares them; an unfinished
/// conflict-free search is reported as inconclusive, never as agreement.
EquivalenceReport check_reduction_equivalence(const Graph& g, std::uint64_t budget = kDefaultPathBudget,
                                              int cap = 12);

}  // namespace pathcolor
