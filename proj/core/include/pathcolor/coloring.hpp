#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "pathcolor/coloring_model.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

enum class Outcome { valid, invalid, inconclusive };

enum class ColoringKind { proper, unique_maximum, conflict_free };

std::string to_string(Outcome o);
std::string to_string(ColoringKind k);

/// Outcome of a verifier. An invalid verdict always carries a witness path;
/// inconclusive means the path budget ran out before a decision.
struct Verdict {
    Outcome outcome = Outcome::valid;
    std::optional<PathWitness> witness;
    std::uint64_t paths_examined = 0;

    bool valid() const noexcept { return outcome == Outcome::valid; }
    bool invalid() const noexcept { return outcome == Outcome::invalid; }
    bool inconclusive() const noexcept { return outcome == Outcome::inconclusive; }
};

inline constexpr std::uint64_t kDefaultPathBudget = 10'000'000;

/// Does this path break the defining condition of `kind`?
/// proper: some adjacent pair on the path shares a color.
/// unique_maximum: the top color occurs at least twice.
/// conflict_free: every color present occurs at least twice.
bool path_violates(ColoringKind kind, const Coloring& c, std::span<const Vertex> path);

Verdict verify_proper(const Graph& g, const Coloring& c);

/// Polynomial check: in every component the top color must be unique;
/// remove that vertex and recurse on what remains.
Verdict verify_unique_maximum(const Graph& g, const Coloring& c);

/// Exhaustive search for a path with no uniquely occurring color.
///
/// Paths are grown depth-first from every start vertex; a partial path is
/// abandoned as soon as one of its once-occurring colors has no uncovered
/// vertex left in the region still reachable from its tail. `budget`
/// bounds the number of partial paths examined.
Verdict verify_conflict_free(const Graph& g, const Coloring& c, std::uint64_t budget = kDefaultPathBudget);

/// Literal check of the definition over every simple path (test oracle).
Verdict brute_force_verify(const Graph& g, const Coloring& c, ColoringKind kind,
                           std::uint64_t budget = kDefaultPathBudget);

Verdict verify(const Graph& g, const Coloring& c, ColoringKind kind, std::uint64_t budget = kDefaultPathBudget);

/// Ruler coloring of P_n with floor(log2 n) + 1 colors.
Coloring um_coloring_path(int n);

/// Conflict-free coloring of H_k with 2^{k+1} - 1 colors.
Coloring cf_coloring_hedgehog(const HedgehogLayout& layout);

/// Unique-maximum coloring of H_k with 2^{k+2} - k - 3 colors.
Coloring um_coloring_hedgehog(const HedgehogLayout& layout);

}  // namespace pathcolor
