#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathcolor/coloring.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

struct SolverLimits {
    int chi_cap = 20;
    int um_cap = 24;
    int cf_cap = 16;
    /// Total partial paths the conflict-free search may examine across all checks.
    std::uint64_t cf_budget = 50'000'000;
};

struct ExactResult {
    int k = 0;
    Coloring certificate;
    std::uint64_t nodes = 0;
};

enum class SolveStatus { solved, inconclusive };

/// chi_cf search outcome. When inconclusive, [lower, upper] brackets the answer.
struct CfResult {
    SolveStatus status = SolveStatus::solved;
    int k = 0;
    int lower = 0;
    int upper = 0;
    std::optional<Coloring> certificate;
    std::uint64_t nodes = 0;
    std::uint64_t paths_examined = 0;

    bool solved() const noexcept { return status == SolveStatus::solved; }
};

/// Size of a largest clique (branch and bound over bitmasks, n <= 64).
int clique_number(const Graph& g);

/// Minimum proper coloring by branch and bound (DSATUR order, first-occurrence
/// symmetry breaking). Throws ResourceError above limits.chi_cap.
ExactResult chi_exact(const Graph& g, const SolverLimits& limits = {});

/// chi_um via the connected-component game value with subset memoization;
/// the certificate colors each optimal removal vertex with its set's value.
ExactResult chi_um_exact(const Graph& g, const SolverLimits& limits = {});

/// chi_cf by iterative deepening on k from max(clique number, 1): colorings are
/// enumerated vertex by vertex with first-occurrence symmetry breaking, and each
/// partial coloring must be conflict-free on the colored prefix.
CfResult chi_cf_exact(const Graph& g, const SolverLimits& limits = {});

/// All three chromatic numbers with certificates where obtainable.
struct ChromaticReport {
    std::optional<int> chi;
    std::optional<int> chi_cf;
    std::optional<int> chi_um;
    std::optional<Coloring> chi_certificate;
    std::optional<Coloring> cf_certificate;
    std::optional<Coloring> um_certificate;
    int cf_lower = 0;
    int cf_upper = 0;
    std::string method;
    std::uint64_t nodes = 0;

    /// chi <= chi_cf <= chi_um and chi_um <= 2^chi_cf - 1, for the values present.
    bool consistent() const;
};

ChromaticReport chromatic_report(const Graph& g, const SolverLimits& limits = {});

enum class ClosedFormFamily { path_um, path_cf, hedgehog_cf, hedgehog_um_interval };

struct IntInterval {
    long long lo = 0;
    long long hi = 0;

    bool exact() const noexcept { return lo == hi; }
    bool contains(long long x) const noexcept { return lo <= x && x <= hi; }
    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Throws GraphError for an unknown family name.
ClosedFormFamily parse_closed_form_family(const std::string& name);

/// path_um / path_cf: floor(log2 n) + 1; hedgehog_cf: 2^{k+1} - 1;
/// hedgehog_um_interval: [2^{k+2} - 2k - 3, 2^{k+2} - k - 3].
IntInterval closed_form(ClosedFormFamily family, long long param);

struct GridBound {
    std::string id;
    std::string statement;
    std::optional<double> value;  // absent when the published form is ambiguous
    std::string note;
};

/// Published lower and upper bounds for chi_um(G_m) and chi_cf(G_m), evaluated at m.
std::vector<GridBound> grid_bounds(int m);

}  // namespace pathcolor
