#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathcolor {

enum class ExperimentLevel { desk, stretch };

struct ExperimentOptions {
    ExperimentLevel level = ExperimentLevel::desk;
    std::uint64_t seed = 1;
};

enum class ClaimStatus { pass, fail, inconclusive, info };
std::string to_string(ClaimStatus s);

struct ClaimRow {
    std::string id;
    std::string claim;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::info;
};

struct ExperimentReport {
    std::string name;
    std::vector<ClaimRow> rows;

    bool any_failed() const;
    bool any_inconclusive() const;
};

/// Experiment names: paths, hedgehog, grid, reduction, games.
const std::vector<std::string>& experiment_names();
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options = {});

/// Tab-separated table with a header row; identical for identical inputs.
std::string render_report(const ExperimentReport& report);

}  // namespace pathcolor
