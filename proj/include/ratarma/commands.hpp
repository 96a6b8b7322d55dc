#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ratarma {

/// Shared run configuration for every CLI command. Identical configs produce
/// byte-identical output.
struct RunConfig {
    int order = 256;
    double grid_tol = 1e-4;
    int budget = 2000;
    int restarts = 8;
    std::uint64_t seed = 42;
    bool json = false;
    std::string out_path;  // empty writes to stdout
};

struct CommandResult {
    std::string text;      // human text or CSV, per command
    nlohmann::json json;   // {command, config, results, checks}
    bool all_passed = true;
};

/// Reference norms, the invertibility dictionary and the geometric truncation
/// table, each row checked against its closed-form bound.
CommandResult cmd_examples(const RunConfig& config);

/// CSV of |log(1+z/2) - candidate| on the circle for the degree-(1,1)
/// coefficient-matching candidate and the better non-matching one, plus a
/// summary row with both maxima. grid >= 64.
CommandResult cmd_figure1(const RunConfig& config, int grid);

/// Coefficient-matching baseline versus the supnorm-optimized rational of the
/// same order for the log(1+z/2) target, with the resulting ARMA recurrences.
CommandResult cmd_optimize(const RunConfig& config, int m, int n);

/// Truncation-versus-ARMA evidence table for the log(1+z) process, as CSV.
CommandResult cmd_conjecture(const RunConfig& config, const std::vector<int>& budgets,
                             int k_expand);

/// Compression-norm convergence report plus the bounded-invertible
/// counterexample report, as JSON.
CommandResult cmd_spectral_check(const RunConfig& config, const std::vector<int>& dims);

/// Serialize per config.json and write per config.out_path (stdout when empty).
void emit(const CommandResult& result, const RunConfig& config);

}  // namespace ratarma
