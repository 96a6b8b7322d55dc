#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratarma/norms.hpp"
#include "ratarma/rational.hpp"

namespace ratarma {

struct ApproxResult {
    RationalTransfer candidate;
    std::optional<NormEstimate> sup_error;  // absent when the target has no circle evaluation
    std::optional<double> l2_error;         // coefficient space, to the expansion order
    std::optional<double> l2_tail;
    int iterations = 0;  // objective evaluations spent
    bool feasible = false;
    bool budget_exhausted = false;
};

struct OptimizeOptions {
    int budget = 2000;   // objective evaluations per restart
    int restarts = 8;    // restart 0 starts exactly at init, the rest are seeded perturbations
    std::uint64_t seed = 42;
    double simplex_scale = 0.05;
    double pole_margin = 1e-3;     // required min(|pole|) - 1 for feasibility
    double penalty_weight = 1e3;   // times the initial objective scale
    double eval_tol = kDefaultGridTol;
    int expansion_order = 256;  // order for the reported coefficient-space l2 error
    /// Wold coefficients of the target; when present the result's l2_error is
    /// the coefficient-space distance to them at expansion_order.
    std::optional<PowerSeries> target_series;
};

/// Supnorm-optimal rational approximation of numerator degree m, denominator
/// degree n on the unit circle: Nelder-Mead over the m+n+1 free real
/// coefficients (q_0 fixed at 1) of
///     error_supnorm(target, candidate) + penalty * max(0, margin - (min|pole| - 1)).
/// Restarts are independent, deterministic per seed, run concurrently, and
/// merged by minimum objective with seed-index tiebreak. The returned
/// sup_error never exceeds the init's (init is re-scored with the same
/// estimator and kept if better). Throws InfeasibleInit when init violates
/// the pole margin or its degrees exceed (m, n).
ApproxResult optimize_supnorm(const Evaluatable& target, int m, int n,
                              const RationalTransfer& init, const OptimizeOptions& opts = {});

/// Degree-k truncation of s as a rational candidate (polynomial over 1).
/// l2_error is measured against the stored coefficients of s; sup_error is
/// present only when s admits a certified circle evaluation.
ApproxResult truncation_baseline(const PowerSeries& s, int k);

struct ConjectureCell {
    int budget = 0;
    std::string kind;  // "truncation" or "arma"
    int m = 0;
    int n = 0;
    double l2_error = 0.0;           // truncation rows include the exact tail; arma rows are the <=K partial
    double target_tail_bound = 0.0;  // sqrt(sum_{n>K_expand} 1/n^2), reported beside every row
    int evaluations = 0;
    std::string status;  // "ok" or the failure message
};

struct ConjectureOptions {
    std::vector<int> budgets = {2, 4, 8};
    int k_expand = 4096;
    int restarts = 8;
    int budget_per_restart = 2000;
    std::uint64_t seed = 42;
};

/// Evidence table for the log(1+z) process: per budget B, the exact l2 error
/// of the B-term truncation versus the best coefficient-space l2 achieved by
/// ARMA(m, n) candidates over every split m + n = B. The optimization
/// objective is the coefficient-space l2 (the target admits no certified
/// circle evaluation). Emits numbers only; no verdict. Per-cell failures are
/// recorded in the status column, not thrown.
std::vector<ConjectureCell> conjecture_explorer(const ConjectureOptions& opts = {});

/// Exact sqrt(sum_{n>k} 1/n^2) via zeta(2) minus the partial sum.
double log_series_truncation_l2(int k);

}  // namespace ratarma
