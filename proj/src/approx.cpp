#include "ratarma/approx.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <thread>

namespace ratarma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Nelder-Mead with standard coefficients. Deterministic given the start
// simplex; stops on simplex collapse or when the evaluation budget runs out.

struct NelderMeadResult {
    std::vector<double> best_x;
    double best_f = kInf;
    int evaluations = 0;
    bool converged = false;
};

template <typename F>
NelderMeadResult nelder_mead(F&& objective, const std::vector<double>& start, double step,
                             int budget) {
    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    const int dim = static_cast<int>(start.size());
    NelderMeadResult out;

    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);

    auto evaluate = [&](const std::vector<double>& x) {
        ++out.evaluations;
        const double f = objective(x);
        if (f < out.best_f) {
            out.best_f = f;
            out.best_x = x;
        }
        return f;
    };

    simplex.push_back({start, evaluate(start)});
    for (int i = 0; i < dim; ++i) {
        std::vector<double> x = start;
        x[i] += step;
        simplex.push_back({x, evaluate(x)});
    }

    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    while (out.evaluations < budget) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        const Vertex& best = simplex.front();
        Vertex& worst = simplex.back();

        double spread = 0.0;
        for (const Vertex& v : simplex)
            for (int i = 0; i < dim; ++i)
                spread = std::max(spread, std::abs(v.x[i] - best.x[i]));
        if (spread < 1e-10 && worst.f - best.f < 1e-12 * (1.0 + std::abs(best.f))) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (int v = 0; v < dim; ++v)
            for (int i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i] / dim;

        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (int i = 0; i < dim; ++i) x[i] = centroid[i] + t * (worst.x[i] - centroid[i]);
            return x;
        };

        const std::vector<double> xr = blend(-alpha);
        const double fr = evaluate(xr);
        if (fr < best.f) {
            const std::vector<double> xe = blend(-alpha * gamma);
            const double fe = evaluate(xe);
            if (fe < fr)
                worst = {xe, fe};
            else
                worst = {xr, fr};
            continue;
        }
        if (fr < simplex[dim - 1].f) {
            worst = {xr, fr};
            continue;
        }
        const std::vector<double> xc = blend(fr < worst.f ? -rho : rho);
        const double fc = evaluate(xc);
        if (fc < std::min(fr, worst.f)) {
            worst = {xc, fc};
            continue;
        }
        // Shrink toward the best vertex.
        for (int v = 1; v <= dim; ++v) {
            for (int i = 0; i < dim; ++i)
                simplex[v].x[i] = best.x[i] + sigma * (simplex[v].x[i] - best.x[i]);
            simplex[v].f = evaluate(simplex[v].x);
            if (out.evaluations >= budget) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Shared machinery for rational candidates parameterized by their free real
// coefficients p_0..p_m, q_1..q_n (q_0 fixed at 1).

std::vector<Complex> den_coeffs(const std::vector<double>& params, int m, int n) {
    std::vector<Complex> q(n + 1, Complex{0.0, 0.0});
    q[0] = Complex{1.0, 0.0};
    for (int j = 1; j <= n; ++j) q[j] = Complex{params[m + j], 0.0};
    return q;
}

std::vector<Complex> num_coeffs(const std::vector<double>& params, int m) {
    std::vector<Complex> p(m + 1);
    for (int j = 0; j <= m; ++j) p[j] = Complex{params[j], 0.0};
    return p;
}

// min |root| - 1 over the denominator roots; +inf when the denominator is
// constant (no poles).
double pole_excess(const std::vector<Complex>& q) {
    Polynomial den{std::vector<Complex>(q)};
    if (den.degree() == 0) return kInf;
    double excess = kInf;
    for (const RootLocation& r : roots(den, 1e-12).roots)
        excess = std::min(excess, r.modulus - 1.0);
    return excess;
}

std::vector<double> params_from(const RationalTransfer& r, int m, int n) {
    if (r.num().degree() > m || r.den().degree() > n)
        throw InfeasibleInit("optimize_supnorm: init degrees exceed the requested (m, n)");
    std::vector<double> params(m + n + 1, 0.0);
    for (int j = 0; j <= m; ++j) params[j] = r.num().coeff(j).real();
    for (int j = 1; j <= n; ++j) params[m + j] = r.den().coeff(j).real();
    return params;
}

// Supnorm of |target - p/q| with the spec's dyadic refinement, evaluating the
// target through a cache shared across candidates. Pole hits on the grid
// yield +inf rather than throwing inside the hot loop.
class CachedErrorSupnorm {
  public:
    CachedErrorSupnorm(const Evaluatable& target, double tol) : target_(target), tol_(tol) {
        for (int g = kSupnormInitialGrid; g <= 4 * kSupnormInitialGrid; g *= 2) level(g);
    }

    double operator()(const std::vector<Complex>& p, const std::vector<Complex>& q) const {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        auto abs_err = [&](Complex z, Complex tv) {
            Complex d{0.0, 0.0}, nmr{0.0, 0.0};
            for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) d = d * z + q[k];
            for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) nmr = nmr * z + p[k];
            const double dm = std::abs(d);
            if (dm < 1e-14) return kInf;
            return std::abs(tv - nmr / d);
        };

        int grid = kSupnormInitialGrid;
        const std::vector<Complex>& base = level(grid);
        double best = 0.0;
        for (int k = 0; k < grid; ++k) {
            const double v = abs_err(std::polar(1.0, two_pi * k / grid), base[k]);
            if (v > best) best = v;
        }
        while (true) {
            const int next = grid * 2;
            if (next > kSupnormMaxGrid) break;
            const std::vector<Complex>& vals = level(next);
            const double prev = best;
            for (int k = 1; k < next; k += 2) {
                const double v = abs_err(std::polar(1.0, two_pi * k / next), vals[k]);
                if (v > best) best = v;
            }
            grid = next;
            if (best - prev < tol_ || !std::isfinite(best)) break;
        }
        return best;
    }

  private:
    // Levels are precomputed for the common grids in the constructor, so
    // concurrent lookups never mutate; rarely-reached deeper levels fall back
    // to uncached evaluation.
    const std::vector<Complex>& level(int grid) const {
        auto it = cache_.find(grid);
        if (it != cache_.end()) return it->second;
        constexpr double two_pi = 2.0 * std::numbers::pi;
        std::vector<Complex> vals(grid);
        for (int k = 0; k < grid; ++k) vals[k] = target_(std::polar(1.0, two_pi * k / grid));
        return cache_.emplace(grid, std::move(vals)).first->second;
    }

    const Evaluatable& target_;
    double tol_;
    mutable std::map<int, std::vector<Complex>> cache_;
};

struct RestartOutcome {
    NelderMeadResult nm;
    int index = 0;
};

}  // namespace

ApproxResult optimize_supnorm(const Evaluatable& target, int m, int n,
                              const RationalTransfer& init, const OptimizeOptions& opts) {
    const std::vector<double> start = params_from(init, m, n);
    const double init_excess = pole_excess(den_coeffs(start, m, n));
    if (init_excess < opts.pole_margin)
        throw InfeasibleInit("optimize_supnorm: init pole margin below the required delta");

    CachedErrorSupnorm sup_of(target, opts.eval_tol);
    const double init_sup = sup_of(num_coeffs(start, m), den_coeffs(start, m, n));
    const double penalty = opts.penalty_weight * std::max(init_sup, 1e-6);

    auto objective = [&](const std::vector<double>& x) {
        const auto q = den_coeffs(x, m, n);
        const double excess = pole_excess(q);
        double value = sup_of(num_coeffs(x, m), q);
        if (excess < opts.pole_margin)
            value += penalty * (opts.pole_margin - std::min(excess, opts.pole_margin));
        return value;
    };

    auto run_restart = [&](int index) {
        std::vector<double> x0 = start;
        if (index > 0) {
            std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(index));
            std::uniform_real_distribution<double> jitter(-opts.simplex_scale, opts.simplex_scale);
            for (double& v : x0) v += jitter(rng);
        }
        return RestartOutcome{nelder_mead(objective, x0, opts.simplex_scale, opts.budget), index};
    };

    std::vector<RestartOutcome> outcomes(opts.restarts);
    {
        std::vector<std::future<RestartOutcome>> futures;
        futures.reserve(opts.restarts);
        for (int i = 0; i < opts.restarts; ++i)
            futures.push_back(std::async(std::launch::async, run_restart, i));
        for (int i = 0; i < opts.restarts; ++i) outcomes[i] = futures[i].get();
    }

    // Merge by minimum objective; ties go to the lowest restart index, which
    // the in-order scan provides.
    const RestartOutcome* best = &outcomes[0];
    for (const RestartOutcome& o : outcomes)
        if (o.nm.best_f < best->nm.best_f) best = &o;

    int total_evals = 0;
    for (const RestartOutcome& o : outcomes) total_evals += o.nm.evaluations;

    // Re-score under the full estimator and keep init if the search never
    // actually improved on it (guarantees sup_error <= init's sup_error).
    std::vector<double> winner = best->nm.best_x;
    const double winner_excess = pole_excess(den_coeffs(winner, m, n));
    bool exhausted = !best->nm.converged;
    if (winner_excess < opts.pole_margin || objective(winner) >= init_sup) {
        winner = start;
        exhausted = false;
    }

    RationalTransfer candidate{Polynomial{num_coeffs(winner, m)},
                               Polynomial{den_coeffs(winner, m, n)}};
    ApproxResult result{candidate,
                        error_supnorm(target, Evaluatable::from(candidate), opts.eval_tol),
                        std::nullopt,
                        std::nullopt,
                        total_evals,
                        pole_excess(den_coeffs(winner, m, n)) >= opts.pole_margin * (1.0 - 1e-9),
                        exhausted};

    if (opts.target_series) {
        const PowerSeries expanded = taylor(candidate, opts.expansion_order);
        double sum = 0.0;
        for (int k = 0; k <= opts.expansion_order; ++k)
            sum += std::norm(expanded.coeff(k) - opts.target_series->coeff(k));
        result.l2_error = std::sqrt(sum);
        if (opts.target_series->decay()) {
            const auto& cert = *opts.target_series->decay();
            result.l2_tail = cert.scale * std::pow(cert.rate, opts.target_series->order() + 1) /
                             std::sqrt(1.0 - cert.rate * cert.rate);
        }
    }
    return result;
}

ApproxResult truncation_baseline(const PowerSeries& s, int k) {
    if (k < 0 || k > s.order()) throw Error("truncation_baseline: k must lie in [0, order]");
    std::vector<Complex> head(s.coeffs().begin(), s.coeffs().begin() + k + 1);
    RationalTransfer candidate = RationalTransfer::from_polynomial(Polynomial(std::move(head)));

    double tail_sq = 0.0;
    for (int n = k + 1; n <= s.order(); ++n) tail_sq += std::norm(s.coeff(n));
    ApproxResult result{candidate,      std::nullopt, std::sqrt(tail_sq), std::nullopt, 0, true,
                        false};
    if (s.decay()) {
        const double r = s.decay()->rate;
        result.l2_tail = s.decay()->scale * std::pow(r, s.order() + 1) / std::sqrt(1.0 - r * r);
    }
    if (s.decay() && s.decay()->rate < 1.0) {
        result.sup_error =
            error_supnorm(Evaluatable::from(s), Evaluatable::from(candidate), kDefaultGridTol);
    }
    return result;
}

double log_series_truncation_l2(int k) {
    // sqrt(sum_{n>k} 1/n^2) = sqrt(zeta(2) - sum_{n<=k} 1/n^2); the partial sum
    // is summed small-to-large.
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    double partial = 0.0;
    for (int n = k; n >= 1; --n) partial += 1.0 / (static_cast<double>(n) * n);
    return std::sqrt(zeta2 - partial);
}

std::vector<ConjectureCell> conjecture_explorer(const ConjectureOptions& opts) {
    std::vector<ConjectureCell> table;
    const int K = opts.k_expand;
    const PowerSeries target = PowerSeries::log1p_scaled(Complex{1.0, 0.0}, K);
    const double tail_bound = log_series_truncation_l2(K);

    auto coeff_l2 = [&](const std::vector<Complex>& p, const std::vector<Complex>& q) {
        // Long division of p/q followed by the l2 of the difference with the
        // target coefficients, all through order K.
        const int n = static_cast<int>(q.size()) - 1;
        std::vector<Complex> c(K + 1);
        double sum = 0.0;
        for (int k = 0; k <= K; ++k) {
            Complex acc = k < static_cast<int>(p.size()) ? p[k] : Complex{0.0, 0.0};
            for (int j = 1; j <= std::min(k, n); ++j) acc -= q[j] * c[k - j];
            c[k] = acc;
            sum += std::norm(c[k] - target.coeff(k));
        }
        return std::sqrt(sum);
    };

    for (int budget : opts.budgets) {
        ConjectureCell trunc;
        trunc.budget = budget;
        trunc.kind = "truncation";
        trunc.m = budget;
        trunc.n = 0;
        trunc.l2_error = log_series_truncation_l2(budget);  // exact tail included
        trunc.target_tail_bound = tail_bound;
        trunc.status = "ok";
        table.push_back(trunc);

        for (int n = 0; n <= budget; ++n) {
            const int m = budget - n;
            ConjectureCell cell;
            cell.budget = budget;
            cell.kind = "arma";
            cell.m = m;
            cell.n = n;
            cell.target_tail_bound = tail_bound;
            try {
                const double margin = 1e-3;
                auto objective = [&](const std::vector<double>& x) {
                    const auto q = den_coeffs(x, m, n);
                    const double excess = pole_excess(q);
                    double value = coeff_l2(num_coeffs(x, m), q);
                    if (excess < margin) value += 1e3 * (margin - std::min(excess, margin));
                    return value;
                };
                // Feasible start: the degree-m truncation with no AR part.
                std::vector<double> start(m + n + 1, 0.0);
                for (int j = 0; j <= m; ++j) start[j] = target.coeff(j).real();

                NelderMeadResult best;
                for (int r = 0; r < opts.restarts; ++r) {
                    std::vector<double> x0 = start;
                    if (r > 0) {
                        std::mt19937_64 rng(opts.seed + 1000 * (budget * 16 + n) +
                                            static_cast<std::uint64_t>(r));
                        std::uniform_real_distribution<double> jitter(-0.05, 0.05);
                        for (double& v : x0) v += jitter(rng);
                    }
                    NelderMeadResult nm = nelder_mead(objective, x0, 0.05, opts.budget_per_restart);
                    best.evaluations += nm.evaluations;
                    if (nm.best_f < best.best_f) {
                        best.best_f = nm.best_f;
                        best.best_x = nm.best_x;
                        best.converged = nm.converged;
                    }
                }
                const auto q = den_coeffs(best.best_x, m, n);
                cell.l2_error = coeff_l2(num_coeffs(best.best_x, m), q);
                cell.evaluations = best.evaluations;
                cell.status = pole_excess(q) >= margin * (1.0 - 1e-9) ? "ok" : "infeasible";
            } catch (const std::exception& e) {
                cell.status = e.what();
            }
            table.push_back(cell);
        }
    }
    return table;
}

}  // namespace ratarma
