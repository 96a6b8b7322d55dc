#pragma once

#include <utility>
#include <vector>

#include "ratarma/norms.hpp"
#include "ratarma/series.hpp"

namespace ratarma {

/// N x N lower-triangular Toeplitz compression of f(L) onto the span of the
/// N most recent innovations: entry (i, j) = c_{i-j} for i >= j, 0 above the
/// diagonal. Immutable after construction.
class ToeplitzTruncation {
  public:
    ToeplitzTruncation(PowerSeries generator, int dim);

    int dim() const { return dim_; }
    const PowerSeries& generator() const { return generator_; }
    Complex entry(int row, int col) const {
        return row >= col ? generator_.coeff(row - col) : Complex{0.0, 0.0};
    }

    /// Row-major dense copy (dim x dim).
    std::vector<Complex> dense() const;

    /// y = T x without materializing the matrix.
    std::vector<Complex> apply(const std::vector<Complex>& x) const;

  private:
    PowerSeries generator_;
    int dim_;
};

/// Requires s.order() >= dim - 1.
ToeplitzTruncation toeplitz(const PowerSeries& s, int dim);

/// Largest singular value. Dense self-adjoint eigensolve of the Gram matrix
/// for dim <= 1024; power iteration on the Gram product (deterministic
/// all-ones start, relative tolerance tol, cap 1e5 iterations then
/// ConvergenceFailure) above that.
double op_norm(const ToeplitzTruncation& t, double tol = 1e-10);

struct SpectralLemmaRow {
    int dim;
    double op_norm;
};

struct SpectralLemmaReport {
    std::vector<SpectralLemmaRow> rows;  // ordered as requested
    NormEstimate supnorm;
    bool monotone;        // op_norm nondecreasing in dim
    bool bounded;         // every op_norm <= supnorm upper estimate + tol
    double terminal_gap;  // supnorm.value - last op_norm
};

/// Finite-dimensional check that the compression norms increase toward the
/// circle supremum. Requires a decay certificate with rate < 1 on f so the
/// supnorm estimate applies.
SpectralLemmaReport spectral_lemma_check(const PowerSeries& f, const std::vector<int>& dims,
                                         double grid_tol = kDefaultGridTol);

/// Evidence report around h(z) = exp(-(1+z)/(1-z)): bounded and bounded away
/// from -2 on the disk, square-summable coefficients, but growing absolute
/// coefficient sums. The l1 growth is reported without a verdict.
struct HinfCounterexampleReport {
    int order;
    int grid;
    double h0;                                    // constant coefficient, equals e^{-1}
    double min_abs_h_plus_2;                      // over the radius-0.999 disk grid (closed form)
    std::vector<std::pair<int, double>> l1_rows;  // (k, sum_{n<=k} |h_n|) at k = K/4, K/2, K
    double l2_partial;                            // sqrt(sum_{n<=K} |h_n|^2), expected <= 1
};

HinfCounterexampleReport hinf_counterexample_report(int order, int grid);

}  // namespace ratarma
