#include "ratarma/toeplitz.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ratarma {

namespace {

constexpr int kDenseDimCap = 1024;
constexpr int kPowerIterationCap = 100000;

Eigen::MatrixXcd to_eigen(const ToeplitzTruncation& t) {
    const int n = t.dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = t.generator().coeff(i - j);
    return m;
}

}  // namespace

ToeplitzTruncation::ToeplitzTruncation(PowerSeries generator, int dim)
    : generator_(std::move(generator)), dim_(dim) {
    if (dim < 1) throw Error("ToeplitzTruncation: dimension must be positive");
    if (generator_.order() < dim - 1)
        throw Error("ToeplitzTruncation: generator order must be at least dim - 1");
}

std::vector<Complex> ToeplitzTruncation::dense() const {
    std::vector<Complex> m(static_cast<std::size_t>(dim_) * dim_, Complex{0.0, 0.0});
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j <= i; ++j)
            m[static_cast<std::size_t>(i) * dim_ + j] = generator_.coeff(i - j);
    return m;
}

std::vector<Complex> ToeplitzTruncation::apply(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw Error("apply: dimension mismatch");
    std::vector<Complex> y(dim_, Complex{0.0, 0.0});
    for (int i = 0; i < dim_; ++i) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j <= i; ++j) acc += generator_.coeff(i - j) * x[j];
        y[i] = acc;
    }
    return y;
}

ToeplitzTruncation toeplitz(const PowerSeries& s, int dim) {
    return ToeplitzTruncation(s, dim);
}

double op_norm(const ToeplitzTruncation& t, double tol) {
    const int n = t.dim();
    if (n <= kDenseDimCap) {
        const Eigen::MatrixXcd a = to_eigen(t);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.adjoint() * a,
                                                               Eigen::EigenvaluesOnly);
        const double lambda = solver.eigenvalues().maxCoeff();
        return std::sqrt(std::max(lambda, 0.0));
    }

    // Power iteration on the Gram product with the deterministic all-ones start.
    std::vector<Complex> v(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    auto gram_apply = [&t, n](const std::vector<Complex>& x) {
        const std::vector<Complex> ax = t.apply(x);
        // (A^H y)_j = sum_{i>=j} conj(c_{i-j}) y_i
        std::vector<Complex> out(n, Complex{0.0, 0.0});
        for (int j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (int i = j; i < n; ++i) acc += std::conj(t.generator().coeff(i - j)) * ax[i];
            out[j] = acc;
        }
        return out;
    };
    double lambda = 0.0;
    for (int iter = 0; iter < kPowerIterationCap; ++iter) {
        std::vector<Complex> w = gram_apply(v);
        double rayleigh = 0.0, norm_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            rayleigh += (std::conj(v[i]) * w[i]).real();
            norm_sq += std::norm(w[i]);
        }
        const double wn = std::sqrt(norm_sq);
        if (wn == 0.0) return 0.0;
        for (Complex& c : w) c /= wn;
        v = std::move(w);
        if (iter > 0 && std::abs(rayleigh - lambda) <= tol * std::abs(rayleigh)) {
            return std::sqrt(std::max(rayleigh, 0.0));
        }
        lambda = rayleigh;
    }
    throw ConvergenceFailure("op_norm: power iteration hit the iteration cap");
}

SpectralLemmaReport spectral_lemma_check(const PowerSeries& f, const std::vector<int>& dims,
                                         double grid_tol) {
    SpectralLemmaReport report;
    report.supnorm = supnorm_circle(Evaluatable::from(f), grid_tol);
    report.rows.reserve(dims.size());
    for (int dim : dims) report.rows.push_back({dim, op_norm(toeplitz(f, dim))});

    report.monotone = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        if (report.rows[i].op_norm < report.rows[i - 1].op_norm - 1e-10) report.monotone = false;
    report.bounded = std::all_of(report.rows.begin(), report.rows.end(), [&](const auto& row) {
        return row.op_norm <= report.supnorm.upper() + grid_tol;
    });
    report.terminal_gap =
        report.rows.empty() ? 0.0 : report.supnorm.value - report.rows.back().op_norm;
    return report;
}

HinfCounterexampleReport hinf_counterexample_report(int order, int grid) {
    if (order < 64) throw Error("hinf_counterexample_report: order must be at least 64");
    if (grid < 8) throw Error("hinf_counterexample_report: grid must be at least 8");

    // -(1+z)/(1-z) = -1 - 2z - 2z^2 - ...
    std::vector<Complex> g(order + 1, Complex{-2.0, 0.0});
    g[0] = Complex{-1.0, 0.0};
    const PowerSeries h = exp_series(PowerSeries::from_coeffs(std::move(g)));

    HinfCounterexampleReport report;
    report.order = order;
    report.grid = grid;
    report.h0 = h.coeff(0).real();

    // The truncated series is not trustworthy near z = 1 at radius 0.999, so
    // the disk scan uses the closed form.
    double min_abs = std::numeric_limits<double>::infinity();
    for (int ri = 0; ri < grid; ++ri) {
        const double r = 0.999 * ri / (grid - 1);
        for (int ai = 0; ai < grid; ++ai) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * ai / grid);
            const Complex hz = std::exp(-(1.0 + z) / (1.0 - z));
            min_abs = std::min(min_abs, std::abs(hz + 2.0));
        }
    }
    report.min_abs_h_plus_2 = min_abs;

    for (int k : {order / 4, order / 2, order}) {
        double l1 = 0.0;
        for (int n = 0; n <= k; ++n) l1 += std::abs(h.coeff(n));
        report.l1_rows.emplace_back(k, l1);
    }
    double l2_sq = 0.0;
    for (int n = 0; n <= order; ++n) l2_sq += std::norm(h.coeff(n));
    report.l2_partial = std::sqrt(l2_sq);
    return report;
}

}  // namespace ratarma
