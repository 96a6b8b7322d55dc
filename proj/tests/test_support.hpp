#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ratarma/rational.hpp"
#include "ratarma/series.hpp"

namespace test_support {

using ratarma::Complex;

inline Complex random_unit_box(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

/// Random rational with every pole of modulus >= min_pole_mod and a numerator
/// drawn from the unit box (constant term kept away from zero so formal
/// inverses exist).
inline ratarma::RationalTransfer random_stationary_rational(std::mt19937_64& rng, int max_deg,
                                                            double min_pole_mod,
                                                            bool nonzero_at_origin = true) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_real_distribution<double> mod(min_pole_mod, 3.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);

    const int n = deg(rng);
    std::vector<Complex> q{Complex{1.0, 0.0}};
    for (int j = 0; j < n; ++j) {
        const Complex pole = std::polar(mod(rng), angle(rng));
        // multiply q by (1 - z/pole) so q(0) stays 1
        std::vector<Complex> next(q.size() + 1, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i] += q[i];
            next[i + 1] -= q[i] / pole;
        }
        q = std::move(next);
    }

    const int m = deg(rng);
    std::vector<Complex> p(m + 1);
    for (int j = 0; j <= m; ++j) p[j] = random_unit_box(rng);
    if (nonzero_at_origin && std::abs(p[0]) < 0.2) p[0] += Complex{0.5, 0.5};
    return ratarma::RationalTransfer(ratarma::Polynomial(std::move(p)),
                                     ratarma::Polynomial(std::move(q)));
}

/// Random series with a valid decay certificate: |c_n| <= rate^n by draw.
inline ratarma::PowerSeries random_decaying_series(std::mt19937_64& rng, int order, double rate) {
    std::vector<Complex> c(order + 1);
    double rn = 1.0;
    for (int n = 0; n <= order; ++n) {
        c[n] = random_unit_box(rng) * (rn / 1.5);
        rn *= rate;
    }
    c[0] += Complex{1.0, 0.0};  // keep the constant term away from zero
    return ratarma::PowerSeries::from_coeffs(std::move(c)).with_decay(rate);
}

/// Independent oracle for sqrt(sum_{n>k} 1/n^2): direct summation to 1e6
/// (small-to-large) plus the Euler-Maclaurin remainder of the cut.
inline double direct_tail_l2(int k) {
    const long cut = 1000000;
    double sum = 0.0;
    for (long n = cut; n > k; --n) sum += 1.0 / (static_cast<double>(n) * n);
    const double M = static_cast<double>(cut);
    const double remainder = 1.0 / M - 1.0 / (2.0 * M * M) + 1.0 / (6.0 * M * M * M);
    return std::sqrt(sum + remainder);
}

/// Plain Cauchy product to the given order; the oracle for multiplicative
/// identities, independent of ratarma::mul.
inline std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                     int order) {
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace test_support
