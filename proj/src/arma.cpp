#include "ratarma/arma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ratarma {

namespace {

Polynomial ar_polynomial(const std::vector<Complex>& ar) {
    std::vector<Complex> q(ar.size() + 1);
    q[0] = Complex{1.0, 0.0};
    std::copy(ar.begin(), ar.end(), q.begin() + 1);
    return Polynomial(std::move(q));
}

bool ar_is_stationary(const std::vector<Complex>& ar) {
    Polynomial q = ar_polynomial(ar);
    if (q.degree() == 0) return true;
    return roots(q, 1e-8).all_outside();
}

double require_real(Complex c, const char* what) {
    if (std::abs(c.imag()) > 1e-12 * (1.0 + std::abs(c.real())))
        throw Error(std::string("simulate: ") + what + " must be real");
    return c.real();
}

}  // namespace

ArmaModel make_arma(std::vector<Complex> ar, std::vector<Complex> ma,
                    double innovation_variance) {
    ArmaModel model;
    model.stationary = ar_is_stationary(ar);
    model.ar = std::move(ar);
    model.ma = std::move(ma);
    model.innovation_variance = innovation_variance;
    return model;
}

ArmaModel from_rational(const RationalTransfer& r) {
    std::vector<Complex> ar(r.den().coeffs().begin() + 1, r.den().coeffs().end());
    return make_arma(std::move(ar), r.num().coeffs());
}

RationalTransfer to_rational(const ArmaModel& a) {
    return RationalTransfer(Polynomial{std::vector<Complex>(a.ma)}, ar_polynomial(a.ar));
}

PowerSeries wold_coeffs(const ArmaModel& a, int order) {
    if (!a.stationary)
        throw NonStationaryModel("wold_coeffs: AR polynomial has a root inside or on the circle");
    return taylor(to_rational(a), order);
}

Distance l2_distance(const ProcessSpec& a, const ProcessSpec& b, int order) {
    const PowerSeries ea = expand(a, order);
    const PowerSeries eb = expand(b, order);
    double sum = 0.0;
    for (int n = 0; n <= order; ++n) sum += std::norm(ea.coeff(n) - eb.coeff(n));
    double tail = 0.0;
    for (const PowerSeries* s : {&ea, &eb}) {
        if (s->decay()) {
            const auto& cert = *s->decay();
            tail += cert.scale * std::pow(cert.rate, s->order() + 1) /
                    std::sqrt(1.0 - cert.rate * cert.rate);
        }
    }
    return {std::sqrt(sum), tail};
}

PredictionReport prediction_decomposition(const ProcessSpec& x, const ProcessSpec& y, int order) {
    const PowerSeries ex = expand(x, order);
    const PowerSeries ey = expand(y, order);
    const double model_sigma = std::abs(ey.coeff(0));
    double approx_sq = 0.0;
    for (int n = 0; n <= order; ++n) approx_sq += std::norm(ey.coeff(n) - ex.coeff(n));
    const double approx = std::sqrt(approx_sq);
    // Yhat projects Y onto the strict past, dropping the y_0 eps_t term.
    double total_sq = std::norm(ex.coeff(0));
    for (int n = 1; n <= order; ++n) total_sq += std::norm(ey.coeff(n) - ex.coeff(n));
    const double total = std::sqrt(total_sq);
    return {model_sigma, approx, total, total <= model_sigma + approx + 1e-12};
}

int default_burn_in(const ArmaModel& a) {
    return 10 * static_cast<int>(std::max(a.ar.size(), a.ma.size())) + 100;
}

std::vector<double> simulate(const ArmaModel& a, int length, int burn_in, std::uint64_t seed) {
    if (!a.stationary) throw NonStationaryModel("simulate: model is not stationary");
    if (length < 0 || burn_in < 0) throw Error("simulate: length and burn_in must be nonnegative");
    std::vector<double> ar(a.ar.size()), ma(a.ma.size());
    for (std::size_t j = 0; j < a.ar.size(); ++j) ar[j] = require_real(a.ar[j], "AR coefficient");
    for (std::size_t j = 0; j < a.ma.size(); ++j) ma[j] = require_real(a.ma[j], "MA coefficient");

    // Box-Muller on mt19937_64 keeps paths reproducible across standard
    // library implementations.
    std::mt19937_64 rng(seed);
    const double sigma = std::sqrt(a.innovation_variance);
    auto next_normal = [&rng, sigma]() {
        const double u1 =
            (static_cast<double>(rng()) + 1.0) / (static_cast<double>(rng.max()) + 2.0);
        const double u2 = static_cast<double>(rng()) / (static_cast<double>(rng.max()) + 1.0);
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };

    const int total = burn_in + length;
    std::vector<double> eps(total), y(total);
    for (int t = 0; t < total; ++t) eps[t] = next_normal();
    for (int t = 0; t < total; ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j < ma.size(); ++j)
            if (t >= static_cast<int>(j)) acc += ma[j] * eps[t - j];
        for (std::size_t j = 1; j <= ar.size(); ++j)
            if (t >= static_cast<int>(j)) acc -= ar[j - 1] * y[t - j];
        y[t] = acc;
    }
    return std::vector<double>(y.begin() + burn_in, y.end());
}

std::vector<double> simulate(const ArmaModel& a, int length, std::uint64_t seed) {
    return simulate(a, length, default_burn_in(a), seed);
}

}  // namespace ratarma
