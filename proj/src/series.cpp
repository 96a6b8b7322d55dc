#include "ratarma/series.hpp"

#include <algorithm>
#include <cmath>

namespace ratarma {

namespace {

std::optional<DecayCertificate> certify(const std::vector<Complex>& coeffs, double rate) {
    if (!(rate > 0.0 && rate < 1.0)) return std::nullopt;
    double scale = 0.0;
    double rn = 1.0;
    for (const Complex& c : coeffs) {
        scale = std::max(scale, std::abs(c) / rn);
        rn *= rate;
    }
    return DecayCertificate{rate, scale};
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs, std::optional<DecayCertificate> decay)
    : coeffs_(std::move(coeffs)), decay_(decay) {
    if (coeffs_.empty()) coeffs_.push_back(Complex{0.0, 0.0});
}

PowerSeries PowerSeries::from_coeffs(std::vector<Complex> coeffs) {
    return PowerSeries(std::move(coeffs), std::nullopt);
}

PowerSeries PowerSeries::geometric(Complex ratio, int order) {
    if (order < 0) throw Error("geometric: order must be nonnegative");
    if (!(std::abs(ratio) < 1.0))
        throw Error("geometric: |ratio| must be < 1 (no certified decay otherwise)");
    std::vector<Complex> c(order + 1);
    Complex pow{1.0, 0.0};
    for (int n = 0; n <= order; ++n) {
        c[n] = pow;
        pow *= ratio;
    }
    std::optional<DecayCertificate> cert;
    if (std::abs(ratio) > 0.0) cert = DecayCertificate{std::abs(ratio), 1.0};
    return PowerSeries(std::move(c), cert);
}

PowerSeries PowerSeries::log1p_scaled(Complex a, int order) {
    if (order < 0) throw Error("log1p_scaled: order must be nonnegative");
    const double mod = std::abs(a);
    if (mod == 0.0) throw Error("log1p_scaled: a = 0 is degenerate; use from_coeffs");
    if (mod > 1.0) throw Error("log1p_scaled: |a| must be <= 1");
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    Complex pow = a;
    for (int n = 1; n <= order; ++n) {
        const double sign = (n % 2 == 0) ? -1.0 : 1.0;
        c[n] = sign * pow / static_cast<double>(n);
        pow *= a;
    }
    std::optional<DecayCertificate> cert;
    if (mod < 1.0) cert = DecayCertificate{mod, 1.0};  // |a^n / n| <= |a|^n
    return PowerSeries(std::move(c), cert);
}

PowerSeries PowerSeries::with_decay(double rate) const {
    auto cert = certify(coeffs_, rate);
    if (!cert) throw Error("with_decay: rate must lie in (0, 1)");
    return PowerSeries(coeffs_, cert);
}

PowerSeries PowerSeries::resized(int order) const {
    if (order < 0) throw Error("resized: order must be nonnegative");
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    const int copy = std::min(order, this->order());
    std::copy(coeffs_.begin(), coeffs_.begin() + copy + 1, c.begin());
    // Zero-extension pads coefficients the certificate knows nothing about, so
    // the certificate only survives truncation.
    return PowerSeries(std::move(c), order <= this->order() ? decay_ : std::nullopt);
}

PowerSeries add(const PowerSeries& s, const PowerSeries& t) {
    const int order = std::max(s.order(), t.order());
    std::vector<Complex> c(order + 1);
    for (int n = 0; n <= order; ++n) c[n] = s.coeff(n) + t.coeff(n);
    std::optional<DecayCertificate> cert;
    if (s.decay() && t.decay()) {
        // |a_n + b_n| <= (C_s + C_t) max(r_s, r_t)^n
        cert = DecayCertificate{std::max(s.decay()->rate, t.decay()->rate),
                                s.decay()->scale + t.decay()->scale};
    }
    PowerSeries out = PowerSeries::from_coeffs(std::move(c));
    return cert ? out.with_decay(cert->rate) : out;
}

PowerSeries scale(const PowerSeries& s, Complex factor) {
    std::vector<Complex> c(s.coeffs());
    for (Complex& x : c) x *= factor;
    PowerSeries out = PowerSeries::from_coeffs(std::move(c));
    return s.decay() ? out.with_decay(s.decay()->rate) : out;
}

PowerSeries mul(const PowerSeries& s, const PowerSeries& t) {
    const int order = std::max(s.order(), t.order());
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= std::min(order, s.order()); ++i) {
        const Complex si = s.coeff(i);
        if (si == Complex{0.0, 0.0}) continue;
        const int jmax = std::min(order - i, t.order());
        for (int j = 0; j <= jmax; ++j) c[i + j] += si * t.coeff(j);
    }
    // The Cauchy-product tail of the factors is not geometric with the same
    // rate, so no certificate is propagated.
    return PowerSeries::from_coeffs(std::move(c));
}

PowerSeries reciprocal(const PowerSeries& s) {
    const Complex c0 = s.coeff(0);
    if (std::abs(c0) == 0.0) throw NotInvertibleAtOrigin();
    const int order = s.order();
    std::vector<Complex> r(order + 1);
    r[0] = 1.0 / c0;
    for (int n = 1; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (int k = 1; k <= n; ++k) acc += s.coeff(k) * r[n - k];
        r[n] = -acc / c0;
    }
    return PowerSeries::from_coeffs(std::move(r));
}

PowerSeries exp_series(const PowerSeries& s) {
    const int order = s.order();
    const Complex head = std::exp(s.coeff(0));
    std::vector<Complex> u(order + 1, Complex{0.0, 0.0});
    u[0] = Complex{1.0, 0.0};
    // n u_n = sum_{k=1..n} k c_k u_{n-k}; the constant term drops out of the derivative.
    for (int n = 1; n <= order; ++n) {
        Complex acc{0.0, 0.0};
        for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * s.coeff(k) * u[n - k];
        u[n] = acc / static_cast<double>(n);
    }
    for (Complex& x : u) x *= head;
    return PowerSeries::from_coeffs(std::move(u));
}

PowerSeries log_series(const PowerSeries& s) {
    const Complex c0 = s.coeff(0);
    if (std::abs(c0) == 0.0) throw NotInvertibleAtOrigin("log_series: constant term is zero");
    const int order = s.order();
    std::vector<Complex> v(order + 1, Complex{0.0, 0.0});
    v[0] = std::log(c0);
    // Same recursion as exp_series solved for the exponent: the k = n term of
    // n s_n = sum_{k=1..n} k v_k s_{n-k} isolates v_n.
    for (int n = 1; n <= order; ++n) {
        Complex acc = static_cast<double>(n) * s.coeff(n);
        for (int k = 1; k < n; ++k) acc -= static_cast<double>(k) * v[k] * s.coeff(n - k);
        v[n] = acc / (static_cast<double>(n) * c0);
    }
    return PowerSeries::from_coeffs(std::move(v));
}

L2Result l2_norm(const PowerSeries& s) {
    double sum = 0.0;
    for (const Complex& c : s.coeffs()) sum += std::norm(c);
    L2Result out{std::sqrt(sum), std::nullopt};
    if (s.decay()) {
        const double r = s.decay()->rate;
        const double C = s.decay()->scale;
        out.tail_bound = C * std::pow(r, s.order() + 1) / std::sqrt(1.0 - r * r);
    }
    return out;
}

double root_test(const PowerSeries& s, int window) {
    if (window < 1 || window > s.order())
        throw Error("root_test: window must lie in [1, order]");
    double best = 0.0;
    for (int n = s.order(); n > s.order() - window; --n) {
        if (n < 1) break;
        const double mod = std::abs(s.coeff(n));
        if (mod == 0.0) continue;
        best = std::max(best, std::pow(mod, 1.0 / n));
    }
    return best;
}

EvalResult eval(const PowerSeries& s, Complex z) {
    if (z == Complex{0.0, 0.0}) return {s.coeff(0), 0.0};
    if (!s.decay())
        throw UncertifiedEvaluation("eval: series carries no decay certificate");
    const double rz = s.decay()->rate * std::abs(z);
    if (!(rz < 1.0))
        throw UncertifiedEvaluation("eval: |z| is outside the certified radius");
    Complex acc{0.0, 0.0};
    for (int n = s.order(); n >= 0; --n) acc = acc * z + s.coeff(n);
    const double tail = s.decay()->scale * std::pow(rz, s.order() + 1) / (1.0 - rz);
    return {acc, tail};
}

}  // namespace ratarma
