#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ratarma/errors.hpp"

namespace ratarma {

using Complex = std::complex<double>;

/// Certificate that |c_n| <= scale * rate^n for every coefficient of the
/// underlying (possibly infinite) series, with rate in (0,1). Attached by
/// constructors that can guarantee it; used to derive tail bounds.
struct DecayCertificate {
    double rate;
    double scale;
};

/// Truncated formal power series c_0 + c_1 z + ... + c_K z^K over the
/// complex numbers. Immutable after construction; all operations are pure.
class PowerSeries {
  public:
    static PowerSeries from_coeffs(std::vector<Complex> coeffs);

    /// c_n = ratio^n for n = 0..order. Requires |ratio| < 1 so the decay
    /// certificate (rate = |ratio|, scale = 1) is valid; ratio = 0 is allowed.
    static PowerSeries geometric(Complex ratio, int order);

    /// Coefficients of log(1 + a z): c_0 = 0, c_n = (-1)^{n+1} a^n / n.
    /// Requires 0 < |a| <= 1; the decay certificate is attached only for |a| < 1.
    static PowerSeries log1p_scaled(Complex a, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Complex{0.0, 0.0};
    }
    const std::optional<DecayCertificate>& decay() const { return decay_; }

    /// Same coefficients with a decay certificate attached; scale is computed
    /// as max_n |c_n| / rate^n over the stored coefficients. The caller asserts
    /// that the bound extends to the unstored tail.
    PowerSeries with_decay(double rate) const;

    /// Zero-padded (or truncated) copy at the given order. The decay
    /// certificate survives truncation only.
    PowerSeries resized(int order) const;

  private:
    PowerSeries(std::vector<Complex> coeffs, std::optional<DecayCertificate> decay);

    std::vector<Complex> coeffs_;
    std::optional<DecayCertificate> decay_;
};

/// Coefficientwise sum; result order = max of the operand orders.
PowerSeries add(const PowerSeries& s, const PowerSeries& t);

PowerSeries scale(const PowerSeries& s, Complex factor);

/// Cauchy product truncated to max of the operand orders (the shorter operand
/// is zero-extended, i.e. treated as an exact polynomial).
PowerSeries mul(const PowerSeries& s, const PowerSeries& t);

/// Multiplicative inverse through the stored order: mul(s, reciprocal(s)) = 1 + O(z^{K+1}).
/// Throws NotInvertibleAtOrigin when c_0 = 0.
PowerSeries reciprocal(const PowerSeries& s);

/// exp of the series: e^{c_0} * u where n u_n = sum_{k=1..n} k c_k u_{n-k}, u_0 = 1.
PowerSeries exp_series(const PowerSeries& s);

/// Inverse of exp_series (same recursion solved for the exponent); v_0 is the
/// principal log of c_0. Throws NotInvertibleAtOrigin when c_0 = 0.
PowerSeries log_series(const PowerSeries& s);

struct L2Result {
    double value;                      // sqrt(sum_{n<=K} |c_n|^2)
    std::optional<double> tail_bound;  // scale * rate^{K+1} / sqrt(1 - rate^2) when certified
};

L2Result l2_norm(const PowerSeries& s);

/// Heuristic estimate of limsup |c_n|^{1/n}: max of |c_n|^{1/n} over the
/// nonzero coefficients among the last `window` indices (0 if all are zero).
double root_test(const PowerSeries& s, int window);

struct EvalResult {
    Complex value;
    double tail_bound;
};

/// Partial sum at z with a certified tail bound scale*(rate|z|)^{K+1}/(1-rate|z|).
/// Throws UncertifiedEvaluation when no such bound is derivable (z = 0 is always allowed).
EvalResult eval(const PowerSeries& s, Complex z);

}  // namespace ratarma
