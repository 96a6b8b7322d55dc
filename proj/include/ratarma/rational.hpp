#pragma once

#include <vector>

#include "ratarma/series.hpp"

namespace ratarma {

/// Dense complex polynomial c_0 + c_1 z + ... + c_d z^d. Trailing zero
/// coefficients are trimmed so the leading coefficient is nonzero unless the
/// polynomial is identically zero.
class Polynomial {
  public:
    Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : Complex{0.0, 0.0};
    }
    bool is_zero() const;

    Complex operator()(Complex z) const;  // Horner
    Polynomial derivative() const;

  private:
    std::vector<Complex> coeffs_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

enum class RootClass { inside, on_circle, outside };

struct RootLocation {
    Complex location;
    double modulus;
    RootClass cls;
};

struct RootReport {
    std::vector<RootLocation> roots;
    double tolerance;

    bool all_outside() const;
};

/// All degree-many roots with multiplicity via balanced companion-matrix
/// eigenvalues plus Newton polishing, classified against the unit circle:
/// on_circle iff ||root| - 1| <= tol. Throws EmptyReport for degree 0.
RootReport roots(const Polynomial& p, double tol = 1e-8);

/// Reduced rational transfer function p(z)/q(z) with q(0) normalized to 1.
/// Common roots of p and q (within 1e-9) are cancelled on construction.
class RationalTransfer {
  public:
    RationalTransfer(Polynomial num, Polynomial den);

    static RationalTransfer constant(Complex c);
    static RationalTransfer from_polynomial(Polynomial p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

  private:
    Polynomial num_;
    Polynomial den_;
};

/// Pade approximant of numerator degree m, denominator degree n: the rational
/// whose Taylor expansion matches s through order m + n. The denominator is
/// found from the standard Toeplitz system on the Taylor coefficients, the
/// numerator by convolution. Throws SingularPadeSystem when the system's
/// condition number exceeds 1e12.
RationalTransfer pade(const PowerSeries& s, int m, int n);

/// Long-division (infinite moving average) expansion to the given order.
/// When every denominator root is strictly outside the closed unit disk the
/// result carries a decay certificate with rate 1/min|pole| plus a margin.
PowerSeries taylor(const RationalTransfer& r, int order);

struct StabilityVerdict {
    bool verdict;
    RootReport report;
};

/// True iff every denominator root is classified outside the unit circle.
/// on_circle roots fail closed. A constant denominator is vacuously stationary.
StabilityVerdict is_stationary(const RationalTransfer& r);

/// True iff every numerator root is classified outside the unit circle
/// (equivalently, the formal inverse is stationary). on_circle fails closed.
StabilityVerdict is_invertible(const RationalTransfer& r);

/// q(z)/p(z), renormalized so the new denominator is 1 at the origin.
/// Throws NotInvertibleAtOrigin when p(0) = 0.
RationalTransfer formal_inverse(const RationalTransfer& r);

/// p(z)/q(z) by Horner evaluation. Throws PoleHit when |q(z)| < 1e-14.
Complex eval_rational(const RationalTransfer& r, Complex z);

}  // namespace ratarma
