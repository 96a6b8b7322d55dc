#include "ratarma/rational.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ratarma {

namespace {

constexpr double kCommonRootTol = 1e-9;
constexpr double kPadeConditionCap = 1e12;

std::vector<Complex> trim_trailing_zeros(std::vector<Complex> c) {
    while (c.size() > 1 && c.back() == Complex{0.0, 0.0}) c.pop_back();
    if (c.empty()) c.push_back(Complex{0.0, 0.0});
    return c;
}

// Iterative two-sided scaling by powers of two, after the classic companion
// balancing in eigenvalue solvers. Exact in floating point.
void balance_in_place(Eigen::MatrixXcd& m) {
    const int n = static_cast<int>(m.rows());
    for (int sweep = 0; sweep < 8; ++sweep) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            double row = 0.0, col = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                row += std::abs(m(i, j));
                col += std::abs(m(j, i));
            }
            if (row == 0.0 || col == 0.0) continue;
            int exponent = 0;
            std::frexp(row / col, &exponent);
            exponent /= 2;
            if (exponent != 0) {
                const double up = std::ldexp(1.0, exponent);
                const double down = std::ldexp(1.0, -exponent);
                m.row(i) *= down;
                m.col(i) *= up;
                changed = true;
            }
        }
        if (!changed) break;
    }
}

Complex newton_polish(const Polynomial& p, const Polynomial& dp, Complex z, int steps) {
    for (int i = 0; i < steps; ++i) {
        const Complex d = dp(z);
        if (std::abs(d) < 1e-30) break;
        const Complex step = p(z) / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
    }
    return z;
}

Polynomial from_roots(const std::vector<Complex>& rs, Complex leading) {
    std::vector<Complex> c{leading};
    for (const Complex& r : rs) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs)
    : coeffs_(trim_trailing_zeros(std::move(coeffs))) {}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0, 0.0};
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc{0.0, 0.0};
    for (int n = degree(); n >= 0; --n) acc = acc * z + coeffs_[n];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n)
        d[n - 1] = static_cast<double>(n) * coeffs_[n];
    return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Complex> c(a.degree() + b.degree() + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.coeff(i) * b.coeff(j);
    return Polynomial(std::move(c));
}

bool RootReport::all_outside() const {
    return std::all_of(roots.begin(), roots.end(),
                       [](const RootLocation& r) { return r.cls == RootClass::outside; });
}

RootReport roots(const Polynomial& p, double tol) {
    const int d = p.degree();
    if (d == 0) throw EmptyReport();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    const Complex lead = p.coeff(d);
    for (int i = 0; i + 1 < d; ++i) companion(i + 1, i) = Complex{1.0, 0.0};
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeff(i) / lead;
    balance_in_place(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    const Polynomial dp = p.derivative();

    RootReport report;
    report.tolerance = tol;
    report.roots.reserve(d);
    for (int i = 0; i < d; ++i) {
        const Complex z = newton_polish(p, dp, solver.eigenvalues()(i), 3);
        const double mod = std::abs(z);
        RootClass cls = RootClass::outside;
        if (std::abs(mod - 1.0) <= tol)
            cls = RootClass::on_circle;
        else if (mod < 1.0)
            cls = RootClass::inside;
        report.roots.push_back({z, mod, cls});
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const RootLocation& a, const RootLocation& b) { return a.modulus < b.modulus; });
    return report;
}

RationalTransfer::RationalTransfer(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (std::abs(den_(Complex{0.0, 0.0})) < 1e-14)
        throw Error("RationalTransfer: denominator vanishes at the origin");

    // Cancel common roots (reduced form), matched within kCommonRootTol.
    if (num_.degree() >= 1 && den_.degree() >= 1 && !num_.is_zero()) {
        auto nr = roots(num_, 1e-8);
        auto dr = roots(den_, 1e-8);
        std::vector<Complex> keep_n, keep_d;
        std::vector<bool> used(dr.roots.size(), false);
        bool cancelled = false;
        for (const RootLocation& rn : nr.roots) {
            bool matched = false;
            for (std::size_t j = 0; j < dr.roots.size(); ++j) {
                if (!used[j] && std::abs(rn.location - dr.roots[j].location) <= kCommonRootTol) {
                    used[j] = true;
                    matched = true;
                    cancelled = true;
                    break;
                }
            }
            if (!matched) keep_n.push_back(rn.location);
        }
        if (cancelled) {
            for (std::size_t j = 0; j < dr.roots.size(); ++j)
                if (!used[j]) keep_d.push_back(dr.roots[j].location);
            num_ = from_roots(keep_n, num_.coeff(num_.degree()));
            den_ = from_roots(keep_d, den_.coeff(den_.degree()));
            if (std::abs(den_(Complex{0.0, 0.0})) < 1e-14)
                throw Error("RationalTransfer: reduced denominator vanishes at the origin");
        }
    }

    // Normalize q_0 = 1.
    const Complex q0 = den_.coeff(0);
    std::vector<Complex> nn(num_.coeffs()), dd(den_.coeffs());
    for (Complex& c : nn) c /= q0;
    for (Complex& c : dd) c /= q0;
    num_ = Polynomial(std::move(nn));
    den_ = Polynomial(std::move(dd));
}

RationalTransfer RationalTransfer::constant(Complex c) {
    return RationalTransfer(Polynomial({c}), Polynomial({Complex{1.0, 0.0}}));
}

RationalTransfer RationalTransfer::from_polynomial(Polynomial p) {
    return RationalTransfer(std::move(p), Polynomial({Complex{1.0, 0.0}}));
}

RationalTransfer pade(const PowerSeries& s, int m, int n) {
    if (m < 0 || n < 0) throw Error("pade: degrees must be nonnegative");
    if (s.order() < m + n) throw Error("pade: series order must be at least m + n");

    std::vector<Complex> q(n + 1, Complex{0.0, 0.0});
    q[0] = Complex{1.0, 0.0};
    if (n > 0) {
        // sum_{j=0..n} q_j c_{m+i-j} = 0 for i = 1..n, with c_k = 0 for k < 0.
        Eigen::MatrixXcd A(n, n);
        Eigen::VectorXcd b(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const int k = m + i - j;
                A(i - 1, j - 1) = k >= 0 ? s.coeff(k) : Complex{0.0, 0.0};
            }
            b(i - 1) = -s.coeff(m + i);
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smax = svd.singularValues()(0);
        const double smin = svd.singularValues()(n - 1);
        if (!(smin > 0.0) || smax / smin > kPadeConditionCap)
            throw SingularPadeSystem("pade: denominator system is numerically singular");
        Eigen::VectorXcd x = svd.solve(b);
        for (int j = 1; j <= n; ++j) q[j] = x(j - 1);
    }

    std::vector<Complex> p(m + 1, Complex{0.0, 0.0});
    for (int k = 0; k <= m; ++k) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j <= std::min(k, n); ++j) acc += q[j] * s.coeff(k - j);
        p[k] = acc;
    }
    return RationalTransfer(Polynomial(std::move(p)), Polynomial(std::move(q)));
}

PowerSeries taylor(const RationalTransfer& r, int order) {
    if (order < 0) throw Error("taylor: order must be nonnegative");
    const Polynomial& p = r.num();
    const Polynomial& q = r.den();
    std::vector<Complex> c(order + 1);
    for (int k = 0; k <= order; ++k) {
        Complex acc = p.coeff(k);
        for (int j = 1; j <= std::min(k, q.degree()); ++j) acc -= q.coeff(j) * c[k - j];
        c[k] = acc;  // q_0 = 1 by the type invariant
    }
    PowerSeries out = PowerSeries::from_coeffs(std::move(c));

    double pole_min = std::numeric_limits<double>::infinity();
    if (q.degree() >= 1) {
        for (const RootLocation& root : roots(q, 1e-8).roots)
            pole_min = std::min(pole_min, root.modulus);
    }
    if (pole_min > 1.0) {
        const double base = std::isinf(pole_min) ? 0.0 : 1.0 / pole_min;
        const double rate = base + std::min(0.05, (1.0 - base) / 2.0);
        if (rate > 0.0 && rate < 1.0) out = out.with_decay(rate);
    }
    return out;
}

StabilityVerdict is_stationary(const RationalTransfer& r) {
    if (r.den().degree() == 0) return {true, RootReport{{}, 1e-8}};
    RootReport report = roots(r.den(), 1e-8);
    const bool ok = report.all_outside();
    return {ok, std::move(report)};
}

StabilityVerdict is_invertible(const RationalTransfer& r) {
    if (r.num().is_zero()) return {false, RootReport{{}, 1e-8}};
    if (r.num().degree() == 0) return {true, RootReport{{}, 1e-8}};
    RootReport report = roots(r.num(), 1e-8);
    const bool ok = report.all_outside();
    return {ok, std::move(report)};
}

RationalTransfer formal_inverse(const RationalTransfer& r) {
    if (std::abs(r.num()(Complex{0.0, 0.0})) < 1e-14) throw NotInvertibleAtOrigin();
    return RationalTransfer(r.den(), r.num());
}

Complex eval_rational(const RationalTransfer& r, Complex z) {
    const Complex q = r.den()(z);
    if (std::abs(q) < 1e-14) throw PoleHit("eval_rational: denominator vanishes at z");
    return r.num()(z) / q;
}

}  // namespace ratarma
