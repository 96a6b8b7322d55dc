#include "ratarma/norms.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace ratarma {

ProcessSpec ProcessSpec::from_series(PowerSeries s, std::string label) {
    return ProcessSpec{std::move(s), std::move(label)};
}

ProcessSpec ProcessSpec::from_rational(RationalTransfer r, std::string label) {
    return ProcessSpec{std::move(r), std::move(label)};
}

PowerSeries expand(const ProcessSpec& spec, int order) {
    if (const auto* r = std::get_if<RationalTransfer>(&spec.transfer)) return taylor(*r, order);
    return std::get<PowerSeries>(spec.transfer).resized(order);
}

Evaluatable Evaluatable::from(const RationalTransfer& r) {
    if (r.den().degree() >= 1) {
        for (const RootLocation& root : roots(r.den(), 1e-8).roots)
            if (root.cls == RootClass::on_circle)
                throw PoleOnCircle("supnorm on S^1 undefined: denominator root on the unit circle");
    }
    const Polynomial p = r.num();
    const Polynomial q = r.den();
    return Evaluatable([p, q](Complex z) {
        const Complex d = q(z);
        if (std::abs(d) < 1e-14) throw PoleHit("rational evaluator hit a pole");
        return p(z) / d;
    });
}

Evaluatable Evaluatable::from(const PowerSeries& s) {
    if (!s.decay() || !(s.decay()->rate < 1.0))
        throw UncertifiedEvaluation(
            "supnorm on S^1 requires a decay certificate with rate < 1 for a series");
    return Evaluatable([s](Complex z) { return eval(s, z).value; });
}

Evaluatable Evaluatable::from(const ProcessSpec& spec) {
    if (const auto* r = std::get_if<RationalTransfer>(&spec.transfer)) return from(*r);
    return from(std::get<PowerSeries>(spec.transfer));
}

Evaluatable Evaluatable::constant(Complex c) {
    return Evaluatable([c](Complex) { return c; });
}

Evaluatable Evaluatable::log1p_form(Complex a) {
    if (!(std::abs(a) < 1.0))
        throw UncertifiedEvaluation("log1p_form: requires |a| < 1 for continuity on S^1");
    return Evaluatable([a](Complex z) { return std::log(Complex{1.0, 0.0} + a * z); });
}

Evaluatable Evaluatable::unchecked(std::function<Complex(Complex)> fn) {
    return Evaluatable(std::move(fn));
}

Evaluatable operator+(const Evaluatable& a, const Evaluatable& b) {
    return Evaluatable::unchecked([a, b](Complex z) { return a(z) + b(z); });
}

Evaluatable operator-(const Evaluatable& a, const Evaluatable& b) {
    return Evaluatable::unchecked([a, b](Complex z) { return a(z) - b(z); });
}

Evaluatable operator*(const Evaluatable& a, const Evaluatable& b) {
    return Evaluatable::unchecked([a, b](Complex z) { return a(z) * b(z); });
}

NormEstimate supnorm_circle(const Evaluatable& f, double tol) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    int grid = kSupnormInitialGrid;
    double best = 0.0;
    double argmax = 0.0;

    // Level 0: the full starting grid.
    for (int k = 0; k < grid; ++k) {
        const double theta = two_pi * k / grid;
        const double v = std::abs(f(std::polar(1.0, theta)));
        if (v > best) {
            best = v;
            argmax = theta;
        }
    }

    // Each doubling adds only the odd midpoints, so levels are nested and the
    // maximum is nondecreasing.
    double gap = 0.0;
    while (true) {
        const int next = grid * 2;
        if (next > kSupnormMaxGrid) break;
        const double prev_best = best;
        for (int k = 1; k < next; k += 2) {
            const double theta = two_pi * k / next;
            const double v = std::abs(f(std::polar(1.0, theta)));
            if (v > best) {
                best = v;
                argmax = theta;
            }
        }
        grid = next;
        gap = best - prev_best;
        if (gap < tol) break;
    }
    return NormEstimate{best, grid, gap, argmax};
}

NormEstimate error_supnorm(const Evaluatable& x, const Evaluatable& y, double tol) {
    return supnorm_circle(x - y, tol);
}

ProcessL2 process_l2(const ProcessSpec& spec, int order) {
    const L2Result r = l2_norm(expand(spec, order));
    return {r.value, r.tail_bound};
}

ControlCheck check_l2_linf(const ProcessSpec& spec, int order, double tol) {
    const ProcessL2 l2 = process_l2(spec, order);
    const NormEstimate sup = supnorm_circle(Evaluatable::from(spec), tol);
    return {l2.value <= sup.value * (1.0 + tol), l2.value, sup.value, sup.refinement_gap};
}

}  // namespace ratarma
