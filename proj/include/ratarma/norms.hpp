#pragma once

#include <functional>
#include <optional>

#include "ratarma/process.hpp"
#include "ratarma/rational.hpp"
#include "ratarma/series.hpp"

namespace ratarma {

/// Supnorm estimate from dyadic grid maximization on the unit circle.
/// `value` is the grid maximum, hence a lower bound for the true supremum;
/// value + 2 * refinement_gap is the reported upper estimate.
struct NormEstimate {
    double value = 0.0;
    int grid_points = 0;
    double refinement_gap = 0.0;
    double argmax_angle = 0.0;  // in [0, 2*pi)

    double upper() const { return value + 2.0 * refinement_gap; }
};

/// A function admissible for supnorm estimation on S^1. Construction
/// validates that pointwise evaluation on the circle is trustworthy:
/// rationals must have no on_circle pole (PoleOnCircle), series must carry a
/// decay certificate with rate < 1 (UncertifiedEvaluation). Closed forms are
/// registered explicitly. Evaluators are pure; concurrent use is safe.
class Evaluatable {
  public:
    static Evaluatable from(const RationalTransfer& r);
    static Evaluatable from(const PowerSeries& s);
    static Evaluatable from(const ProcessSpec& spec);
    static Evaluatable constant(Complex c);
    /// Closed form log(1 + a z); requires |a| < 1 (continuous on the closed disk).
    static Evaluatable log1p_form(Complex a);
    /// Unchecked custom evaluator; the caller asserts continuity on S^1.
    static Evaluatable unchecked(std::function<Complex(Complex)> fn);

    Complex operator()(Complex z) const { return fn_(z); }

    friend Evaluatable operator+(const Evaluatable& a, const Evaluatable& b);
    friend Evaluatable operator-(const Evaluatable& a, const Evaluatable& b);
    friend Evaluatable operator*(const Evaluatable& a, const Evaluatable& b);

  private:
    explicit Evaluatable(std::function<Complex(Complex)> fn) : fn_(std::move(fn)) {}
    std::function<Complex(Complex)> fn_;
};

inline constexpr int kSupnormInitialGrid = 4096;
inline constexpr int kSupnormMaxGrid = 1 << 20;
inline constexpr double kDefaultGridTol = 1e-4;

/// max |f(e^{i theta})| by dyadic refinement: 4096 points, doubling (supersets,
/// so the maximum is nondecreasing) until successive level maxima differ by
/// less than tol or the grid cap is reached.
NormEstimate supnorm_circle(const Evaluatable& f, double tol = kDefaultGridTol);

/// supnorm_circle of the pointwise difference x - y.
NormEstimate error_supnorm(const Evaluatable& x, const Evaluatable& y, double tol = kDefaultGridTol);

struct ProcessL2 {
    double value;
    std::optional<double> tail_bound;
};

/// l2 norm of the order-K Wold expansion of the process, with the tail bound
/// when decay is certified.
ProcessL2 process_l2(const ProcessSpec& spec, int order);

struct ControlCheck {
    bool holds;
    double l2;
    double supnorm;
    double refinement_gap;
};

/// Verifies the norm control ||X||_2 <= ||X||_inf: process_l2 <= supnorm * (1 + tol).
ControlCheck check_l2_linf(const ProcessSpec& spec, int order, double tol = kDefaultGridTol);

}  // namespace ratarma
