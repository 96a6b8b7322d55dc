#pragma once

#include <stdexcept>
#include <string>

namespace ratarma {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant term (or numerator value at z = 0) vanishes, so no inverse
/// expansion around the origin exists.
struct NotInvertibleAtOrigin : Error {
    NotInvertibleAtOrigin() : Error("not invertible at the origin (constant term is zero)") {}
    explicit NotInvertibleAtOrigin(const std::string& what) : Error(what) {}
};

/// Evaluation requested outside the region where a tail bound can be derived.
struct UncertifiedEvaluation : Error {
    explicit UncertifiedEvaluation(const std::string& what) : Error(what) {}
};

/// The Pade denominator system is numerically singular (degenerate table entry).
struct SingularPadeSystem : Error {
    explicit SingularPadeSystem(const std::string& what) : Error(what) {}
};

/// Rational evaluation hit a denominator zero.
struct PoleHit : Error {
    explicit PoleHit(const std::string& what) : Error(what) {}
};

/// A denominator root lies on the unit circle; the supnorm on S^1 is not defined.
struct PoleOnCircle : Error {
    explicit PoleOnCircle(const std::string& what) : Error(what) {}
};

/// Operation requires a stationary model (all denominator roots outside the closed unit disk).
struct NonStationaryModel : Error {
    explicit NonStationaryModel(const std::string& what) : Error(what) {}
};

/// Optimizer initial point violates the stationarity margin.
struct InfeasibleInit : Error {
    explicit InfeasibleInit(const std::string& what) : Error(what) {}
};

/// Iterative routine failed to converge within its iteration cap.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

/// Root report requested for a degree-0 polynomial.
struct EmptyReport : Error {
    EmptyReport() : Error("polynomial has degree 0: no roots to report") {}
};

}  // namespace ratarma
