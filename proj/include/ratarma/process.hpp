#pragma once

#include <string>
#include <variant>

#include "ratarma/rational.hpp"
#include "ratarma/series.hpp"

namespace ratarma {

/// A stationary process X_t = x(L) eps_t described by its transfer function,
/// given either as a truncated power series or a rational function. The
/// innovations are implicit (unit-variance, uncorrelated) and never
/// materialized except by arma::simulate.
struct ProcessSpec {
    std::variant<PowerSeries, RationalTransfer> transfer;
    std::string label;

    static ProcessSpec from_series(PowerSeries s, std::string label = "");
    static ProcessSpec from_rational(RationalTransfer r, std::string label = "");
};

/// Wold coefficients of the process to the given order: taylor expansion for
/// a rational transfer, the stored coefficients (zero-padded or truncated)
/// for a series transfer.
PowerSeries expand(const ProcessSpec& spec, int order);

}  // namespace ratarma
