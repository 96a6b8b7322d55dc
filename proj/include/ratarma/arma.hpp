#pragma once

#include <cstdint>
#include <vector>

#include "ratarma/process.hpp"
#include "ratarma/rational.hpp"

namespace ratarma {

/// ARMA recurrence Y_t = sum_{j=1..N} (-ar[j-1]) Y_{t-j} + sum_{j=0..M} ma[j] eps_{t-j}.
/// ar stores the denominator coefficients q_1..q_N as written (q_0 = 1 implicit);
/// the sign flip happens in the recurrence, never in storage. ma stores p_0..p_M,
/// where index j applies to eps_{t-j}.
struct ArmaModel {
    std::vector<Complex> ar;
    std::vector<Complex> ma;
    double innovation_variance = 1.0;
    bool stationary = false;  // cached from the root test of 1 + sum q_j z^j
};

ArmaModel make_arma(std::vector<Complex> ar, std::vector<Complex> ma,
                    double innovation_variance = 1.0);

/// Read the recurrence coefficients literally off p(z)/q(z).
ArmaModel from_rational(const RationalTransfer& r);

/// Inverse of from_rational; round trips exactly.
RationalTransfer to_rational(const ArmaModel& a);

/// Infinite moving average coefficients to the given order.
/// Throws NonStationaryModel when the AR polynomial has a root inside or on
/// the unit circle.
PowerSeries wold_coeffs(const ArmaModel& a, int order);

struct Distance {
    double value;      // sqrt(sum_{n<=K} |a_n - b_n|^2) over Wold coefficients
    double tail_note;  // sum of the available decay tail bounds
};

Distance l2_distance(const ProcessSpec& a, const ProcessSpec& b, int order);

/// Coefficient-space prediction error decomposition for a model Y of a
/// process X driven by the same innovations:
///   sigma(Yhat - Y)  = |y_0|
///   ||Y - X||_2      = l2 distance of the Wold coefficients
///   sigma(Yhat - X)  = sqrt(|x_0|^2 + sum_{j>=1} |y_j - x_j|^2)
/// and the additivity check sigma(Yhat - X) <= sigma(Yhat - Y) + ||Y - X||_2.
struct PredictionReport {
    double model_prediction_sigma;
    double approximation_l2;
    double total_prediction_sigma;
    bool inequality_holds;
};

PredictionReport prediction_decomposition(const ProcessSpec& x, const ProcessSpec& y, int order);

int default_burn_in(const ArmaModel& a);

/// Sample path of length `length` after dropping `burn_in` initial steps.
/// Innovations are Gaussian with variance innovation_variance, generated by a
/// seeded mt19937_64 + Box-Muller, so paths are deterministic per seed across
/// platforms. Requires a stationary model with real coefficients.
std::vector<double> simulate(const ArmaModel& a, int length, int burn_in, std::uint64_t seed);
std::vector<double> simulate(const ArmaModel& a, int length, std::uint64_t seed);

}  // namespace ratarma
