#include "ratarma/series.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

using ratarma::Complex;
using ratarma::PowerSeries;

namespace {

double max_coeff_dev(const PowerSeries& s, const std::vector<Complex>& expected) {
    double dev = 0.0;
    for (std::size_t n = 0; n < expected.size(); ++n)
        dev = std::max(dev, std::abs(s.coeff(static_cast<int>(n)) - expected[n]));
    return dev;
}

}  // namespace

TEST_CASE("geometric constructor") {
    CHECK(max_coeff_dev(PowerSeries::geometric(Complex{0.5, 0.0}, 3),
                        {{1, 0}, {0.5, 0}, {0.25, 0}, {0.125, 0}}) == 0.0);
    CHECK(max_coeff_dev(PowerSeries::geometric(Complex{0.0, 0.0}, 2), {{1, 0}, {0, 0}, {0, 0}}) ==
          0.0);
    CHECK(max_coeff_dev(PowerSeries::geometric(Complex{-0.25, 0.0}, 2),
                        {{1, 0}, {-0.25, 0}, {0.0625, 0}}) == 0.0);
    CHECK_THROWS_AS(PowerSeries::geometric(Complex{1.0, 0.0}, 4), ratarma::Error);
    CHECK_THROWS_AS(PowerSeries::geometric(Complex{1.5, 0.0}, 4), ratarma::Error);
}

TEST_CASE("log1p_scaled constructor") {
    CHECK(max_coeff_dev(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 3),
                        {{0, 0}, {0.5, 0}, {-0.125, 0}, {1.0 / 24, 0}}) < 1e-16);
    CHECK(max_coeff_dev(PowerSeries::log1p_scaled(Complex{1.0, 0.0}, 3),
                        {{0, 0}, {1, 0}, {-0.5, 0}, {1.0 / 3, 0}}) < 1e-16);
    CHECK(max_coeff_dev(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 1), {{0, 0}, {0.5, 0}}) ==
          0.0);
    CHECK_FALSE(PowerSeries::log1p_scaled(Complex{1.0, 0.0}, 8).decay().has_value());
    CHECK(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 8).decay()->rate == 0.5);
    CHECK_THROWS_AS(PowerSeries::log1p_scaled(Complex{0.0, 0.0}, 3), ratarma::Error);
}

TEST_CASE("add, scale, mul examples") {
    const PowerSeries half = PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 2);
    CHECK(max_coeff_dev(add(half, half), {{0, 0}, {1, 0}, {-0.25, 0}}) < 1e-16);

    // (1 - z/2) * sum (z/2)^n telescopes to 1 through the stored order.
    const PowerSeries product = mul(PowerSeries::geometric(Complex{0.5, 0.0}, 4),
                                    PowerSeries::from_coeffs({{1, 0}, {-0.5, 0}}));
    CHECK(product.order() == 4);
    CHECK(max_coeff_dev(product, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}) < 1e-16);

    const PowerSeries z = PowerSeries::from_coeffs({{0, 0}, {1, 0}}).resized(2);
    CHECK(max_coeff_dev(mul(z, z), {{0, 0}, {0, 0}, {1, 0}}) == 0.0);

    CHECK(max_coeff_dev(scale(half, Complex{2.0, 0.0}), {{0, 0}, {1, 0}, {-0.25, 0}}) < 1e-16);
}

TEST_CASE("reciprocal examples and random inverse property") {
    const PowerSeries inv = reciprocal(PowerSeries::from_coeffs({{1, 0}, {-0.5, 0}}).resized(8));
    for (int n = 0; n <= 8; ++n) CHECK(inv.coeff(n).real() == doctest::Approx(std::pow(0.5, n)));

    const PowerSeries one = reciprocal(PowerSeries::from_coeffs({{1, 0}}).resized(4));
    CHECK(max_coeff_dev(one, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}) == 0.0);

    // reciprocal(1 - 2z) = (1, 2, 4, 8, ...), checked against the Cauchy-product oracle.
    const PowerSeries sharp = PowerSeries::from_coeffs({{1, 0}, {-2, 0}}).resized(6);
    const PowerSeries sharp_inv = reciprocal(sharp);
    for (int n = 0; n <= 6; ++n) CHECK(sharp_inv.coeff(n).real() == doctest::Approx(std::pow(2.0, n)));
    const auto unit = test_support::convolve(sharp.coeffs(), sharp_inv.coeffs(), 6);
    CHECK(std::abs(unit[0] - Complex{1.0, 0.0}) < 1e-12);
    for (int n = 1; n <= 6; ++n) CHECK(std::abs(unit[n]) < 1e-12);

    CHECK_THROWS_AS(reciprocal(PowerSeries::from_coeffs({{0, 0}, {1, 0}})),
                    ratarma::NotInvertibleAtOrigin);

    // Property: mul(s, reciprocal(s)) is the unit series for random s with
    // |c_0| in [0.5, 2] (higher coefficients bounded by 0.5 to keep the
    // inversion well conditioned at this order).
    std::mt19937_64 rng(7001);
    std::uniform_real_distribution<double> magnitude(0.5, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> c(17);
        for (auto& x : c) x = test_support::random_unit_box(rng) * 0.5;
        c[0] *= magnitude(rng) / std::max(std::abs(c[0]), 1e-3);
        const PowerSeries s = PowerSeries::from_coeffs(std::move(c));
        const PowerSeries t = mul(s, reciprocal(s));
        CHECK(std::abs(t.coeff(0) - Complex{1.0, 0.0}) < 1e-12);
        for (int n = 1; n <= 16; ++n) CHECK(std::abs(t.coeff(n)) < 1e-12);
    }
}

TEST_CASE("exp_series examples") {
    const PowerSeries zero = PowerSeries::from_coeffs({{0, 0}}).resized(5);
    CHECK(max_coeff_dev(exp_series(zero), {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}) == 0.0);

    // exp(log(1 + z/2)) reproduces 1 + z/2; verified against the oracle product too.
    const PowerSeries back = exp_series(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 12));
    CHECK(std::abs(back.coeff(0) - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(back.coeff(1) - Complex{0.5, 0.0}) < 1e-14);
    for (int n = 2; n <= 12; ++n) CHECK(std::abs(back.coeff(n)) < 1e-14);

    // h(z) = exp(-(1+z)/(1-z)) has constant term e^{-1}.
    std::vector<Complex> g(65, Complex{-2.0, 0.0});
    g[0] = Complex{-1.0, 0.0};
    CHECK(exp_series(PowerSeries::from_coeffs(std::move(g))).coeff(0).real() ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("log then exp round trip") {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 100; ++trial) {
        const PowerSeries s = test_support::random_decaying_series(rng, 24, 0.6);
        const PowerSeries round = exp_series(log_series(s));
        for (int n = 0; n <= 24; ++n) CHECK(std::abs(round.coeff(n) - s.coeff(n)) < 1e-10);
    }
}

TEST_CASE("l2_norm examples and triangle inequality") {
    const auto log_half = l2_norm(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 64));
    CHECK(log_half.value == doctest::Approx(0.517351562366).epsilon(1e-9));
    CHECK(log_half.value <= std::sqrt(1.0 / 3.0));
    CHECK(log_half.tail_bound.has_value());

    CHECK(l2_norm(PowerSeries::from_coeffs({{1, 0}})).value == 1.0);
    CHECK(l2_norm(PowerSeries::geometric(Complex{0.5, 0.0}, 64)).value ==
          doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));

    std::mt19937_64 rng(7003);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> a(12), b(12);
        for (auto& x : a) x = test_support::random_unit_box(rng);
        for (auto& x : b) x = test_support::random_unit_box(rng);
        const PowerSeries s = PowerSeries::from_coeffs(a);
        const PowerSeries t = PowerSeries::from_coeffs(b);
        CHECK(l2_norm(add(s, t)).value <= l2_norm(s).value + l2_norm(t).value + 1e-12);
    }
}

TEST_CASE("root_test") {
    CHECK(root_test(PowerSeries::geometric(Complex{0.5, 0.0}, 128), 32) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const double near_one = root_test(PowerSeries::log1p_scaled(Complex{1.0, 0.0}, 128), 32);
    CHECK(near_one >= 0.95);
    CHECK(near_one < 1.0);
    CHECK(root_test(PowerSeries::log1p_scaled(Complex{1.0, 0.0}, 512), 32) > near_one);
    CHECK(root_test(PowerSeries::from_coeffs({{0, 0}}).resized(16), 8) == 0.0);
}

TEST_CASE("eval with certified tail bound") {
    const auto at_one = eval(PowerSeries::geometric(Complex{0.5, 0.0}, 64), Complex{1.0, 0.0});
    CHECK(std::abs(at_one.value - Complex{2.0, 0.0}) <= std::pow(2.0, -63));
    CHECK(at_one.tail_bound <= std::pow(2.0, -63));

    CHECK(eval(PowerSeries::from_coeffs({{3, 4}, {1, 0}}), Complex{0.0, 0.0}).value ==
          Complex{3.0, 4.0});

    const auto at_minus_one =
        eval(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 64), Complex{-1.0, 0.0});
    CHECK(std::abs(at_minus_one.value - Complex{std::log(0.5), 0.0}) < 1e-12);
    CHECK(std::abs(at_minus_one.value) > 0.69);

    CHECK_THROWS_AS(eval(PowerSeries::from_coeffs({{1, 0}, {1, 0}}), Complex{0.5, 0.0}),
                    ratarma::UncertifiedEvaluation);
    CHECK_THROWS_AS(eval(PowerSeries::log1p_scaled(Complex{1.0, 0.0}, 8), Complex{0.5, 0.0}),
                    ratarma::UncertifiedEvaluation);
}

TEST_CASE("eval tail bound is sound for geometric series") {
    std::mt19937_64 rng(7004);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const PowerSeries s = PowerSeries::geometric(Complex{0.5, 0.0}, 32);
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex z = std::polar(radius(rng), angle(rng));
        const auto r = eval(s, z);
        const Complex closed = 1.0 / (Complex{1.0, 0.0} - 0.5 * z);
        CHECK(std::abs(r.value - closed) <= r.tail_bound + 1e-15);
    }
}
