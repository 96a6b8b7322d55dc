#include "ratarma/rational.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"

using ratarma::Complex;
using ratarma::Polynomial;
using ratarma::PowerSeries;
using ratarma::RationalTransfer;
using ratarma::RootClass;

TEST_CASE("pade reproduces the closed forms") {
    const RationalTransfer log_pade = pade(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 8), 1, 1);
    CHECK(std::abs(log_pade.num().coeff(0)) < 1e-14);
    CHECK(std::abs(log_pade.num().coeff(1) - Complex{0.5, 0.0}) < 1e-14);
    CHECK(std::abs(log_pade.den().coeff(0) - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(log_pade.den().coeff(1) - Complex{0.25, 0.0}) < 1e-14);

    const RationalTransfer geo_pade = pade(PowerSeries::geometric(Complex{0.5, 0.0}, 8), 1, 1);
    // 1/(1 - z/2): the numerator z-coefficient cancels.
    CHECK(std::abs(geo_pade.num().coeff(0) - Complex{1.0, 0.0}) < 1e-14);
    CHECK(std::abs(geo_pade.num().coeff(1)) < 1e-14);
    CHECK(std::abs(geo_pade.den().coeff(1) - Complex{-0.5, 0.0}) < 1e-14);

    // n = 0 is the plain truncation.
    const RationalTransfer trunc = pade(PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 8), 3, 0);
    CHECK(trunc.den().degree() == 0);
    for (int k = 0; k <= 3; ++k)
        CHECK(std::abs(trunc.num().coeff(k) -
                       PowerSeries::log1p_scaled(Complex{0.5, 0.0}, 8).coeff(k)) < 1e-14);

    CHECK_THROWS_AS(pade(PowerSeries::geometric(Complex{0.5, 0.0}, 3), 3, 3), ratarma::Error);
    // The geometric series is exactly degree (0,1), so the (1,2) table entry
    // is degenerate.
    CHECK_THROWS_AS(pade(PowerSeries::geometric(Complex{0.5, 0.0}, 8), 1, 2),
                    ratarma::SingularPadeSystem);
}

TEST_CASE("pade defining property on random certified series") {
    std::mt19937_64 rng(7101);
    std::uniform_int_distribution<int> pick(0, 8);
    int accepted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const PowerSeries s = test_support::random_decaying_series(rng, 20, 0.55);
        const int m = pick(rng);
        const int n = pick(rng);
        if (m + n > 8) continue;
        try {
            const PowerSeries back = taylor(pade(s, m, n), m + n);
            for (int k = 0; k <= m + n; ++k) CHECK(std::abs(back.coeff(k) - s.coeff(k)) < 1e-8);
            ++accepted;
        } catch (const ratarma::SingularPadeSystem&) {
            // degenerate table entries are allowed to surface
        }
    }
    CHECK(accepted > 100);
}

TEST_CASE("taylor expansions") {
    const RationalTransfer geo{Polynomial({Complex{1.0, 0.0}}),
                               Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}})};
    const PowerSeries g = taylor(geo, 4);
    for (int n = 0; n <= 4; ++n) CHECK(g.coeff(n).real() == doctest::Approx(std::pow(0.5, n)));
    CHECK(g.decay().has_value());
    CHECK(g.decay()->rate < 1.0);

    const RationalTransfer pade11{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                  Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})};
    const PowerSeries p = taylor(pade11, 3);
    CHECK(std::abs(p.coeff(0)) == 0.0);
    CHECK(p.coeff(1).real() == doctest::Approx(0.5));
    CHECK(p.coeff(2).real() == doctest::Approx(-0.125));
    CHECK(p.coeff(3).real() == doctest::Approx(1.0 / 32));

    const PowerSeries c = taylor(RationalTransfer::constant(Complex{1.0, 0.0}), 3);
    CHECK(c.coeff(0) == Complex{1.0, 0.0});
    for (int n = 1; n <= 3; ++n) CHECK(c.coeff(n) == Complex{0.0, 0.0});
}

TEST_CASE("roots locations and classification") {
    const auto sharp = roots(Polynomial({Complex{1.0, 0.0}, Complex{-2.0, 0.0}}));
    REQUIRE(sharp.roots.size() == 1);
    CHECK(std::abs(sharp.roots[0].location - Complex{0.5, 0.0}) < 1e-12);
    CHECK(sharp.roots[0].cls == RootClass::inside);

    const auto mild = roots(Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}}));
    CHECK(std::abs(mild.roots[0].location - Complex{2.0, 0.0}) < 1e-12);
    CHECK(mild.roots[0].cls == RootClass::outside);

    const auto unit = roots(Polynomial({Complex{1.0, 0.0}, Complex{-1.0, 0.0}}));
    CHECK(unit.roots[0].cls == RootClass::on_circle);

    CHECK_THROWS_AS(roots(Polynomial({Complex{3.0, 0.0}})), ratarma::EmptyReport);
}

TEST_CASE("roots reconstruction property") {
    std::mt19937_64 rng(7102);
    std::uniform_int_distribution<int> deg(1, 12);
    for (int trial = 0; trial < 150; ++trial) {
        const int d = deg(rng);
        std::vector<Complex> c(d + 1);
        for (auto& x : c) x = test_support::random_unit_box(rng);
        if (std::abs(c[d]) < 0.1) c[d] += Complex{0.5, 0.0};
        const Polynomial p{std::vector<Complex>(c)};
        const auto report = roots(p);
        REQUIRE(static_cast<int>(report.roots.size()) == p.degree());

        Polynomial rebuilt({p.coeff(p.degree())});
        for (const auto& r : report.roots)
            rebuilt = rebuilt * Polynomial({-r.location, Complex{1.0, 0.0}});
        double scale = 0.0;
        for (int k = 0; k <= p.degree(); ++k) scale = std::max(scale, std::abs(p.coeff(k)));
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(std::abs(rebuilt.coeff(k) - p.coeff(k)) < 1e-8 * scale);
    }
}

TEST_CASE("stationarity and invertibility predicates") {
    const RationalTransfer stationary{Polynomial({Complex{1.0, 0.0}}),
                                      Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}})};
    CHECK(is_stationary(stationary).verdict);

    const RationalTransfer explosive{Polynomial({Complex{1.0, 0.0}}),
                                     Polynomial({Complex{1.0, 0.0}, Complex{-2.0, 0.0}})};
    CHECK_FALSE(is_stationary(explosive).verdict);
    CHECK(is_stationary(RationalTransfer::constant(Complex{1.0, 0.0})).verdict);

    const RationalTransfer invertible{Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}}),
                                      Polynomial({Complex{1.0, 0.0}})};
    CHECK(is_invertible(invertible).verdict);

    const RationalTransfer not_invertible{Polynomial({Complex{1.0, 0.0}, Complex{-2.0, 0.0}}),
                                          Polynomial({Complex{1.0, 0.0}})};
    CHECK_FALSE(is_invertible(not_invertible).verdict);

    const RationalTransfer zero_at_origin{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                          Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})};
    CHECK_FALSE(is_invertible(zero_at_origin).verdict);

    // on_circle roots fail closed for both predicates.
    const RationalTransfer boundary{Polynomial({Complex{1.0, 0.0}, Complex{-1.0, 0.0}}),
                                    Polynomial({Complex{1.0, 0.0}})};
    CHECK_FALSE(is_invertible(boundary).verdict);
}

TEST_CASE("formal_inverse") {
    const RationalTransfer mild{Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}}),
                                Polynomial({Complex{1.0, 0.0}})};
    const RationalTransfer inv = formal_inverse(mild);
    CHECK(inv.num().degree() == 0);
    CHECK(std::abs(inv.den().coeff(1) - Complex{-0.5, 0.0}) < 1e-14);

    const RationalTransfer back = formal_inverse(inv);
    CHECK(std::abs(back.num().coeff(1) - Complex{-0.5, 0.0}) < 1e-14);
    CHECK(back.den().degree() == 0);

    const RationalTransfer zero_at_origin{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                          Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})};
    CHECK_THROWS_AS(formal_inverse(zero_at_origin), ratarma::NotInvertibleAtOrigin);
}

TEST_CASE("invertibility agrees with stationarity of the formal inverse") {
    std::mt19937_64 rng(7103);
    for (int trial = 0; trial < 300; ++trial) {
        const RationalTransfer r = test_support::random_stationary_rational(rng, 4, 1.05);
        CHECK(is_invertible(r).verdict == is_stationary(formal_inverse(r)).verdict);
    }
}

TEST_CASE("taylor of the formal inverse equals the reciprocal of taylor") {
    std::mt19937_64 rng(7104);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalTransfer r = test_support::random_stationary_rational(rng, 4, 1.3);
        const int K = 32;
        const PowerSeries via_inverse = taylor(formal_inverse(r), K);
        const PowerSeries via_reciprocal = reciprocal(taylor(r, K));
        for (int n = 0; n <= K; ++n)
            CHECK(std::abs(via_inverse.coeff(n) - via_reciprocal.coeff(n)) < 1e-10);
    }
}

TEST_CASE("eval_rational") {
    const RationalTransfer geo{Polynomial({Complex{1.0, 0.0}}),
                               Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}})};
    CHECK(std::abs(eval_rational(geo, Complex{1.0, 0.0}) - Complex{2.0, 0.0}) < 1e-14);

    const RationalTransfer pade11{Polynomial({Complex{0.0, 0.0}, Complex{0.5, 0.0}}),
                                  Polynomial({Complex{1.0, 0.0}, Complex{0.25, 0.0}})};
    CHECK(std::abs(eval_rational(pade11, Complex{-1.0, 0.0}) - Complex{-2.0 / 3.0, 0.0}) < 1e-14);

    const RationalTransfer unit_pole{Polynomial({Complex{1.0, 0.0}}),
                                     Polynomial({Complex{1.0, 0.0}, Complex{-1.0, 0.0}})};
    CHECK_THROWS_AS(eval_rational(unit_pole, Complex{1.0, 0.0}), ratarma::PoleHit);
}

TEST_CASE("common factors are reduced on construction") {
    // (1 - z/2)(1 - z/3) over (1 - z/3): the shared root cancels.
    const Polynomial shared{{Complex{1.0, 0.0}, Complex{-1.0 / 3.0, 0.0}}};
    const Polynomial num = Polynomial({Complex{1.0, 0.0}, Complex{-0.5, 0.0}}) * shared;
    const RationalTransfer r{num, shared};
    CHECK(r.den().degree() == 0);
    CHECK(r.num().degree() == 1);
    CHECK(std::abs(r.num().coeff(1) - Complex{-0.5, 0.0}) < 1e-9);
}

TEST_CASE("denominator must not vanish at the origin") {
    CHECK_THROWS_AS(RationalTransfer(Polynomial({Complex{1.0, 0.0}}),
                                     Polynomial({Complex{0.0, 0.0}, Complex{1.0, 0.0}})),
                    ratarma::Error);
}
