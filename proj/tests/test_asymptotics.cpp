#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crank/asymptotics.hpp"
#include "crank/moment_formulas.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

using namespace crank;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("dedekind sums")
{
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == Rational(1, 18));
    CHECK(dedekind_sum(1, 1) == 0);
    CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);

    // closed form s(1, k) = (k-1)(k-2)/(12k)
    for (long k = 1; k <= 12; ++k)
        CHECK(dedekind_sum(1, k) == make_rational((k - 1) * (k - 2), 12 * k));

    // reciprocity: s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12
    for (long k = 1; k <= 10; ++k)
        for (long h = 1; h <= k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            const Rational rhs = make_rational(-1, 4) +
                                 (make_rational(h, k) + make_rational(k, h) + make_rational(1, h * k)) /
                                     Rational(12);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("multiplier data")
{
    const MultiplierData id = multiplier(0, 1);
    CHECK(std::abs(id.omega - Complex{1, 0}) < 1e-15);
    CHECK(std::abs(id.chi - std::polar(1.0, -kPi / 4)) < 1e-15);

    const MultiplierData half = multiplier(1, 2);
    CHECK(std::abs(half.omega - Complex{1, 0}) < 1e-15);
    CHECK(half.h_inv == 3);

    for (long k = 1; k <= 12; ++k)
        for (long h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const MultiplierData data = multiplier(h, k);
            CHECK(std::abs(std::abs(data.omega) - 1.0) < 1e-12);
            CHECK(std::abs(std::abs(data.chi) - 1.0) < 1e-12);
        }
    CHECK_THROWS_AS(multiplier(2, 4), std::invalid_argument);
}

TEST_CASE("kloosterman values")
{
    for (long n = 0; n <= 100; ++n) CHECK(kloosterman_A(1, n) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(kloosterman_A(2, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(kloosterman_A(2, 1) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    // the imaginary-part assertion runs on every call
    for (long k = 1; k <= 20; ++k)
        for (long n : {0L, 3L, 7L, 50L, 200L}) CHECK_NOTHROW(kloosterman_A(k, n));
    CHECK_THROWS_AS(kloosterman_A(0, 1), std::invalid_argument);
}

TEST_CASE("alpha coefficients")
{
    CHECK(alpha_coeff(0, 0, 0) == Rational(1));
    CHECK(alpha_coeff(0, 1, 0) == Rational(1, 4));
    CHECK(alpha_coeff(0, 0, 1) == make_rational(-1, 2));
    CHECK(alpha_coeff(1, 0, 0) == make_rational(2, 8));  // 2!/(2! * 4) * ... = 1/4
}

TEST_CASE("bessel I at half-integer orders")
{
    CHECK(bessel_I_half(1, 2.0) == doctest::Approx(std::sqrt(1.0 / kPi) * std::sinh(2.0)).epsilon(1e-14));
    CHECK(bessel_I_half(-1, 1.0) == doctest::Approx(std::sqrt(2.0 / kPi) * std::cosh(1.0)).epsilon(1e-14));
    CHECK(bessel_I_half(1, 2.0) == doctest::Approx(2.04623686).epsilon(1e-7));
    CHECK(bessel_I_half(-1, 1.0) == doctest::Approx(1.23120021).epsilon(1e-7));

    // large-argument closed form: I_{1/2}(y) = e^y (1 - e^{-2y}) / sqrt(2 pi y)
    const double y = 50.0;
    const double closed = std::exp(y) * (1.0 - std::exp(-2.0 * y)) / std::sqrt(2.0 * kPi * y);
    CHECK(bessel_I_half(1, y) == doctest::Approx(closed).epsilon(1e-10));

    CHECK_THROWS_AS(bessel_I_half(1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_I_half(1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_I_half(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_I_half(3, 1.0), std::invalid_argument);
}

TEST_CASE("bessel downward recurrence matches the ascending series")
{
    // I_nu(y) = sum_m (y/2)^{2m+nu} / (m! Gamma(m+nu+1)), Gamma at
    // half-integers as exact-rational multiples of sqrt(pi).
    auto gamma_half = [](int twice_x) {
        // Gamma(twice_x / 2) = r * sqrt(pi), twice_x odd
        Rational r(1);
        int t = twice_x;
        while (t > 1) {  // Gamma(x) = (x-1) Gamma(x-1)
            r *= Rational(t - 2, 2);
            t -= 2;
        }
        while (t < 1) {  // Gamma(x) = Gamma(x+1) / x
            r /= Rational(t, 2);
            t += 2;
        }
        return r;
    };
    for (int twice_nu : {1, -1, -3, -5}) {
        for (double y : {0.5, 5.0, 20.0}) {
            const double nu = twice_nu / 2.0;
            double series_value = 0.0;
            for (int m = 0; m < 60; ++m) {
                const double gamma = gamma_half(2 * m + twice_nu + 2).get_d() * std::sqrt(kPi);
                series_value += std::pow(y / 2.0, 2 * m + nu) / (std::tgamma(m + 1.0) * gamma);
            }
            CHECK(bessel_I_half(twice_nu, y) ==
                  doctest::Approx(series_value).epsilon(1e-10));
        }
    }
}

TEST_CASE("main term approximates twisted moments")
{
    const std::size_t N = 120;
    const QSeries exact0 = twisted_crank_moment_series(0, N);
    const QSeries exact1 = twisted_crank_moment_series(1, N);

    const double m050 = main_term(0, 50, 3);
    CHECK(std::abs(m050 - exact0[50].get_d()) / std::abs(exact0[50].get_d()) < 0.1);

    for (unsigned long n = 100; n <= 120; ++n) {
        const double value = main_term(1, n);
        CHECK(((n % 2 == 0) ? value > 0 : value < 0));
        CHECK((exact1[n] > 0) == (value > 0));
    }

    CHECK(std::isfinite(main_term(0, 1)));
    CHECK_THROWS_AS(main_term(0, 0), std::invalid_argument);

    const auto summands = main_term_summands(0, 100);
    REQUIRE(summands.size() == 5);  // floor(sqrt(100)/2)
    double total = 0;
    for (const auto& t : summands) {
        CHECK(t.sign * t.sign == 1);
        total += t.contribution;
    }
    CHECK(total == doctest::Approx(main_term(0, 100)).epsilon(1e-15));
}

TEST_CASE("leading order expressions")
{
    CHECK(leading_order_twisted(0, 7) < 0);
    CHECK(leading_order_twisted(0, 8) > 0);
    // |E_2| = 1: explicit value at l = 1
    const unsigned long n = 4;
    CHECK(leading_order_twisted(1, n) ==
          doctest::Approx(3.0 * 2.0 * std::exp(kPi * std::sqrt(n / 6.0))).epsilon(1e-14));

    // l = 1 untwisted constant is sqrt(3)/6
    CHECK(leading_order_untwisted(1, 1) ==
          doctest::Approx(std::sqrt(3.0) / 6.0 * std::exp(kPi * std::sqrt(2.0 / 3.0))).epsilon(1e-14));
    for (unsigned long m : {1UL, 10UL, 250UL}) CHECK(leading_order_untwisted(1, m) > 0);
    CHECK_THROWS_AS(leading_order_untwisted(0, 5), std::invalid_argument);

    // exact/leading approaches 1: closer at n = 400 than at n = 200 (l = 1)
    const std::size_t M = 400;
    const QSeries tw = twisted_crank_moment_series(1, M);
    const double r200 = tw[200].get_d() / leading_order_twisted(1, 200);
    const double r400 = tw[400].get_d() / leading_order_twisted(1, 400);
    CHECK(std::abs(r400 - 1.0) < std::abs(r200 - 1.0));

    const QSeries un = crank_moment_series(1, M);
    const double u200 = un[200].get_d() / leading_order_untwisted(1, 200);
    const double u400 = un[400].get_d() / leading_order_untwisted(1, 400);
    CHECK(std::abs(u400 - 1.0) < std::abs(u200 - 1.0));
}

TEST_CASE("eta and theta numerics")
{
    CHECK(eta_numeric({0, 1}).real() == doctest::Approx(0.7682254223).epsilon(1e-9));
    CHECK(std::abs(eta_numeric({0, 1}).imag()) < 1e-15);
    CHECK(eta_numeric({0, 2}).real() == doctest::Approx(0.5923827814).epsilon(1e-9));
    CHECK(std::abs(eta_numeric({1, 1}) - std::polar(1.0, kPi / 12.0) * eta_numeric({0, 1})) < 1e-14);
    CHECK_THROWS_AS(eta_numeric({0.5, -1}), std::invalid_argument);

    const Complex expected_half = -2.0 * eta_numeric({0, 2}) * eta_numeric({0, 2}) / eta_numeric({0, 1});
    CHECK(std::abs(theta_numeric({0.5, 0}, {0, 1}) - expected_half) < 1e-12);
    for (Complex tau : {Complex{0, 1}, Complex{0.3, 0.8}, Complex{-0.2, 2.0}})
        CHECK(std::abs(theta_numeric({0, 0}, tau)) < 1e-14);
    const Complex u{0.23, 0.11};
    const Complex tau{0.37, 1.1};
    CHECK(std::abs(theta_numeric(u + 1.0, tau) + theta_numeric(u, tau)) < 1e-13);
    CHECK_THROWS_AS(theta_numeric({0, 0}, {0.5, -1}), std::invalid_argument);
}

TEST_CASE("transformation laws")
{
    CHECK(check_transformations(0, 1, {1, 0}, {0.1, 0.2}).max_deviation() < 1e-10);
    CHECK(check_transformations(1, 2, {0.8, 0}, {0, 0.13}).max_deviation() < 1e-10);
    CHECK(check_transformations(2, 5, {1.1, 0}, {0.07, 0}).max_deviation() < 1e-10);

    for (long k = 1; k <= 8; ++k)
        for (long h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            for (double z : {0.5, 1.3})
                CHECK(check_transformations(h, k, {z, 0}, {0.1, 0.2}).max_deviation() < 1e-9);
        }
    CHECK_THROWS_AS(check_transformations(2, 4, {1, 0}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(check_transformations(0, 1, {-1, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("shift lemma")
{
    CHECK(check_shift_lemma({0.3, 0.2}, {0.1, 0.9}, 0) == 0.0);
    CHECK(check_shift_lemma({0.2, 0}, {0, 1}, 1) < 1e-10);
    CHECK(check_shift_lemma({0.1, 0.1}, {0.3, 0.9}, 3) < 1e-9);
}

TEST_CASE("multiplier identity")
{
    const MultiplierIdentityCheck c1 = check_multiplier_identity(1, 0);
    CHECK(c1.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));  // A_2(0)
    CHECK(c1.deviation < 1e-8);
    CHECK(check_multiplier_identity(2, 3).deviation < 1e-8);
    CHECK(check_multiplier_identity(4, 10).deviation < 1e-8);
    for (long c = 1; c <= 6; ++c)
        for (long n = 0; n <= 20; ++n) CHECK(check_multiplier_identity(c, n).deviation < 1e-8);
    CHECK_THROWS_AS(check_multiplier_identity(0, 1), std::invalid_argument);
}
