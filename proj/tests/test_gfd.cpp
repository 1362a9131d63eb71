#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "gwsnu/gfd.hpp"

using namespace gwsnu;

TEST_CASE("gamma-ratio factor reproduces closed forms") {
    // Gamma(1)/Gamma(1.5) = 2/sqrt(pi)
    const auto half = FractionalOrder::make(0.5, 1.0);
    CHECK(half.i_factor == Catch::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(half.i_factor == Catch::Approx(1.1283791671).epsilon(1e-9));
    // Gamma(0.5)/Gamma(1) = sqrt(pi)
    const auto both = FractionalOrder::make(0.5, 0.5);
    CHECK(both.i_factor == Catch::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(i_factor(both) == both.i_factor);
    CHECK(half.inv_i_sq() == Catch::Approx(M_PI / 4.0).epsilon(1e-14));
}

TEST_CASE("classical order collapses to exactly one") {
    const auto fo = FractionalOrder::make(1.0, 1.0);
    CHECK(fo.i_factor == 1.0);
    CHECK(fo.inv_i_sq() == 1.0);
    CHECK(fo.classical());
    CHECK_FALSE(FractionalOrder::make(0.8, 1.0).classical());
    CHECK_FALSE(FractionalOrder::make(1.0, 0.9).classical());
}

TEST_CASE("order construction rejects out-of-range parameters") {
    CHECK_THROWS_AS(FractionalOrder::make(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder::make(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder::make(-0.3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder::make(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder::make(0.5, 1.4), std::invalid_argument);
    CHECK_NOTHROW(FractionalOrder::make(1e-6, 1.0));
    CHECK_NOTHROW(FractionalOrder::make(1.0, 1e-6));
}

TEST_CASE("first operator obeys the power rule") {
    // D^a s^k = I k s^{k - a}
    for (double a : {0.6, 0.8}) {
        for (double bf : {0.9, 1.0}) {
            const auto fo = FractionalOrder::make(a, bf);
            for (double s : {0.7, 1.3, 2.1}) {
                for (double k : {1.5, 2.0, 3.25}) {
                    const double fprime = k * std::pow(s, k - 1.0);
                    const double got = gfd_first_with_deriv(fprime, fo, s);
                    const double want = fo.i_factor * k * std::pow(s, k - a);
                    CHECK(got == Catch::Approx(want).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("first operator at classical order is the plain derivative") {
    const auto fo = FractionalOrder::make(1.0, 1.0);
    const double fprime = 3.0 * 1.7 * 1.7;
    CHECK(gfd_first_with_deriv(fprime, fo, 1.7) == fprime);
    const double numeric = gfd_first([](double s) { return s * s * s; }, fo, 1.7);
    CHECK(numeric == Catch::Approx(fprime).epsilon(1e-8));
}

TEST_CASE("second operator matches its analytic expansion") {
    const auto fo = FractionalOrder::make(0.7, 0.85);
    const double k = 2.5;
    for (double s : {0.8, 1.6}) {
        const double fp = k * std::pow(s, k - 1.0);
        const double fpp = k * (k - 1.0) * std::pow(s, k - 2.0);
        const double analytic = gfd_second_with_derivs(fp, fpp, fo, s);
        const double I2 = fo.i_factor * fo.i_factor;
        const double want = I2 * ((1.0 - 0.7) * std::pow(s, 1.0 - 1.4) * fp +
                                  std::pow(s, 2.0 - 1.4) * fpp);
        CHECK(analytic == Catch::Approx(want).epsilon(1e-13));
        const double numeric = gfd_second([&](double t) { return std::pow(t, k); }, fo, s);
        CHECK(numeric == Catch::Approx(analytic).epsilon(1e-7));
    }
}

TEST_CASE("second operator at classical order is the plain second derivative") {
    const auto fo = FractionalOrder::make(1.0, 1.0);
    CHECK(gfd_second_with_derivs(5.0, -2.25, fo, 3.3) == -2.25);
}

TEST_CASE("operators reject nonpositive evaluation points") {
    const auto fo = FractionalOrder::make(0.8, 1.0);
    CHECK_THROWS_AS(gfd_first_with_deriv(1.0, fo, 0.0), std::domain_error);
    CHECK_THROWS_AS(gfd_first_with_deriv(1.0, fo, -1.0), std::domain_error);
    CHECK_THROWS_AS(gfd_second_with_derivs(1.0, 1.0, fo, -0.5), std::domain_error);
    CHECK_THROWS_AS(gfd_second([](double s) { return s; }, fo, 0.0), std::domain_error);
}
