#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plunge/specfun.hpp"

using namespace plunge;

TEST_CASE("sine integral at zero and pi") {
    CHECK(sine_integral(0.0).value == 0.0);
    const auto s = sine_integral(M_PI);
    CHECK(std::abs(s.value - static_cast<double>(oracle::si_series(oracle::kPi))) <= 1e-12);
    CHECK(s.abs_error_bound <= 1e-12);
}

TEST_CASE("sine integral is odd and increasing on [0, pi]") {
    for (double t : {0.3, 1.7, 3.9, 4.1, 12.0, 80.0}) CHECK(sine_integral(-t).value == -sine_integral(t).value);
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double v = sine_integral(M_PI * i / 200).value;
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("sine and cosine integrals match extended-precision series") {
    for (double t : {0.01, 0.5, 1.0, 2.5, 4.0, 4.5, 6.0, 9.0}) {
        CAPTURE(t);
        CHECK(std::abs(sine_integral(t).value - static_cast<double>(oracle::si_series(t))) <= 1e-12);
        CHECK(std::abs(cosine_integral(t).value - static_cast<double>(oracle::ci_series(t))) <= 1e-12);
    }
}

TEST_CASE("large-argument decay") {
    const double t = 1e4;
    CHECK(std::abs(sine_integral(t).value - M_PI / 2) <= 2 / t);
    CHECK(std::abs(cosine_integral(t).value) <= 2 / t);
}

TEST_CASE("Ci(t) - log t tends to Euler's constant") {
    for (double t : {1e-4, 1e-6, 1e-8}) {
        CHECK(std::abs(cosine_integral(t).value - std::log(t) - static_cast<double>(oracle::kGamma)) <= 2 * t);
    }
}

TEST_CASE("Ci at 2 pi against quadrature of the tail integral") {
    // Ci(2π) = -∫_{2π}^{X} cos(x)/x dx - ∫_X^∞ cos(x)/x dx; the second piece
    // is sin(X)/X-type and bounded by 1/X. Take X on a zero of sin.
    const long double X = 2000 * oracle::kPi;
    const long double head = -oracle::simpson([](long double x) { return std::cos(x) / x; }, 2 * oracle::kPi, X, 1e-16L);
    const double ci = cosine_integral(2 * M_PI).value;
    CHECK(std::abs(ci - static_cast<double>(head)) <= 1.0 / static_cast<double>(X));
    // With the tail's leading term removed (−sin X / X = 0, then −cos X / X²)
    // the agreement is much tighter.
    const long double tail = -(1.0L / (X * X));
    CHECK(std::abs(ci - static_cast<double>(head + tail)) <= 1e-9);
}

TEST_CASE("E1 at 1 against quadrature and bracketing") {
    const long double q = oracle::simpson([](long double x) { return std::exp(-x) / x; }, 1.0L, 60.0L, 1e-18L);
    CHECK(std::abs(exp_integral_e1(1.0).value - static_cast<double>(q)) <= 1e-10);
    const double t = 50.0;
    const double e = exp_integral_e1(t).value;
    CHECK(e > std::exp(-t) / (t + 1));
    CHECK(e < std::exp(-t) / t);
    for (double s : {1e-3, 1e-6, 1e-9}) {
        CHECK(std::abs(exp_integral_e1(s).value + std::log(s) + static_cast<double>(oracle::kGamma)) <= 2 * s);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(cosine_integral(0.0), DomainError);
    CHECK_THROWS_AS(cosine_integral(-1.0), DomainError);
    CHECK_THROWS_AS(exp_integral_e1(0.0), DomainError);
    CHECK_THROWS_AS(sine_integral(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("finite-difference derivatives") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.2, 40.0);
    for (int i = 0; i < 20; ++i) {
        const double t = U(rng);
        CAPTURE(t);
        const double dsi = oracle::derivative([](double x) { return sine_integral(x).value; }, t);
        const double dci = oracle::derivative([](double x) { return cosine_integral(x).value; }, t);
        const double de1 = oracle::derivative([](double x) { return exp_integral_e1(x).value; }, t);
        CHECK(std::abs(dsi - std::sin(t) / t) <= 1e-6);
        CHECK(std::abs(dci - std::cos(t) / t) <= 1e-6);
        CHECK(std::abs(de1 + std::exp(-t) / t) <= 1e-6);
    }
}

TEST_CASE("branches agree at the switch points") {
    const double t = kSiCiSeriesRadius;
    const auto e1 = detail::e1_imaginary_cf(t);
    CHECK(std::abs(detail::si_series(t).value - (M_PI / 2 + e1.imag())) <= 1e-10);
    const double ci_series = static_cast<double>(oracle::kGamma) + std::log(t) + detail::ci_series_regular(t).value;
    CHECK(std::abs(ci_series + e1.real()) <= 1e-10);
    const double below = exp_integral_e1(std::nextafter(kE1SeriesRadius, 0.0)).value;
    const double above = exp_integral_e1(std::nextafter(kE1SeriesRadius, 2.0)).value;
    CHECK(std::abs(below - above) <= 1e-10);
}

TEST_CASE("asymptotic expansions with optimal truncation") {
    for (double t : {16.0, 30.0, 60.0}) {
        const auto a = si_ci_asymptotic(t);
        CAPTURE(t);
        CHECK(std::abs(a.si - sine_integral(t).value) <= 2 * a.truncation + 1e-15);
        CHECK(std::abs(a.ci - cosine_integral(t).value) <= 2 * a.truncation + 1e-15);
    }
}

TEST_CASE("error bounds stay below 1e-12 on the supported range") {
    for (double t : {0.1, 1.0, 3.0, 5.0, 20.0, 200.0, 2e4}) {
        CHECK(sine_integral(t).abs_error_bound <= 1e-12);
        CHECK(cosine_integral(t).abs_error_bound <= 1e-12);
        CHECK(exp_integral_e1(t).abs_error_bound <= 1e-12);
    }
}

TEST_CASE("extended precision instantiation") {
    const long double t = 7.5L;
    CHECK(std::abs(sine_integral(t).value - oracle::si_series(t)) <= 1e-16L);
}
