#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "expnls/quadrature.hpp"

using namespace expnls;

TEST_CASE("polynomials are exact") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(integrate([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0) ==
          doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrands") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846) ==
          doctest::Approx(2.0).epsilon(1e-13));
    // int_0^5 e^{-x^2} = sqrt(pi)/2 erf(5)
    const double expected = std::sqrt(3.14159265358979323846) / 2.0 * std::erf(5.0);
    CHECK(integrate([](double x) { return std::exp(-x * x); }, 0.0, 5.0) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("adaptivity handles a sharp peak") {
    // int_-1^1 1/(x^2 + 1e-6) dx = 2/eps * atan(1/eps), eps = 1e-3
    const double eps = 1e-3;
    const double expected = 2.0 / eps * std::atan(1.0 / eps);
    const double got = integrate([&](double x) { return 1.0 / (x * x + eps * eps); }, -1.0, 1.0);
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("orientation and empty interval") {
    CHECK(integrate([](double x) { return x; }, 1.0, 0.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(integrate([](double x) { return x; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("breakpoints split kinked integrands cleanly") {
    // |x - 0.3| over [0,1]: exact 0.3^2/2 + 0.7^2/2
    auto f = [](double x) { return std::abs(x - 0.3); };
    const double expected = 0.5 * (0.09 + 0.49);
    CHECK(integrate_with_breakpoints(f, 0.0, 1.0, {0.3}) ==
          doctest::Approx(expected).epsilon(1e-13));
    // Breakpoints outside the interval are ignored.
    CHECK(integrate_with_breakpoints(f, 0.0, 1.0, {-5.0, 0.3, 7.0}) ==
          doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("budget exhaustion raises QuadratureFailure") {
    QuadratureOptions opt;
    opt.max_intervals = 8;
    opt.rel_tol = 1e-14;
    opt.abs_tol = 0.0;
    auto nasty = [](double x) { return std::pow(std::abs(x) + 1e-300, -0.9); };
    CHECK_THROWS_AS(integrate(nasty, 0.0, 1.0, opt), QuadratureFailure);
}
