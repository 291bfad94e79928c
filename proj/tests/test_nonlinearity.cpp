#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "expnls/nonlinearity.hpp"
#include "expnls/spectral.hpp"
#include "expnls/quadrature.hpp"

using namespace expnls;

namespace {

// Test-side series oracle: e^x - 1 = sum x^n/n!, summed in long double.
long double expm1_series(long double x) {
    long double term = x, sum = x;
    for (int n = 2; n < 60; ++n) {
        term *= x / n;
        sum += term;
    }
    return sum;
}

long double expm1_minus_x_series(long double x) { return expm1_series(x) - x; }

constexpr double kFourPi = 4.0 * kPi;

}  // namespace

TEST_CASE("f_eval: zero, direct values, series oracle") {
    CHECK(f_eval(Complex{0.0, 0.0}) == Complex{0.0, 0.0});

    // |z|^2 = 9/(4 pi): |f| = |z| (e^9 - 1)
    const double r9 = std::sqrt(9.0 / kFourPi);
    CHECK(std::abs(f_eval(Complex{r9, 0.0})) ==
          doctest::Approx(r9 * (std::exp(9.0) - 1.0)).epsilon(1e-13));
    CHECK(std::abs(f_eval(Complex{r9, 0.0})) == doctest::Approx(r9 * 8102.08).epsilon(1e-4));

    // |z| = 0.1: |f| = 0.1 (e^{0.04 pi} - 1), series oracle
    const double expected = 0.1 * static_cast<double>(expm1_series(0.04L * kPi));
    CHECK(std::abs(f_eval(Complex{0.1, 0.0})) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(expected == doctest::Approx(0.013390).epsilon(1e-4));
}

TEST_CASE("f_eval preserves the phase and respects the cap") {
    const Complex z = std::polar(0.3, 1.234);
    const Complex w = f_eval(z);
    CHECK(std::arg(w) == doctest::Approx(std::arg(z)).epsilon(1e-14));

    SafetyPolicy tight;
    tight.max_exponent = 10.0;
    CHECK_THROWS_AS(f_eval(Complex{1.0, 0.0}, tight), OverflowRisk);
    try {
        f_eval(Complex{1.0, 0.0}, tight);
    } catch (const OverflowRisk& e) {
        CHECK(e.modulus() == doctest::Approx(1.0));
    }
}

TEST_CASE("K_eval examples") {
    CHECK(K_eval(Complex{0.0, 0.0}) == 0.0);
    const double r1 = std::sqrt(1.0 / kFourPi);
    CHECK(K_eval(Complex{0.0, r1}) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
    const double r16 = std::sqrt(16.0 / kFourPi);
    CHECK(K_eval(Complex{r16, 0.0}) == doctest::Approx(std::exp(16.0) - 1.0).epsilon(1e-13));
    CHECK(K_eval(Complex{r16, 0.0}) == doctest::Approx(8.8861e6).epsilon(1e-4));
}

TEST_CASE("hamiltonian_density: series oracle and cancellation guard") {
    CHECK(hamiltonian_density(Complex{0.0, 0.0}) == 0.0);

    const double x1 = kFourPi * 0.01;  // |z| = 0.1
    CHECK(static_cast<double>(expm1_minus_x_series(x1)) == doctest::Approx(0.0082276).epsilon(1e-4));
    CHECK(hamiltonian_density(Complex{0.1, 0.0}) ==
          doctest::Approx(static_cast<double>(expm1_minus_x_series(x1)) / kFourPi).epsilon(1e-12));
    CHECK(hamiltonian_density(Complex{0.1, 0.0}) == doctest::Approx(6.548e-4).epsilon(1e-3));

    // x = 1e-6: naive evaluation would lose most digits.
    const double x2 = 1e-6;
    const double z2 = std::sqrt(x2 / kFourPi);
    const double expected = static_cast<double>(expm1_minus_x_series((long double)x2)) / kFourPi;
    CHECK(hamiltonian_density(Complex{z2, 0.0}) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(expected == doctest::Approx(x2 * x2 / (8.0 * kPi)).epsilon(1e-5));

    // Sweep the cutoff seam.
    for (double x : {1e-12, 1e-8, 1e-5, 9.9e-4, 1.01e-3, 1e-2, 0.5, 3.0}) {
        const double z = std::sqrt(x / kFourPi);
        const double oracle = static_cast<double>(expm1_minus_x_series((long double)x)) / kFourPi;
        CHECK(hamiltonian_density(Complex{z, 0.0}) == doctest::Approx(oracle).epsilon(1e-11));
    }
}

TEST_CASE("gauge invariance of f") {
    std::mt19937_64 rng(2024);
    auto uniform = [&rng]() { return ((rng() >> 11) + 0.5) * 0x1.0p-53; };
    for (int i = 0; i < 1000; ++i) {
        const double r = 0.9 * uniform();
        const double base = 2.0 * kPi * uniform();
        const double theta = 2.0 * kPi * uniform();
        const Complex z = std::polar(r, base);
        const Complex lhs = f_eval(std::polar(1.0, theta) * z);
        const Complex rhs = std::polar(1.0, theta) * f_eval(z);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("pointwise Lipschitz bound has a finite, reseed-stable constant") {
    const double eps = 0.1;
    auto fitted_C = [&](unsigned long long seed) {
        std::mt19937_64 rng(seed);
        auto uniform = [&rng]() { return ((rng() >> 11) + 0.5) * 0x1.0p-53; };
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const Complex z1 = std::polar(0.9 * uniform(), 2.0 * kPi * uniform());
            const Complex z2 = std::polar(0.9 * uniform(), 2.0 * kPi * uniform());
            if (std::abs(z1 - z2) < 1e-12) continue;
            const double denom =
                std::abs(z1 - z2) * (std::expm1(kFourPi * (1.0 + eps) * std::norm(z1)) +
                                     std::expm1(kFourPi * (1.0 + eps) * std::norm(z2)));
            worst = std::max(worst, std::abs(f_eval(z1) - f_eval(z2)) / denom);
        }
        return worst;
    };
    const double c_a = fitted_C(1);
    const double c_b = fitted_C(77);
    CHECK(c_a > 0.0);
    CHECK(c_a < 20.0);
    CHECK(std::abs(c_a - c_b) <= 0.3 * std::max(c_a, c_b));
}

TEST_CASE("sup of x^m e^{-gamma x^2} matches the closed form") {
    for (int m : {1, 2, 3}) {
        for (double gamma : {1.0, kFourPi}) {
            double best = 0.0;
            const double x_star = std::sqrt(m / (2.0 * gamma));
            // Refined grid around the analytic maximizer plus a broad sweep.
            for (int i = 0; i <= 200000; ++i) {
                const double x = i * (5.0 * x_star / 200000.0);
                best = std::max(best, std::pow(x, m) * std::exp(-gamma * x * x));
            }
            const double closed = std::pow(m / (2.0 * gamma), 0.5 * m) * std::exp(-0.5 * m);
            CHECK(best == doctest::Approx(closed).epsilon(1e-6));
        }
    }
}

TEST_CASE("mass and hamiltonian on analytic fields") {
    const GridSpec grid(64, 6.0);
    SUBCASE("zero field") {
        const ComplexField zero(grid);
        CHECK(mass(zero) == 0.0);
        CHECK(hamiltonian(zero) == 0.0);
    }
    SUBCASE("plane wave") {
        // Amplitude a, on-grid kappa: H = |kappa|^2 a^2 (2L)^2 +
        // (2L)^2 (e^{4 pi a^2} - 1 - 4 pi a^2)/(4 pi).
        const double a = 0.25;
        const double kappa = grid.wavenumber(3);
        ComplexField wave(grid);
        for (int i1 = 0; i1 < grid.n; ++i1)
            for (int i2 = 0; i2 < grid.n; ++i2)
                wave.at(i1, i2) = std::polar(a, kappa * grid.coord(i1));
        const double box = 4.0 * grid.half_width * grid.half_width;
        const double x = kFourPi * a * a;
        const double expected = kappa * kappa * a * a * box +
                                box * static_cast<double>(expm1_minus_x_series((long double)x)) / kFourPi;
        CHECK(hamiltonian(wave) == doctest::Approx(expected).epsilon(1e-10));
        CHECK(mass(wave) == doctest::Approx(a * a * box).epsilon(1e-12));
    }
}

TEST_CASE("hamiltonian of a Gaussian matches the radial quadrature oracle") {
    // a e^{-|x|^2/2}: gradient part is pi a^2 exactly; the nonlinear part
    // comes from a tight 1D quadrature.
    const double a = 0.5;
    const GridSpec grid(256, 12.0);
    ComplexField u(grid);
    for (int i1 = 0; i1 < grid.n; ++i1) {
        const double x1 = grid.coord(i1);
        for (int i2 = 0; i2 < grid.n; ++i2) {
            const double x2 = grid.coord(i2);
            u.at(i1, i2) = Complex{a * std::exp(-0.5 * (x1 * x1 + x2 * x2)), 0.0};
        }
    }
    QuadratureOptions opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-12;
    const double potential = integrate(
        [&](double r) {
            const double g = a * std::exp(-0.5 * r * r);
            return expm1_minus_x(kFourPi * g * g) / kFourPi * 2.0 * kPi * r;
        },
        0.0, 12.0, opt);
    const double oracle = kPi * a * a + potential;
    CHECK(hamiltonian(u) == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(hamiltonian(u) >= grad_l2_norm(u) * grad_l2_norm(u));
}

TEST_CASE("classify_regime trichotomy") {
    CHECK(classify_regime(0.5).regime == Regime::Subcritical);
    CHECK(classify_regime(0.5).margin == doctest::Approx(-0.5));
    CHECK(classify_regime(1.0 + 1e-12, 1e-9).regime == Regime::Critical);
    CHECK(classify_regime(1.2).regime == Regime::Supercritical);
    CHECK(classify_regime(1.2).margin == doctest::Approx(0.2));
    CHECK_THROWS_AS(classify_regime(-0.1), InvalidFunctional);
    CHECK(classify_regime(1.0 - 5e-9, 1e-9).regime == Regime::Subcritical);
    CHECK(classify_regime(1.0 + 5e-9, 1e-9).regime == Regime::Supercritical);
}

TEST_CASE("non-finite fields are rejected") {
    const GridSpec grid(8, 1.0);
    ComplexField bad(grid);
    bad.at(3, 4) = Complex{std::nan(""), 0.0};
    CHECK_THROWS_AS(mass(bad), InvalidField);
}
