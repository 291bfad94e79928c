#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expnls/fft.hpp"
#include "expnls/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace expnls;

namespace {

std::vector<Complex> random_values(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return ((rng() >> 11) + 0.5) * 0x1.0p-53 * 2.0 - 1.0; };
    std::vector<Complex> v(n);
    for (auto& z : v) z = Complex{uniform(), uniform()};
    return v;
}

}  // namespace

TEST_CASE("parallel reductions match the serial reference bit for bit") {
    for (std::size_t n : {1UL, 100UL, 4096UL, 5000UL, 1UL << 16}) {
        const auto v = random_values(n, 42 + static_cast<unsigned>(n));
        CHECK(kernels::sum_abs2(v) == serial_kernels::sum_abs2(v));
        CHECK(kernels::sum_abs_pow(v, 4.0) == serial_kernels::sum_abs_pow(v, 4.0));
        CHECK(kernels::max_abs2(v) == serial_kernels::max_abs2(v));
    }
}

TEST_CASE("blocked sums agree with long-double accumulation") {
    const auto v = random_values(1 << 18, 7);
    long double acc = 0.0L;
    for (const Complex& z : v) acc += (long double)(z.real()) * z.real() + (long double)(z.imag()) * z.imag();
    const double reference = static_cast<double>(acc);
    CHECK(kernels::sum_abs2(v) == doctest::Approx(reference).epsilon(1e-13));
}

TEST_CASE("transpose twins agree") {
    for (int n : {8, 64, 256}) {
        auto a = random_values(static_cast<std::size_t>(n) * n, 11);
        auto b = a;
        kernels::transpose(a.data(), n);
        serial_kernels::transpose(b.data(), n);
        CHECK(a == b);
        kernels::transpose(a.data(), n);  // involution
        CHECK(a == random_values(static_cast<std::size_t>(n) * n, 11));
    }
}

TEST_CASE("all_finite flags NaN and Inf anywhere") {
    auto v = random_values(10000, 3);
    CHECK(kernels::all_finite(v));
    v[9876] = Complex{std::nan(""), 0.0};
    CHECK_FALSE(kernels::all_finite(v));
    v[9876] = Complex{0.0, std::numeric_limits<double>::infinity()};
    CHECK_FALSE(kernels::all_finite(v));
}

TEST_CASE("fftw path matches the serial radix-2 reference") {
    for (int n : {8, 64, 256}) {
        auto a = random_values(static_cast<std::size_t>(n) * n, 5 + static_cast<unsigned>(n));
        auto b = a;
        fft_for(n).forward_inplace(a);
        serial_fft::fft_2d_inplace(b, n, false);
        double max_err = 0.0, max_mag = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            max_err = std::max(max_err, std::abs(a[i] - b[i]));
            max_mag = std::max(max_mag, std::abs(b[i]));
        }
        CHECK(max_err <= 1e-12 * max_mag);

        fft_for(n).inverse_inplace(a);
        serial_fft::fft_2d_inplace(b, n, true);
        max_err = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) max_err = std::max(max_err, std::abs(a[i] - b[i]));
        CHECK(max_err <= 1e-10 * max_mag);
    }
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
    const int saved = omp_get_max_threads();
    const auto v = random_values(1 << 16, 99);
    auto fft_input = random_values(256 * 256, 17);

    omp_set_num_threads(1);
    const double sum1 = kernels::sum_abs2(v);
    auto fft1 = fft_input;
    fft_for(256).forward_inplace(fft1);

    omp_set_num_threads(2);
    const double sum2 = kernels::sum_abs2(v);
    auto fft2 = fft_input;
    fft_for(256).forward_inplace(fft2);

    omp_set_num_threads(saved);
    CHECK(sum1 == sum2);
    CHECK(fft1 == fft2);
}
#endif
