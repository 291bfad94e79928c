#include "expnls/kernels.hpp"

#include <cmath>

namespace expnls::serial_kernels {

double sum_abs2(std::span<const Complex> v) {
    return reduce_sum(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

double sum_abs_pow(std::span<const Complex> v, double p) {
    return reduce_sum(v.size(), [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
}

double max_abs2(std::span<const Complex> v) {
    return reduce_max(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

void transpose(Complex* a, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            std::swap(a[static_cast<std::size_t>(i) * n + j],
                      a[static_cast<std::size_t>(j) * n + i]);
}

}  // namespace expnls::serial_kernels

namespace expnls::kernels {

double sum_abs2(std::span<const Complex> v) {
    return reduce_sum(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

double sum_abs_pow(std::span<const Complex> v, double p) {
    return reduce_sum(v.size(), [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
}

double max_abs2(std::span<const Complex> v) {
    return reduce_max(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

void transpose(Complex* a, int n) {
    // Blocked to keep both the row and the column stripe in cache.
    constexpr int B = 64;
#pragma omp parallel for schedule(static)
    for (int ib = 0; ib < n; ib += B) {
        for (int jb = ib; jb < n; jb += B) {
            const int imax = std::min(ib + B, n);
            const int jmax = std::min(jb + B, n);
            for (int i = ib; i < imax; ++i) {
                const int j0 = (jb == ib) ? i + 1 : jb;
                for (int j = j0; j < jmax; ++j)
                    std::swap(a[static_cast<std::size_t>(i) * n + j],
                              a[static_cast<std::size_t>(j) * n + i]);
            }
        }
    }
}

bool all_finite(std::span<const Complex> v) {
    const double bad = reduce_sum(v.size(), [&](std::size_t i) {
        return (std::isfinite(v[i].real()) && std::isfinite(v[i].imag())) ? 0.0 : 1.0;
    });
    return bad == 0.0;
}

}  // namespace expnls::kernels
