#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "expnls/grid.hpp"

// Data-parallel inner loops. Every kernel exists twice: an OpenMP version in
// expnls::kernels (the production path) and a plain-loop twin in
// expnls::serial_kernels kept as the reference for tests and benchmarks.
//
// Reductions accumulate fixed-size chunks into per-chunk partials and combine
// the partials in index order, so the result is bit-identical for any thread
// count (and identical between the serial and parallel versions).

namespace expnls::detail {

inline constexpr std::size_t kChunk = 4096;

inline std::size_t chunk_count(std::size_t n) { return (n + kChunk - 1) / kChunk; }

}  // namespace expnls::detail

namespace expnls::serial_kernels {

template <class F>
double reduce_sum(std::size_t n, F&& term) {
    using namespace expnls::detail;
    const std::size_t nc = chunk_count(n);
    std::vector<double> partial(nc, 0.0);
    for (std::size_t c = 0; c < nc; ++c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

template <class F>
double reduce_max(std::size_t n, F&& term) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, term(i));
    return m;
}

template <class F>
void for_each_index(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

double sum_abs2(std::span<const Complex> v);
double sum_abs_pow(std::span<const Complex> v, double p);
double max_abs2(std::span<const Complex> v);

// In-place transpose of a square row-major array.
void transpose(Complex* a, int n);

}  // namespace expnls::serial_kernels

namespace expnls::kernels {

template <class F>
double reduce_sum(std::size_t n, F&& term) {
    using namespace expnls::detail;
    const std::size_t nc = chunk_count(n);
    std::vector<double> partial(nc, 0.0);
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

template <class F>
double reduce_max(std::size_t n, F&& term) {
    using namespace expnls::detail;
    const std::size_t nc = chunk_count(n);
    std::vector<double> partial(nc, 0.0);
#pragma omp parallel for schedule(static)
    for (long c = 0; c < static_cast<long>(nc); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, term(i));
        partial[static_cast<std::size_t>(c)] = m;
    }
    double total = 0.0;
    for (double p : partial) total = std::max(total, p);
    return total;
}

template <class F>
void for_each_index(std::size_t n, F&& body) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i) body(static_cast<std::size_t>(i));
}

double sum_abs2(std::span<const Complex> v);
double sum_abs_pow(std::span<const Complex> v, double p);
double max_abs2(std::span<const Complex> v);

void transpose(Complex* a, int n);

bool all_finite(std::span<const Complex> v);

}  // namespace expnls::kernels
