#include "expnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "expnls/kernels.hpp"

namespace expnls {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Fft2d::Fft2d(int n) : n_(n) {
    if (n < 2 || (n & (n - 1)) != 0) throw InvalidField("Fft2d: n must be a power of two");
    std::vector<Complex> scratch(static_cast<std::size_t>(n));
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_ESTIMATE keeps planning deterministic and does not touch the
    // array; FFTW_UNALIGNED lets the same plan run on any row pointer.
    fwd_plan_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch.data()),
                                 reinterpret_cast<fftw_complex*>(scratch.data()), FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    inv_plan_ = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch.data()),
                                 reinterpret_cast<fftw_complex*>(scratch.data()), FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!fwd_plan_ || !inv_plan_) throw Error("Fft2d: FFTW planning failed");
}

Fft2d::~Fft2d() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_plan_));
}

void Fft2d::rows(std::span<Complex> a, bool inverse) const {
    const fftw_plan plan = static_cast<fftw_plan>(inverse ? inv_plan_ : fwd_plan_);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n_; ++r) {
        fftw_complex* row = reinterpret_cast<fftw_complex*>(a.data() + static_cast<std::size_t>(r) * n_);
        fftw_execute_dft(plan, row, row);
    }
}

void Fft2d::forward_inplace(std::span<Complex> a) const {
    if (a.size() != static_cast<std::size_t>(n_) * n_)
        throw InvalidField("Fft2d: array size does not match plan");
    rows(a, false);
    kernels::transpose(a.data(), n_);
    rows(a, false);
    kernels::transpose(a.data(), n_);
}

void Fft2d::inverse_inplace(std::span<Complex> a) const {
    if (a.size() != static_cast<std::size_t>(n_) * n_)
        throw InvalidField("Fft2d: array size does not match plan");
    rows(a, true);
    kernels::transpose(a.data(), n_);
    rows(a, true);
    kernels::transpose(a.data(), n_);
}

const Fft2d& fft_for(int n) {
    static std::mutex m;
    static std::map<int, std::unique_ptr<Fft2d>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(n);
    if (it == registry.end()) it = registry.emplace(n, std::make_unique<Fft2d>(n)).first;
    return *it->second;
}

namespace serial_fft {

void fft_1d_inplace(Complex* a, int n, bool inverse) {
    // Bit-reversal permutation.
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / len;
        const Complex wlen = {std::cos(ang), std::sin(ang)};
        for (int i = 0; i < n; i += len) {
            Complex w = {1.0, 0.0};
            for (int j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void fft_2d_inplace(std::span<Complex> a, int n, bool inverse) {
    for (int r = 0; r < n; ++r) fft_1d_inplace(a.data() + static_cast<std::size_t>(r) * n, n, inverse);
    serial_kernels::transpose(a.data(), n);
    for (int r = 0; r < n; ++r) fft_1d_inplace(a.data() + static_cast<std::size_t>(r) * n, n, inverse);
    serial_kernels::transpose(a.data(), n);
}

}  // namespace serial_fft

}  // namespace expnls
