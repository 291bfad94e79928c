#pragma once

#include <memory>
#include <span>

#include "expnls/grid.hpp"

namespace expnls {

// Unnormalized 2D complex DFT on an n*n row-major array, decomposed as
// row transforms + transpose + row transforms + transpose. Row batches run
// under OpenMP; each 1D transform is an FFTW plan created once with
// FFTW_ESTIMATE, so results are deterministic for any thread count.
class Fft2d {
  public:
    explicit Fft2d(int n);
    ~Fft2d();
    Fft2d(const Fft2d&) = delete;
    Fft2d& operator=(const Fft2d&) = delete;

    int size() const { return n_; }

    void forward_inplace(std::span<Complex> a) const;
    void inverse_inplace(std::span<Complex> a) const;

  private:
    void rows(std::span<Complex> a, bool inverse) const;

    int n_;
    void* fwd_plan_;  // fftw_plan, kept opaque to avoid leaking fftw3.h
    void* inv_plan_;
};

// Process-wide plan registry (grids of a handful of sizes are reused
// throughout a run). Thread-safe.
const Fft2d& fft_for(int n);

namespace serial_fft {

// Reference path: hand-rolled iterative radix-2 transforms, no FFTW, no
// OpenMP. Used by tests to validate the production path and by the
// benchmark target.
void fft_1d_inplace(Complex* a, int n, bool inverse);
void fft_2d_inplace(std::span<Complex> a, int n, bool inverse);

}  // namespace serial_fft

}  // namespace expnls
