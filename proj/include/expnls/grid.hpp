#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "expnls/errors.hpp"

namespace expnls {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Periodic square [-L, L)^2 with n samples per axis, n a power of two.
// Because n is a power of two, h = 2L/n and h*n = 2L are exact in binary
// floating point. Wavenumbers follow DFT ordering: storage index i maps to
// the signed mode j = (i <= n/2 ? i : i - n) with kappa_j = pi*j/L, so every
// kappa has a -kappa partner except the Nyquist mode j = n/2.
struct GridSpec {
    int n = 0;
    double half_width = 0.0;

    GridSpec() = default;
    GridSpec(int n_, double half_width_) : n(n_), half_width(half_width_) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw InvalidField("GridSpec: n must be a power of two, n >= 8");
        if (!(half_width > 0.0) || !std::isfinite(half_width))
            throw InvalidField("GridSpec: half_width must be positive and finite");
    }

    double spacing() const { return 2.0 * half_width / n; }
    double cell_area() const { return spacing() * spacing(); }
    std::size_t size() const { return static_cast<std::size_t>(n) * n; }

    // Physical coordinate of sample i along either axis.
    double coord(int i) const { return -half_width + i * spacing(); }

    int signed_index(int i) const { return i <= n / 2 ? i : i - n; }
    double wavenumber(int i) const { return kPi * signed_index(i) / half_width; }

    bool operator==(const GridSpec& o) const {
        return n == o.n && half_width == o.half_width;
    }
};

// Complex samples on a GridSpec, row-major over (x1, x2):
// values[i1*n + i2] = u(coord(i1), coord(i2)).
struct ComplexField {
    GridSpec grid;
    std::vector<Complex> values;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g) : grid(g), values(g.size(), Complex{0.0, 0.0}) {}

    Complex& at(int i1, int i2) { return values[static_cast<std::size_t>(i1) * grid.n + i2]; }
    const Complex& at(int i1, int i2) const {
        return values[static_cast<std::size_t>(i1) * grid.n + i2];
    }

    // Throws InvalidField on NaN/Inf samples or size mismatch.
    void validate() const;
};

}  // namespace expnls
