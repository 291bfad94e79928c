#pragma once

#include <array>
#include <vector>

#include "expnls/grid.hpp"

namespace expnls {

// Discrete Fourier coefficients of the field. Normalization: the forward
// transform divides by n^2, so a constant field c has spectrum {c in the
// zero mode} and a unit plane wave e^{i kappa.x} has a single coefficient 1.
// Parseval then reads  h^2 * sum |u|^2 = (2L)^2 * sum |u_hat|^2,
// i.e. parseval_weight(grid) = (2L)^2 = box area.
ComplexField to_spectrum(const ComplexField& field);
ComplexField from_spectrum(const ComplexField& spectrum);
double parseval_weight(const GridSpec& grid);

// sqrt(h^2 sum |u|^2); the squared value is the mass.
double l2_norm(const ComplexField& field);
// Spectral gradient norm sqrt((2L)^2 sum |kappa|^2 |u_hat|^2).
double grad_l2_norm(const ComplexField& field);
double grad_l2_norm_of_spectrum(const ComplexField& spectrum);
// (h^2 sum |u|^p)^{1/p}, p >= 1.
double lp_norm(const ComplexField& field, double p);
double linf_norm(const ComplexField& field);

// Lattice Hoelder seminorm: max over sample pairs (x, y), both inside the
// box (no periodic wrap), with 0 < |x-y| <= radius_cutoff*h, of
// |u(x)-u(y)| / |x-y|^beta. A lower estimate of the continuum seminorm;
// diagnostic grade.
double holder_seminorm(const ComplexField& field, double beta, int radius_cutoff = 4);

// h^2 sum over samples with |x| <= R of |u|^2. Monotone in R; throws
// RadiusOutOfBox for R >= L.
double localized_mass(const ComplexField& field, double R);

// Mass in the outer band [band_lo, L) in the sup norm |x|_inf, where
// band_lo = L-1 for boxes with L > 2 and 0.75*L otherwise (small rescaled
// boxes have L < 1, where an absolute width-1 band would be the whole box).
double boundary_band_mass(const ComplexField& field);

// Spectral partial derivatives (d/dx1, d/dx2) via i*kappa multipliers.
// The Nyquist mode keeps its positive wavenumber so that the component route
// and grad_l2_norm agree exactly.
std::array<ComplexField, 2> gradient_fields(const ComplexField& field);

// Zero every mode with |j1| > n/3 or |j2| > n/3 (spectral smoother for the
// non-polynomial nonlinearity; not an exact dealiasing rule here).
void apply_two_thirds_mask(ComplexField& spectrum);

// Band-limited pseudo-random field: iid complex Gaussian coefficients with a
// smooth spectral envelope exp(-|j|^2 / (2 mode_decay^2)) on |j1|,|j2| <=
// max_mode. Deterministic for a given seed on a given platform.
ComplexField random_smooth_field(const GridSpec& grid, unsigned long long seed,
                                 int max_mode = 8, double mode_decay = 3.0);

}  // namespace expnls
