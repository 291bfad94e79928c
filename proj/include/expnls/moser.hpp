#pragma once

#include <string>

#include "expnls/grid.hpp"
#include "expnls/nonlinearity.hpp"
#include "expnls/quadrature.hpp"

namespace expnls {

// Smooth cutoffs used by the Moser-type data family, built from the quintic
// smoothstep s(t) = 6t^5 - 15t^4 + 10t^3 (C^2 at both ends):
//   chi: 0 on tau <= 3/2, 1 on tau >= 2
//   phi: 1 on r <= 1,     0 on r >= 2
struct CutoffProfile {
    std::string name = "quintic_smoothstep";

    double chi(double tau) const;
    double chi_prime(double tau) const;
    double phi(double r) const;
    double phi_prime(double r) const;

    // sup |chi'|; enters the eta_k derivative bound.
    double chi_prime_max() const;
};

// Parameters of the bump family g_{alpha,A,k}. The constructor enforces the
// ring geometry 2 e^{-k/2} < nu_k(A) < 1.
struct MoserParams {
    int k;
    double alpha;
    double A;

    MoserParams(int k_, double alpha_, double A_);

    // The rescaling nu_k(A) = exp(-sqrt(k)/A); nu^2 is the small dispersion
    // coefficient of the rescaled equation.
    double nu() const { return std::exp(-std::sqrt(static_cast<double>(k)) / A); }
    double plateau_radius() const { return std::exp(-0.5 * k); }
    double amplitude_factor() const { return 1.0 + alpha / k; }
};

// The radial log profile: 0 for r >= 1, -log(r)/sqrt(k pi) in between,
// constant sqrt(k/(4 pi)) below e^{-k/2}. Continuous at both breakpoints,
// and ||grad f_k||_{L^2(R^2)} = 1 for every k.
double f_k_eval(int k, double r);
double f_k_prime(int k, double r);

// Inner/outer regularization eta_k(r) = chi(e^{k/2} r) * chi(e^{k/2}(1-r)).
double eta_k_eval(const CutoffProfile& profile, int k, double r);
double eta_k_prime(const CutoffProfile& profile, int k, double r);

// g(r) = (1 + alpha/k) * eta_k(r) f_k(r) * phi(r/nu). Radially symmetric,
// supported in [3/2 e^{-k/2}, 2 nu], and equal to (1+alpha/k) f_k on the
// annulus [2 e^{-k/2}, nu].
double g_eval(const MoserParams& p, const CutoffProfile& profile, double r);
double g_prime(const MoserParams& p, const CutoffProfile& profile, double r);

enum class Frame { physical_x, rescaled_y };

// Real-valued initial data on the grid: u(0,x) = g(nu x) in the physical
// frame (support |x| <= 2, needs L >= 4) or v(0,y) = g(y) in the rescaled
// frame (needs L >= 4 nu). Throws ResolutionTooCoarse when the annulus
// [2 e^{-k/2}, nu] spans fewer than 16 cells radially in the sampled frame.
ComplexField sample_initial_data(const MoserParams& p, const CutoffProfile& profile,
                                 const GridSpec& grid, Frame frame);

// Analytic/quadrature decomposition of the gradient energy of the rescaled
// data. term_I is the printed closed form of the inner-annulus energy
// (it drops O(alpha^2/k^2) relative to term_I_exact); (a), (b), (c) cover
// the outer annulus [nu, 2 nu], with (b) only bracketed. C1 = ||grad
// phi||^2_{L^2}; const_a and const_b are the two profile integrals entering
// (c).
struct HamiltonianTerms {
    double term_I;
    double term_I_exact;
    double term_a;
    double term_b_lower;
    double term_b_upper;
    double term_c;
    double C1;
    double const_a;
    double const_b;
};

HamiltonianTerms hamiltonian_terms(const MoserParams& p, const CutoffProfile& profile);

// H(u(0,.)) - 1 for the physical-frame data, from the sampled grid
// (spectral gradient + pointwise sums). The caller compares with the
// asymptotic floor C1/(pi A^2).
double supercriticality_margin(const MoserParams& p, const CutoffProfile& profile,
                               const GridSpec& grid, const SafetyPolicy& safety = {});

// Same quantity by exact radial quadrature; the only viable route once the
// inner scale e^{-k/2}/nu drops below any affordable grid spacing.
double supercriticality_margin_radial(const MoserParams& p, const CutoffProfile& profile,
                                      const SafetyPolicy& safety = {});

// ||grad f_k||_{L^2(R^2)} by radial quadrature (equals 1).
double grad_f_k_norm_quadrature(int k);

// ||g||^2_{L^2(R^2, dy)} by radial quadrature.
double g_l2_sq_quadrature(const MoserParams& p, const CutoffProfile& profile);

// Mass of the physical-frame data: nu^{-2} ||g||^2.
double moser_mass_physical(const MoserParams& p, const CutoffProfile& profile);

}  // namespace expnls
