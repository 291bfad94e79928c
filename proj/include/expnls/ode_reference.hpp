#pragma once

#include "expnls/moser.hpp"

namespace expnls {

// The ring C_k = {2 e^{-k/2} <= |y| <= 3 e^{-k/2}} where decoherence is
// measured. Requires nu_k(A) > 3 e^{-k/2} so the ring sits inside the
// region where g = (1+alpha/k) f_k.
struct RingSpec {
    double inner;
    double outer;

    static RingSpec for_params(const MoserParams& p);
};

// Exact solution of the dispersionless flow: Phi0(t, y) =
// g(y) exp(-i t K(g(y))), a pure phase rotation of the initial bump.
Complex phi0_eval(const MoserParams& p, const CutoffProfile& profile, double t, double r,
                  const SafetyPolicy& safety = {});

// t_k^eps = eps * e^{-k} / sqrt(k): the horizon at which ring decoherence
// becomes visible.
double critical_time(int k, double epsilon);

// ||grad Phi0(t)||_{L^2(C_k)} from the closed-form radial integrands
//   I = (2/k) log(3/2)  (exact)  and the t^2 ring integral
//   64 pi^2 t^2 * int g^4 e^{8 pi g^2} |grad g|^2.
double ring_grad_norm(const MoserParams& p, const CutoffProfile& profile, double t);

// The decoherence scale eps (e^{2 alpha} - 1) (constant factor 1 by
// convention; comparisons use fitted constants).
double decoherence_lower_bound(double alpha, double epsilon);

// ||grad (Phi0^alpha - Phi0^0)(t)||_{L^2(C_k)} by radial quadrature of the
// explicit difference. Both parameter sets must share (k, A).
double ode_pair_separation(const MoserParams& p_alpha, const MoserParams& p_zero,
                           const CutoffProfile& profile, double t);

}  // namespace expnls
