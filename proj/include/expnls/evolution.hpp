#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expnls/moser.hpp"
#include "expnls/nonlinearity.hpp"

namespace expnls {

enum class Dealias { none, two_thirds };

// One PDE run of i u_t + nu^2 Laplace u = sigma f(u), Strang split-step:
// linear(dt/2) o nonlinear(dt) o linear(dt/2).
struct EvolveConfig {
    double nu_sq = 1.0;  // dispersion coefficient; 0 only as a test hook
    int sigma = +1;
    double nonlinear_scale = 1.0;  // test hook: 0 disables f entirely
    double dt = 0.0;
    double t_end = 0.0;
    int record_every = 1;
    Dealias dealias = Dealias::none;
    SafetyPolicy safety{};
    std::vector<double> localized_mass_radii{};
    double boundary_band_tol = 1e-8;
    // dt * max K(u0) <= 0.1 unless overridden (fastest initial phase
    // rotation sets the step guard).
    bool override_dt_guard = false;

    void validate() const;
};

struct DiagnosticsRecord {
    double t = 0.0;
    double mass = 0.0;
    double hamiltonian = 0.0;
    double grad_l2 = 0.0;
    double l4_norm = 0.0;
    double linf = 0.0;
    std::vector<double> localized_mass{};  // parallel to cfg.localized_mass_radii
    double boundary_band_mass = 0.0;
};

struct EvolveResult {
    ComplexField final;
    std::vector<DiagnosticsRecord> series;
    double dt_used = 0.0;
    long steps = 0;
    bool blowup_suspected = false;
    double last_valid_time = 0.0;
    std::string blowup_reason{};
    bool boundary_leak = false;  // band mass exceeded tolerance at some record
};

// u <- u * exp(-i sigma tau K(u)) pointwise: the splitting's ODE flow,
// solved exactly (|u| unchanged).
ComplexField nonlinear_substep(const ComplexField& field, double tau, int sigma,
                               const SafetyPolicy& safety = {});

// Spectrum multiplied by exp(-i nu^2 |kappa|^2 tau): the exact free flow.
ComplexField linear_substep(const ComplexField& field, double tau, double nu_sq);

// Marches u0 to t_end recording diagnostics every record_every steps (plus
// t = 0 and the final step). On OverflowRisk or non-finite samples the
// partial series is returned with blowup_suspected set; nothing is clamped.
// The optional observer is called at every record point with the current
// state (used for PDE-vs-ODE residual tracking without storing the
// trajectory).
using EvolveObserver = std::function<void(double t, const ComplexField& state)>;
EvolveResult evolve(const ComplexField& u0, const EvolveConfig& cfg,
                    const EvolveObserver& observer = nullptr);

struct NakanishiFit {
    bool violated = false;
    double fitted_C = 0.0;
};

// Minimal C >= 0 with  LM_{R+R'}(t) >= LM_R(0) - C t / R'  over the recorded
// series. recorded_radii must contain R + R'; LM_R(0) is taken from u0
// directly. The t = 0 slice can never violate (B(R) inside B(R+R')), which
// is asserted.
NakanishiFit nakanishi_check(const std::vector<DiagnosticsRecord>& series,
                             const std::vector<double>& recorded_radii, const ComplexField& u0,
                             double R, double R_prime);

// The supercritical instability experiment: evolve the (alpha, 0) data pair
// in the rescaled frame with nu^2 = nu_k(A)^2 up to t_k^eps, and compare
// against the exact ODE pair.
struct SupercriticalOverrides {
    long min_steps = 64;
    double dt_guard = 0.05;   // dt * max K(u0) bound for these runs
    int record_every = 0;     // 0: choose ~128 records automatically
};

struct SupercriticalReport {
    int k = 0;
    double alpha = 0.0;
    double A = 0.0;
    double epsilon = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    long steps = 0;
    // (i) PDE pair gradient separation, whole box and restricted to C_k
    double pde_pair_separation = 0.0;
    double pde_pair_separation_ring = 0.0;
    // (ii) ODE pair separation: radial quadrature, and the same grid-ring
    // measure applied to sampled Phi0 (isolates dynamics from ring
    // quantization)
    double ode_pair_separation_quadrature = 0.0;
    double ode_pair_separation_grid = 0.0;
    // (iii) sup over recorded times of ||v - Phi0||_{L^2} and the gradient
    // analogue, for the alpha and 0 runs
    double residual_l2_alpha = 0.0;
    double residual_grad_alpha = 0.0;
    double residual_l2_zero = 0.0;
    double residual_grad_zero = 0.0;
    // (iv) the decoherence scale eps (e^{2 alpha} - 1)
    double lower_bound_scale = 0.0;
    bool blowup_suspected = false;
};

SupercriticalReport supercritical_experiment(const MoserParams& p_alpha,
                                             const MoserParams& p_zero,
                                             const CutoffProfile& profile, const GridSpec& grid,
                                             double epsilon,
                                             const SupercriticalOverrides& overrides = {});

}  // namespace expnls
