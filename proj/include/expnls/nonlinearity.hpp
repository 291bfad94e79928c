#pragma once

#include <cmath>

#include "expnls/grid.hpp"

namespace expnls {

// Guard rails for the exponential nonlinearity. max_exponent caps the
// argument of exp (double overflows near 709); small_arg_cutoff switches
// e^x - 1 - x to its Taylor series, where the naive form loses all digits.
struct SafetyPolicy {
    double max_exponent = 600.0;
    double small_arg_cutoff = 1e-3;

    void validate() const {
        if (!(small_arg_cutoff > 0.0 && small_arg_cutoff < 1.0 && max_exponent > 1.0 &&
              max_exponent < 709.0))
            throw ConfigInvalid("SafetyPolicy: need 0 < small_arg_cutoff < 1 < max_exponent < 709");
    }
};

// e^x - 1 - x >= 0, evaluated without cancellation: 6-term series below the
// cutoff, expm1(x) - x above.
double expm1_minus_x(double x, double cutoff = 1e-3);

// f(z) = z (e^{4 pi |z|^2} - 1). Exact zero at z = 0, output phase equals
// the input phase. Throws OverflowRisk when 4 pi |z|^2 exceeds the cap.
Complex f_eval(Complex z, const SafetyPolicy& safety = {});

// K(z) = e^{4 pi |z|^2} - 1 >= 0.
double K_eval(Complex z, const SafetyPolicy& safety = {});

// (e^x - 1 - x) / (4 pi) with x = 4 pi |z|^2: the nonlinear energy density.
double hamiltonian_density(Complex z, const SafetyPolicy& safety = {});

// Conserved functionals.
double mass(const ComplexField& field);
double hamiltonian(const ComplexField& field, const SafetyPolicy& safety = {});
// Nonlinear part only: h^2 sum of hamiltonian_density.
double hamiltonian_potential_part(const ComplexField& field, const SafetyPolicy& safety = {});

enum class Regime { Subcritical, Critical, Supercritical };

struct RegimeLabel {
    Regime regime;
    double margin;  // H(u0) - 1
};

const char* regime_name(Regime r);

// Trichotomy against the unit Hamiltonian level, with a tolerance band
// around H = 1 (exact equality is measure zero in floats).
RegimeLabel classify_regime(double H0, double tol_crit = 1e-9);

namespace field_kernels {

// max over samples of 4 pi |u|^2 (the largest exponent a nonlinear step
// would need).
double max_exponent_needed(const ComplexField& field);

// u <- u * exp(-i * sigma_tau * K(u)) pointwise; |u| is unchanged. Checks
// the cap first and throws OverflowRisk with the offending location.
void nonlinear_phase_inplace(ComplexField& field, double sigma_tau, const SafetyPolicy& safety);

}  // namespace field_kernels

}  // namespace expnls
