#include "expnls/nonlinearity.hpp"

#include <cmath>

#include "expnls/kernels.hpp"
#include "expnls/spectral.hpp"

namespace expnls {

namespace {

constexpr double kFourPi = 4.0 * kPi;

}  // namespace

double expm1_minus_x(double x, double cutoff) {
    if (x < cutoff) {
        // x^2/2 (1 + x/3 + x^2/12 + x^3/60 + x^4/360 + x^5/2520); the first
        // dropped term is below 1e-22 relative at the default cutoff.
        const double s = 1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0 * (1.0 + x / 6.0 * (1.0 + x / 7.0))));
        return 0.5 * x * x * s;
    }
    return std::expm1(x) - x;
}

Complex f_eval(Complex z, const SafetyPolicy& safety) {
    const double x = kFourPi * std::norm(z);
    if (x > safety.max_exponent)
        throw OverflowRisk("f_eval: exponent above safety cap", std::abs(z));
    return z * std::expm1(x);
}

double K_eval(Complex z, const SafetyPolicy& safety) {
    const double x = kFourPi * std::norm(z);
    if (x > safety.max_exponent)
        throw OverflowRisk("K_eval: exponent above safety cap", std::abs(z));
    return std::expm1(x);
}

double hamiltonian_density(Complex z, const SafetyPolicy& safety) {
    const double x = kFourPi * std::norm(z);
    if (x > safety.max_exponent)
        throw OverflowRisk("hamiltonian_density: exponent above safety cap", std::abs(z));
    return expm1_minus_x(x, safety.small_arg_cutoff) / kFourPi;
}

double mass(const ComplexField& field) {
    const double n = l2_norm(field);
    return n * n;
}

double hamiltonian_potential_part(const ComplexField& field, const SafetyPolicy& safety) {
    field.validate();
    const double max_x = field_kernels::max_exponent_needed(field);
    if (max_x > safety.max_exponent) {
        const std::size_t n = field.values.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (kFourPi * std::norm(field.values[i]) > safety.max_exponent)
                throw OverflowRisk("hamiltonian: exponent above safety cap",
                                   std::abs(field.values[i]), static_cast<long>(i));
        }
    }
    const double cutoff = safety.small_arg_cutoff;
    const double sum = kernels::reduce_sum(field.values.size(), [&](std::size_t i) {
        return expm1_minus_x(kFourPi * std::norm(field.values[i]), cutoff);
    });
    return field.grid.cell_area() * sum / kFourPi;
}

double hamiltonian(const ComplexField& field, const SafetyPolicy& safety) {
    const double g = grad_l2_norm(field);
    return g * g + hamiltonian_potential_part(field, safety);
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "unknown";
}

RegimeLabel classify_regime(double H0, double tol_crit) {
    if (!(H0 >= 0.0))
        throw InvalidFunctional("classify_regime: Hamiltonian must be nonnegative");
    if (!(tol_crit > 0.0)) throw ConfigInvalid("classify_regime: tol_crit must be positive");
    const double margin = H0 - 1.0;
    Regime r = Regime::Critical;
    if (margin < -tol_crit)
        r = Regime::Subcritical;
    else if (margin > tol_crit)
        r = Regime::Supercritical;
    return {r, margin};
}

namespace field_kernels {

double max_exponent_needed(const ComplexField& field) {
    return kFourPi * kernels::max_abs2(field.values);
}

void nonlinear_phase_inplace(ComplexField& field, double sigma_tau, const SafetyPolicy& safety) {
    const double max_x = max_exponent_needed(field);
    if (max_x > safety.max_exponent) {
        const std::size_t n = field.values.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (kFourPi * std::norm(field.values[i]) > safety.max_exponent)
                throw OverflowRisk("nonlinear substep: exponent above safety cap",
                                   std::abs(field.values[i]), static_cast<long>(i));
        }
    }
    kernels::for_each_index(field.values.size(), [&](std::size_t i) {
        const double K = std::expm1(kFourPi * std::norm(field.values[i]));
        const double phase = -sigma_tau * K;
        field.values[i] *= Complex{std::cos(phase), std::sin(phase)};
    });
}

}  // namespace field_kernels

}  // namespace expnls
