#include "expnls/ode_reference.hpp"

#include <cmath>

namespace expnls {

namespace {

constexpr double kFourPi = 4.0 * kPi;

void check_ring_exponent(const MoserParams& p) {
    // On the ring g = (1+alpha/k) f_k, so the largest exponent 4 pi g^2 is
    // amp^2 (k/2 - log 2)^2 * 4 / k; e^x must stay in double range.
    const double amp = p.amplitude_factor();
    const double m = 0.5 * p.k - std::log(2.0);
    const double x = 4.0 * amp * amp * m * m / p.k;
    if (x > 690.0)
        throw OverflowRisk("ring quantities: e^{4 pi g^2} exceeds double range", amp * m);
}

}  // namespace

RingSpec RingSpec::for_params(const MoserParams& p) {
    const double plateau = p.plateau_radius();
    RingSpec ring{2.0 * plateau, 3.0 * plateau};
    if (!(ring.outer < p.nu()))
        throw ConfigInvalid("RingSpec: ring must sit below nu_k(A) (needs nu > 3 e^{-k/2})");
    return ring;
}

Complex phi0_eval(const MoserParams& p, const CutoffProfile& profile, double t, double r,
                  const SafetyPolicy& safety) {
    const double g = g_eval(p, profile, r);
    const double K = K_eval(Complex{g, 0.0}, safety);
    const double phase = -t * K;
    return g * Complex{std::cos(phase), std::sin(phase)};
}

double critical_time(int k, double epsilon) {
    if (k < 4) throw ConfigInvalid("critical_time: k must be >= 4");
    if (!(epsilon > 0.0)) throw ConfigInvalid("critical_time: epsilon must be > 0");
    return epsilon * std::exp(-static_cast<double>(k)) / std::sqrt(static_cast<double>(k));
}

double ring_grad_norm(const MoserParams& p, const CutoffProfile& profile, double t) {
    (void)profile;  // the ring sits where every cutoff is identically 1
    check_ring_exponent(p);
    const RingSpec ring = RingSpec::for_params(p);
    const double k = p.k;
    const double amp = p.amplitude_factor();
    const double amp2 = amp * amp;

    const double grad_sq_ring = amp2 * (2.0 / k) * std::log(1.5);

    // 64 pi^2 t^2 int g^4 e^{8 pi g^2} |grad g|^2 dy, in rho = log r:
    //   amp^6 (2/(pi^2 k^3)) int rho^4 e^{(8/k) amp^2 rho^2} d rho.
    const double coeff = amp2 * amp2 * amp2 * 2.0 / (kPi * kPi * k * k * k);
    const double integral = integrate(
        [&](double rho) {
            const double r4 = rho * rho * rho * rho;
            return r4 * std::exp((8.0 / k) * amp2 * rho * rho);
        },
        std::log(ring.inner), std::log(ring.outer));
    const double t_term = 64.0 * kPi * kPi * t * t * coeff * integral;

    return std::sqrt(grad_sq_ring + t_term);
}

double decoherence_lower_bound(double alpha, double epsilon) {
    if (!(alpha >= 0.0)) throw ConfigInvalid("decoherence_lower_bound: alpha must be >= 0");
    if (!(epsilon > 0.0)) throw ConfigInvalid("decoherence_lower_bound: epsilon must be > 0");
    return epsilon * std::expm1(2.0 * alpha);
}

double ode_pair_separation(const MoserParams& p_alpha, const MoserParams& p_zero,
                           const CutoffProfile& profile, double t) {
    (void)profile;
    if (p_alpha.k != p_zero.k || p_alpha.A != p_zero.A)
        throw ConfigInvalid("ode_pair_separation: parameter sets must share (k, A)");
    check_ring_exponent(p_alpha);
    check_ring_exponent(p_zero);
    const RingSpec ring = RingSpec::for_params(p_alpha);
    const double k = p_alpha.k;
    const double amp_a = p_alpha.amplitude_factor();
    const double amp_z = p_zero.amplitude_factor();

    // On the ring Phi0^(c) = g_c e^{-i t K(g_c)} with g_c = amp_c f_k, so
    // grad(Phi^a - Phi^z) = grad f_k * D(rho) with
    //   D = amp_a (1 - 2 i t x_a e^{x_a}) e^{-i t (e^{x_a}-1)}
    //     - amp_z (1 - 2 i t x_z e^{x_z}) e^{-i t (e^{x_z}-1)},
    //   x_c = 4 pi g_c^2 = 4 amp_c^2 rho^2 / k.
    // ||grad f_k||^2 dy contributes the flat (2/k) d rho measure.
    auto D_sq = [&](double rho) {
        auto branch = [&](double amp) {
            const double x = 4.0 * amp * amp * rho * rho / k;
            const double ex = std::exp(x);
            const Complex pre{1.0, -2.0 * t * x * ex};
            const double phase = -t * (ex - 1.0);
            return amp * pre * Complex{std::cos(phase), std::sin(phase)};
        };
        return std::norm(branch(amp_a) - branch(amp_z));
    };
    const double integral =
        integrate(D_sq, std::log(ring.inner), std::log(ring.outer));
    return std::sqrt((2.0 / k) * integral);
}

}  // namespace expnls
