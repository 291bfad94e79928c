#include "expnls/moser.hpp"

#include <cmath>

#include "expnls/kernels.hpp"
#include "expnls/spectral.hpp"

namespace expnls {

namespace {

// Quintic smoothstep on [0, 1].
double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double smoothstep_prime(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double u = t * (1.0 - t);
    return 30.0 * u * u;
}

constexpr double kFourPi = 4.0 * kPi;

// Radial integral of F over [lo, hi] in log coordinates:
//   int F(r) 2 pi r dr = 2 pi int F(e^rho) e^{2 rho} d rho.
// The log substitution keeps the e^{-k/2}-scale features O(1) wide.
double radial_integral(const std::function<double(double)>& F, double lo, double hi,
                       std::vector<double> radial_breakpoints,
                       const QuadratureOptions& opt = {}) {
    if (!(lo > 0.0) || hi <= lo) return 0.0;
    std::vector<double> log_bps;
    log_bps.reserve(radial_breakpoints.size());
    for (double b : radial_breakpoints)
        if (b > lo && b < hi) log_bps.push_back(std::log(b));
    auto integrand = [&F](double rho) {
        const double r = std::exp(rho);
        return F(r) * r * r;
    };
    return 2.0 * kPi *
           integrate_with_breakpoints(integrand, std::log(lo), std::log(hi), std::move(log_bps),
                                      opt);
}

}  // namespace

double CutoffProfile::chi(double tau) const { return smoothstep(2.0 * tau - 3.0); }
double CutoffProfile::chi_prime(double tau) const { return 2.0 * smoothstep_prime(2.0 * tau - 3.0); }
double CutoffProfile::phi(double r) const { return 1.0 - smoothstep(r - 1.0); }
double CutoffProfile::phi_prime(double r) const { return -smoothstep_prime(r - 1.0); }
double CutoffProfile::chi_prime_max() const { return 2.0 * smoothstep_prime(0.5); }

MoserParams::MoserParams(int k_, double alpha_, double A_) : k(k_), alpha(alpha_), A(A_) {
    if (k < 4) throw ConfigInvalid("MoserParams: k must be an integer >= 4");
    if (!(alpha >= 0.0)) throw ConfigInvalid("MoserParams: alpha must be >= 0");
    if (!(A > 0.0)) throw ConfigInvalid("MoserParams: A must be > 0");
    const double v = nu();
    if (!(2.0 * plateau_radius() < v && v < 1.0))
        throw ConfigInvalid("MoserParams: ring geometry needs 2 e^{-k/2} < nu_k(A) < 1");
}

double f_k_eval(int k, double r) {
    if (k < 1) throw ConfigInvalid("f_k_eval: k must be >= 1");
    if (!(r >= 0.0)) throw ConfigInvalid("f_k_eval: r must be >= 0");
    if (r >= 1.0) return 0.0;
    const double plateau = std::exp(-0.5 * k);
    if (r <= plateau) return std::sqrt(k / kFourPi);
    return -std::log(r) / std::sqrt(k * kPi);
}

double f_k_prime(int k, double r) {
    const double plateau = std::exp(-0.5 * k);
    if (r >= 1.0 || r <= plateau) return 0.0;
    return -1.0 / (r * std::sqrt(k * kPi));
}

double eta_k_eval(const CutoffProfile& profile, int k, double r) {
    const double e = std::exp(0.5 * k);
    return profile.chi(e * r) * profile.chi(e * (1.0 - r));
}

double eta_k_prime(const CutoffProfile& profile, int k, double r) {
    const double e = std::exp(0.5 * k);
    return e * profile.chi_prime(e * r) * profile.chi(e * (1.0 - r)) -
           e * profile.chi(e * r) * profile.chi_prime(e * (1.0 - r));
}

double g_eval(const MoserParams& p, const CutoffProfile& profile, double r) {
    if (r >= 2.0 * p.nu()) return 0.0;
    if (r <= 1.5 * p.plateau_radius()) return 0.0;
    return p.amplitude_factor() * eta_k_eval(profile, p.k, r) * f_k_eval(p.k, r) *
           profile.phi(r / p.nu());
}

double g_prime(const MoserParams& p, const CutoffProfile& profile, double r) {
    const double v = p.nu();
    if (r >= 2.0 * v || r <= 1.5 * p.plateau_radius()) return 0.0;
    const double eta = eta_k_eval(profile, p.k, r);
    const double etap = eta_k_prime(profile, p.k, r);
    const double f = f_k_eval(p.k, r);
    const double fp = f_k_prime(p.k, r);
    const double ph = profile.phi(r / v);
    const double php = profile.phi_prime(r / v) / v;
    return p.amplitude_factor() * (etap * f * ph + eta * fp * ph + eta * f * php);
}

ComplexField sample_initial_data(const MoserParams& p, const CutoffProfile& profile,
                                 const GridSpec& grid, Frame frame) {
    const double v = p.nu();
    const double inner = 2.0 * p.plateau_radius();
    double annulus_span, min_half_width;
    if (frame == Frame::physical_x) {
        annulus_span = 1.0 - inner / v;
        min_half_width = 4.0;
    } else {
        annulus_span = v - inner;
        min_half_width = 4.0 * v;
    }
    if (grid.half_width < min_half_width)
        throw ConfigInvalid("sample_initial_data: box too small for the data support");
    if (annulus_span / grid.spacing() < 16.0)
        throw ResolutionTooCoarse(
            "sample_initial_data: annulus [2 e^{-k/2}, nu] spans fewer than 16 cells");

    ComplexField field(grid);
    const int n = grid.n;
    const double scale = (frame == Frame::physical_x) ? v : 1.0;
    kernels::for_each_index(grid.size(), [&](std::size_t idx) {
        const double x1 = grid.coord(static_cast<int>(idx) / n);
        const double x2 = grid.coord(static_cast<int>(idx) % n);
        const double r = scale * std::sqrt(x1 * x1 + x2 * x2);
        field.values[idx] = Complex{g_eval(p, profile, r), 0.0};
    });
    return field;
}

HamiltonianTerms hamiltonian_terms(const MoserParams& p, const CutoffProfile& profile) {
    const double k = p.k;
    const double A = p.A;
    const double alpha = p.alpha;
    const double amp2 = p.amplitude_factor() * p.amplitude_factor();
    const double sqrtk = std::sqrt(k);
    const double log2 = std::log(2.0);

    HamiltonianTerms t{};
    t.term_I = 1.0 - 2.0 / (A * sqrtk) + 2.0 * (alpha - log2) / k -
               4.0 * alpha / (A * k * sqrtk) - 4.0 * alpha * log2 / (k * k);
    t.term_I_exact = amp2 * (1.0 - 2.0 / (A * sqrtk) - 2.0 * log2 / k);

    t.term_a = (2.0 / k) * amp2 *
               integrate([&](double rho) { return profile.phi(rho) * profile.phi(rho) / rho; },
                         1.0, 2.0);

    t.C1 = 2.0 * kPi * integrate([&](double rho) {
               const double pp = profile.phi_prime(rho);
               return pp * pp * rho;
           }, 1.0, 2.0);

    t.const_a = 2.0 * 2.0 * kPi *
                integrate([&](double rho) {
                    return std::log(rho) * profile.phi(rho) * profile.phi_prime(rho);
                }, 1.0, 2.0);
    t.const_b = 2.0 * 2.0 * kPi *
                integrate([&](double rho) { return profile.phi(rho) * profile.phi_prime(rho); },
                          1.0, 2.0);

    t.term_c = amp2 * (t.const_a / (kPi * k) - t.const_b / (kPi * A * sqrtk));

    const double end_sq_outer = (k / (A * A));                       // log^2 at |y| = nu
    const double end_sq_inner = (log2 - sqrtk / A) * (log2 - sqrtk / A);  // at |y| = 2 nu
    t.term_b_lower = amp2 * (t.C1 / (kPi * k)) * std::min(end_sq_inner, end_sq_outer);
    t.term_b_upper = amp2 * (t.C1 / (kPi * k)) * std::max(end_sq_inner, end_sq_outer);
    return t;
}

double supercriticality_margin(const MoserParams& p, const CutoffProfile& profile,
                               const GridSpec& grid, const SafetyPolicy& safety) {
    const ComplexField u0 = sample_initial_data(p, profile, grid, Frame::physical_x);
    return hamiltonian(u0, safety) - 1.0;
}

double supercriticality_margin_radial(const MoserParams& p, const CutoffProfile& profile,
                                      const SafetyPolicy& safety) {
    const double v = p.nu();
    const double lo = 1.5 * p.plateau_radius();
    const double hi = 2.0 * v;
    const std::vector<double> bps = {2.0 * p.plateau_radius(), v};

    // Cap check at the largest value the profile can reach.
    const double g_max_bound = p.amplitude_factor() * f_k_eval(p.k, lo);
    if (kFourPi * g_max_bound * g_max_bound > safety.max_exponent)
        throw OverflowRisk("supercriticality_margin_radial: exponent above safety cap",
                           g_max_bound);

    const double grad_sq = radial_integral(
        [&](double r) {
            const double gp = g_prime(p, profile, r);
            return gp * gp;
        },
        lo, hi, bps);
    const double potential =
        radial_integral(
            [&](double r) {
                const double g = g_eval(p, profile, r);
                return expm1_minus_x(kFourPi * g * g, safety.small_arg_cutoff);
            },
            lo, hi, bps) /
        (kFourPi * v * v);
    return grad_sq + potential - 1.0;
}

double grad_f_k_norm_quadrature(int k) {
    const double plateau = std::exp(-0.5 * k);
    const double sq = radial_integral(
        [&](double r) {
            const double fp = f_k_prime(k, r);
            return fp * fp;
        },
        plateau, 1.0, {});
    return std::sqrt(sq);
}

double g_l2_sq_quadrature(const MoserParams& p, const CutoffProfile& profile) {
    const double v = p.nu();
    const double lo = 1.5 * p.plateau_radius();
    return radial_integral(
        [&](double r) {
            const double g = g_eval(p, profile, r);
            return g * g;
        },
        lo, 2.0 * v, {2.0 * p.plateau_radius(), v});
}

double moser_mass_physical(const MoserParams& p, const CutoffProfile& profile) {
    const double v = p.nu();
    return g_l2_sq_quadrature(p, profile) / (v * v);
}

}  // namespace expnls
