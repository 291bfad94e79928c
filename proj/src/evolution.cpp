#include "expnls/evolution.hpp"

#include <cmath>

#include "expnls/fft.hpp"
#include "expnls/kernels.hpp"
#include "expnls/ode_reference.hpp"
#include "expnls/spectral.hpp"

namespace expnls {

namespace {

constexpr double kFourPi = 4.0 * kPi;

// e^{-i nu^2 |kappa|^2 tau} with the inverse-transform normalization 1/n^2
// folded in, and optionally the two-thirds mask. One complex multiply per
// mode per application.
std::vector<Complex> linear_multiplier(const GridSpec& g, double nu_sq, double tau,
                                       Dealias dealias) {
    const int n = g.n;
    const int cut = n / 3;
    std::vector<Complex> mult(g.size());
    const double scale = 1.0 / static_cast<double>(g.size());
    kernels::for_each_index(g.size(), [&](std::size_t idx) {
        const int i1 = static_cast<int>(idx) / n;
        const int i2 = static_cast<int>(idx) % n;
        if (dealias == Dealias::two_thirds &&
            (std::abs(g.signed_index(i1)) > cut || std::abs(g.signed_index(i2)) > cut)) {
            mult[idx] = Complex{0.0, 0.0};
            return;
        }
        const double k1 = g.wavenumber(i1);
        const double k2 = g.wavenumber(i2);
        const double phase = -nu_sq * (k1 * k1 + k2 * k2) * tau;
        mult[idx] = Complex{std::cos(phase), std::sin(phase)} * scale;
    });
    return mult;
}

void apply_linear(ComplexField& state, const Fft2d& fft, const std::vector<Complex>& mult) {
    fft.forward_inplace(state.values);
    kernels::for_each_index(state.values.size(),
                            [&](std::size_t i) { state.values[i] *= mult[i]; });
    fft.inverse_inplace(state.values);
}

DiagnosticsRecord make_record(double t, const ComplexField& state, const EvolveConfig& cfg) {
    DiagnosticsRecord rec;
    rec.t = t;
    state.validate();
    const ComplexField spec = to_spectrum(state);
    const double grad = grad_l2_norm_of_spectrum(spec);
    rec.grad_l2 = grad;
    rec.mass = mass(state);
    rec.hamiltonian = grad * grad + hamiltonian_potential_part(state, cfg.safety);
    rec.l4_norm = lp_norm(state, 4.0);
    rec.linf = linf_norm(state);
    rec.localized_mass.reserve(cfg.localized_mass_radii.size());
    for (double R : cfg.localized_mass_radii) rec.localized_mass.push_back(localized_mass(state, R));
    rec.boundary_band_mass = boundary_band_mass(state);
    return rec;
}

// h^2 sum over ring cells of |d1|^2 + |d2|^2, square-rooted: the
// ring-restricted gradient norm of a grid field.
double ring_restricted_grad_norm(const ComplexField& field, double inner, double outer) {
    const auto grads = gradient_fields(field);
    const GridSpec& g = field.grid;
    const int n = g.n;
    const double in2 = inner * inner;
    const double out2 = outer * outer;
    const double sum = kernels::reduce_sum(g.size(), [&](std::size_t idx) {
        const double x1 = g.coord(static_cast<int>(idx) / n);
        const double x2 = g.coord(static_cast<int>(idx) % n);
        const double r2 = x1 * x1 + x2 * x2;
        if (r2 < in2 || r2 > out2) return 0.0;
        return std::norm(grads[0].values[idx]) + std::norm(grads[1].values[idx]);
    });
    return std::sqrt(g.cell_area() * sum);
}

}  // namespace

void EvolveConfig::validate() const {
    if (!(nu_sq >= 0.0)) throw ConfigInvalid("EvolveConfig: nu_sq must be >= 0");
    if (sigma != 1 && sigma != -1) throw ConfigInvalid("EvolveConfig: sigma must be +1 or -1");
    if (!(nonlinear_scale >= 0.0)) throw ConfigInvalid("EvolveConfig: nonlinear_scale >= 0");
    if (!(dt > 0.0)) throw ConfigInvalid("EvolveConfig: dt must be > 0");
    if (!(t_end > 0.0)) throw ConfigInvalid("EvolveConfig: t_end must be > 0");
    if (record_every < 1) throw ConfigInvalid("EvolveConfig: record_every must be >= 1");
    if (!(boundary_band_tol > 0.0)) throw ConfigInvalid("EvolveConfig: boundary_band_tol > 0");
    safety.validate();
}

ComplexField nonlinear_substep(const ComplexField& field, double tau, int sigma,
                               const SafetyPolicy& safety) {
    field.validate();
    ComplexField out = field;
    field_kernels::nonlinear_phase_inplace(out, sigma * tau, safety);
    return out;
}

ComplexField linear_substep(const ComplexField& field, double tau, double nu_sq) {
    field.validate();
    ComplexField out = field;
    const auto mult = linear_multiplier(field.grid, nu_sq, tau, Dealias::none);
    apply_linear(out, fft_for(field.grid.n), mult);
    return out;
}

EvolveResult evolve(const ComplexField& u0, const EvolveConfig& cfg,
                    const EvolveObserver& observer) {
    cfg.validate();
    u0.validate();
    const GridSpec& grid = u0.grid;
    for (double R : cfg.localized_mass_radii)
        if (!(R > 0.0 && R < grid.half_width))
            throw RadiusOutOfBox("evolve: localized mass radius outside the box");

    // Initial guards: exponent cap, step-size guard, boundary leakage.
    const double x0_max = field_kernels::max_exponent_needed(u0);
    if (x0_max > cfg.safety.max_exponent)
        throw OverflowRisk("evolve: initial data already exceeds the exponent cap",
                           std::sqrt(x0_max / kFourPi));
    const double maxK0 = cfg.nonlinear_scale * std::expm1(x0_max);
    if (!cfg.override_dt_guard && cfg.dt * maxK0 > 0.1)
        throw ConfigInvalid("evolve: dt * max K(u0) > 0.1; refine dt or override the guard");
    const double m0 = mass(u0);
    if (m0 > 0.0 && boundary_band_mass(u0) > cfg.boundary_band_tol * m0)
        throw ConfigInvalid("evolve: initial data violates the boundary-leakage guard");

    const long steps = std::max(1L, std::lround(cfg.t_end / cfg.dt));
    const double dt = cfg.t_end / static_cast<double>(steps);

    const Fft2d& fft = fft_for(grid.n);
    const auto mult_half = linear_multiplier(grid, cfg.nu_sq, 0.5 * dt, cfg.dealias);
    const auto mult_full = linear_multiplier(grid, cfg.nu_sq, dt, cfg.dealias);
    const double sigma_scale = cfg.sigma * cfg.nonlinear_scale;

    EvolveResult result;
    result.dt_used = dt;
    result.steps = steps;
    result.series.push_back(make_record(0.0, u0, cfg));
    if (observer) observer(0.0, u0);

    ComplexField state = u0;
    bool half_pending = false;

    for (long s = 1; s <= steps; ++s) {
        const double t_here = dt * static_cast<double>(s);
        try {
            apply_linear(state, fft, half_pending ? mult_full : mult_half);
            field_kernels::nonlinear_phase_inplace(state, sigma_scale * dt, cfg.safety);
        } catch (const OverflowRisk& e) {
            result.blowup_suspected = true;
            result.blowup_reason = e.what();
            break;
        }
        const bool record_now = (s % cfg.record_every == 0) || s == steps;
        if (record_now) {
            apply_linear(state, fft, mult_half);
            half_pending = false;
            if (!kernels::all_finite(state.values)) {
                result.blowup_suspected = true;
                result.blowup_reason = "non-finite samples detected";
                break;
            }
            DiagnosticsRecord rec = make_record(t_here, state, cfg);
            if (m0 > 0.0 && rec.boundary_band_mass > cfg.boundary_band_tol * m0)
                result.boundary_leak = true;
            result.series.push_back(std::move(rec));
            if (observer) observer(t_here, state);
        } else {
            half_pending = true;
        }
    }

    result.last_valid_time = result.blowup_suspected ? result.series.back().t
                                                     : dt * static_cast<double>(steps);
    result.final = std::move(state);
    return result;
}

NakanishiFit nakanishi_check(const std::vector<DiagnosticsRecord>& series,
                             const std::vector<double>& recorded_radii, const ComplexField& u0,
                             double R, double R_prime) {
    if (!(R > 0.0 && R_prime > 0.0))
        throw ConfigInvalid("nakanishi_check: R and R' must be positive");
    if (R + R_prime >= u0.grid.half_width)
        throw RadiusOutOfBox("nakanishi_check: R + R' must stay inside the box");
    std::size_t idx = recorded_radii.size();
    for (std::size_t i = 0; i < recorded_radii.size(); ++i)
        if (std::abs(recorded_radii[i] - (R + R_prime)) < 1e-9) idx = i;
    if (idx == recorded_radii.size())
        throw ConfigInvalid("nakanishi_check: R + R' was not among the recorded radii");

    const double lm_R0 = localized_mass(u0, R);
    NakanishiFit fit;
    for (const DiagnosticsRecord& rec : series) {
        const double lm_outer = rec.localized_mass.at(idx);
        if (rec.t <= 0.0) {
            // B(R) is inside B(R+R'), so the t=0 slice holds with C = 0.
            if (lm_outer < lm_R0 - 1e-12 * std::max(1.0, lm_R0)) fit.violated = true;
            continue;
        }
        const double deficit = lm_R0 - lm_outer;
        if (deficit > 0.0) fit.fitted_C = std::max(fit.fitted_C, deficit * R_prime / rec.t);
    }
    return fit;
}

SupercriticalReport supercritical_experiment(const MoserParams& p_alpha,
                                             const MoserParams& p_zero,
                                             const CutoffProfile& profile, const GridSpec& grid,
                                             double epsilon,
                                             const SupercriticalOverrides& overrides) {
    if (p_alpha.k != p_zero.k || p_alpha.A != p_zero.A)
        throw ConfigInvalid("supercritical_experiment: runs must share (k, A)");
    const RingSpec ring = RingSpec::for_params(p_alpha);

    SupercriticalReport report;
    report.k = p_alpha.k;
    report.alpha = p_alpha.alpha;
    report.A = p_alpha.A;
    report.epsilon = epsilon;
    report.t_end = critical_time(p_alpha.k, epsilon);
    report.lower_bound_scale = decoherence_lower_bound(p_alpha.alpha, epsilon);

    const ComplexField v0_alpha = sample_initial_data(p_alpha, profile, grid, Frame::rescaled_y);
    const ComplexField v0_zero = sample_initial_data(p_zero, profile, grid, Frame::rescaled_y);

    SafetyPolicy safety;
    const double xa = field_kernels::max_exponent_needed(v0_alpha);
    const double xz = field_kernels::max_exponent_needed(v0_zero);
    if (std::max(xa, xz) > safety.max_exponent)
        throw OverflowRisk("supercritical_experiment: k too large for the exponent cap",
                           std::sqrt(std::max(xa, xz) / kFourPi));
    const double maxK = std::expm1(std::max(xa, xz));

    long steps = std::max(overrides.min_steps,
                          static_cast<long>(std::ceil(report.t_end * maxK / overrides.dt_guard)));
    report.steps = steps;
    report.dt = report.t_end / static_cast<double>(steps);

    EvolveConfig cfg;
    cfg.nu_sq = p_alpha.nu() * p_alpha.nu();
    cfg.sigma = +1;
    cfg.dt = report.dt;
    cfg.t_end = report.t_end;
    cfg.record_every = overrides.record_every > 0
                           ? overrides.record_every
                           : static_cast<int>(std::max(1L, steps / 128));
    cfg.safety = safety;
    cfg.override_dt_guard = true;  // our tighter guard already fixed dt

    // The exact dispersionless solution only rotates phases: Phi0(t) =
    // g e^{-i t K(g)} pointwise on the sampled data.
    auto run_against_ode = [&](const ComplexField& v0, double& out_res_l2, double& out_res_grad) {
        std::vector<double> K_of_g(v0.values.size());
        kernels::for_each_index(v0.values.size(), [&](std::size_t i) {
            K_of_g[i] = std::expm1(kFourPi * std::norm(v0.values[i]));
        });
        double max_l2 = 0.0, max_grad = 0.0;
        EvolveObserver observer = [&](double t, const ComplexField& state) {
            ComplexField diff(state.grid);
            kernels::for_each_index(diff.values.size(), [&](std::size_t i) {
                const double phase = -t * K_of_g[i];
                const Complex phi0 = v0.values[i] * Complex{std::cos(phase), std::sin(phase)};
                diff.values[i] = state.values[i] - phi0;
            });
            max_l2 = std::max(max_l2, l2_norm(diff));
            max_grad = std::max(max_grad, grad_l2_norm(diff));
        };
        EvolveResult res = evolve(v0, cfg, observer);
        out_res_l2 = max_l2;
        out_res_grad = max_grad;
        return res;
    };

    EvolveResult run_alpha = run_against_ode(v0_alpha, report.residual_l2_alpha,
                                             report.residual_grad_alpha);
    EvolveResult run_zero = run_against_ode(v0_zero, report.residual_l2_zero,
                                            report.residual_grad_zero);
    report.blowup_suspected = run_alpha.blowup_suspected || run_zero.blowup_suspected;

    ComplexField pair_diff(grid);
    kernels::for_each_index(pair_diff.values.size(), [&](std::size_t i) {
        pair_diff.values[i] = run_alpha.final.values[i] - run_zero.final.values[i];
    });
    report.pde_pair_separation = grad_l2_norm(pair_diff);
    report.pde_pair_separation_ring = ring_restricted_grad_norm(pair_diff, ring.inner, ring.outer);

    report.ode_pair_separation_quadrature =
        ode_pair_separation(p_alpha, p_zero, profile, report.t_end);

    ComplexField ode_diff(grid);
    const int n = grid.n;
    kernels::for_each_index(ode_diff.values.size(), [&](std::size_t i) {
        const double x1 = grid.coord(static_cast<int>(i) / n);
        const double x2 = grid.coord(static_cast<int>(i) % n);
        const double r = std::sqrt(x1 * x1 + x2 * x2);
        ode_diff.values[i] = phi0_eval(p_alpha, profile, report.t_end, r) -
                             phi0_eval(p_zero, profile, report.t_end, r);
    });
    report.ode_pair_separation_grid =
        ring_restricted_grad_norm(ode_diff, ring.inner, ring.outer);

    return report;
}

}  // namespace expnls
