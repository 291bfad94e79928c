#include "expnls/inequality.hpp"

#include <cmath>
#include <thread>

#include "expnls/kernels.hpp"
#include "expnls/spectral.hpp"

namespace expnls {

namespace {

constexpr double kFourPi = 4.0 * kPi;

}  // namespace

double mt_functional(const ComplexField& field, double alpha_exp, const SafetyPolicy& safety) {
    field.validate();
    if (!(alpha_exp > 0.0)) throw ConfigInvalid("mt_functional: alpha_exp must be > 0");
    const double max_x = alpha_exp * kernels::max_abs2(field.values);
    if (max_x > safety.max_exponent) {
        for (std::size_t i = 0; i < field.values.size(); ++i)
            if (alpha_exp * std::norm(field.values[i]) > safety.max_exponent)
                throw OverflowRisk("mt_functional: exponent above safety cap",
                                   std::abs(field.values[i]), static_cast<long>(i));
    }
    const double sum = kernels::reduce_sum(field.values.size(), [&](std::size_t i) {
        return std::expm1(alpha_exp * std::norm(field.values[i]));
    });
    return field.grid.cell_area() * sum;
}

double mt_functional_f_k_quadrature(int k, double alpha_exp) {
    // Plateau disc, in closed form so no large exponential is materialized:
    //   pi e^{-k} (e^{alpha k / 4pi} - 1) = pi (e^{k(alpha/4pi - 1)} - e^{-k}).
    const double a = alpha_exp / kFourPi;  // plateau exponent is a*k
    const double plateau = kPi * (std::exp(k * (a - 1.0)) - std::exp(-static_cast<double>(k)));
    // Log annulus, rho = -log r in [0, k/2]; the exponent a*rho^2/ (k/4)...
    //   int (e^{(alpha/(k pi)) rho^2} - 1) 2 pi e^{-2 rho} d rho,
    // whose exponent (4a/k) rho^2 - 2 rho is <= 0 on the whole range for
    // alpha <= 4 pi and peaks at max(0, k(a-1)) otherwise.
    const double c = 4.0 * a / k;
    const double annulus = 2.0 * kPi *
                           integrate(
                               [&](double rho) {
                                   return std::expm1(c * rho * rho) * std::exp(-2.0 * rho);
                               },
                               0.0, 0.5 * k, {1e-13, 1e-11, 8000});
    return plateau + annulus;
}

double f_k_l2_sq_closed_form(int k) {
    // Plateau: pi e^{-k} k/(4 pi). Annulus: (2/k) int_e^{-k/2}^1 log^2 r r dr
    // with antiderivative (r^2/4)(2 log^2 r - 2 log r + 1).
    const double kk = static_cast<double>(k);
    const double plateau = kk * std::exp(-kk) / 4.0;
    const double at_one = 0.25;
    const double at_inner = 0.25 * std::exp(-kk) * (0.5 * kk * kk + kk + 1.0);
    return plateau + (2.0 / kk) * (at_one - at_inner);
}

std::vector<MtRatioPoint> mt_ratio_scan(const std::vector<int>& k_list, double alpha_exp) {
    if (k_list.empty()) throw ConfigInvalid("mt_ratio_scan: empty k list");
    std::vector<MtRatioPoint> out;
    out.reserve(k_list.size());
    for (int k : k_list) {
        if (k < 1) throw ConfigInvalid("mt_ratio_scan: k must be >= 1");
        out.push_back({k, mt_functional_f_k_quadrature(k, alpha_exp) / f_k_l2_sq_closed_form(k)});
    }
    return out;
}

double log_estimate_constant(const ComplexField& field, double lambda, double mu, double beta) {
    field.validate();
    if (!(mu > 0.0 && mu <= 1.0)) throw ConfigInvalid("log_estimate_constant: 0 < mu <= 1");
    if (!(beta > 0.0 && beta < 1.0)) throw ConfigInvalid("log_estimate_constant: beta in (0,1)");
    if (!(lambda > 1.0 / (2.0 * kPi * beta)))
        throw ConfigInvalid("log_estimate_constant: lambda must exceed 1/(2 pi beta)");

    const double linf = linf_norm(field);
    const double l2 = l2_norm(field);
    const double grad = grad_l2_norm(field);
    if (linf == 0.0) throw ZeroField("log_estimate_constant: zero field");

    const double mu_norm = std::sqrt(grad * grad + mu * mu * l2 * l2);
    const double holder = linf + holder_seminorm(field, beta);
    return std::exp(linf * linf / (lambda * mu_norm * mu_norm)) -
           std::pow(8.0, beta) * std::pow(mu, -beta) * holder / mu_norm;
}

double log_estimate_family_sweep(const GridSpec& grid, double lambda, double mu, double beta,
                                 int count, unsigned long long seed, int workers) {
    if (count < 1) throw ConfigInvalid("log_estimate_family_sweep: count must be >= 1");
    std::vector<double> values(static_cast<std::size_t>(count));
    workers = std::max(1, workers);

    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const ComplexField u =
                random_smooth_field(grid, seed + static_cast<unsigned long long>(i) * 1000003ULL);
            values[static_cast<std::size_t>(i)] = log_estimate_constant(u, lambda, mu, beta);
        }
    };
    if (workers == 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        const int stride = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * stride;
            const int end = std::min(count, begin + stride);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    double best = values[0];
    for (double v : values) best = std::max(best, v);
    return best;
}

}  // namespace expnls
