#pragma once

#include <vector>

#include "expnls/moser.hpp"

namespace expnls {

// ||e^{alpha_exp |u|^2} - 1||_{L^1} on the grid, h^2 sum with expm1.
double mt_functional(const ComplexField& field, double alpha_exp, const SafetyPolicy& safety = {});

struct MtRatioPoint {
    int k;
    double ratio;  // functional(f_k, alpha) / ||f_k||_{L^2}^2
};

// The sharpness scan over the Moser family, by exact radial quadrature (the
// plateau term is reduced in closed form so no large exponential is ever
// materialized; k can reach 60 and beyond). For alpha_exp = 4 pi the ratio
// grows without bound; below 4 pi it stays bounded.
std::vector<MtRatioPoint> mt_ratio_scan(const std::vector<int>& k_list, double alpha_exp);

// Closed-form/quadrature ingredients of the scan, exposed for tests.
double mt_functional_f_k_quadrature(int k, double alpha_exp);
double f_k_l2_sq_closed_form(int k);

// The minimal C making the logarithmic L^inf estimate an equality for this
// field:
//   C = exp(||u||_inf^2 / (lambda ||u||_mu^2))
//       - 8^beta mu^{-beta} ||u||_{C^beta} / ||u||_mu
// with ||u||_mu^2 = ||grad u||^2 + mu^2 ||u||^2 and ||u||_{C^beta} the
// lattice Hoelder norm. Scale-invariant under u -> s u; may be negative for
// fields far from saturation (reported raw). Requires 0 < mu <= 1,
// beta in (0,1), lambda > 1/(2 pi beta).
double log_estimate_constant(const ComplexField& field, double lambda, double mu, double beta);

// sup of log_estimate_constant over `count` random smooth fields drawn from
// the given seed. The empirical C_lambda of the family.
double log_estimate_family_sweep(const GridSpec& grid, double lambda, double mu, double beta,
                                 int count, unsigned long long seed, int workers = 1);

}  // namespace expnls
