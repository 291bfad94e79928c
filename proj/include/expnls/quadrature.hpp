#pragma once

#include <functional>
#include <vector>

#include "expnls/errors.hpp"

namespace expnls {

// Adaptive 1D quadrature (Gauss-Kronrod 7-15 with bisection of the worst
// interval). Throws QuadratureFailure when the subdivision budget runs out
// before the tolerance is met.
struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

// Integrate piecewise between sorted breakpoints (integrand may have kinks
// or switch formulas there). Breakpoints outside (a, b) are ignored.
double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> breakpoints,
                                  const QuadratureOptions& opt = {});

}  // namespace expnls
