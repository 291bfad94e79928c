#include "expnls/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace expnls {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval evaluate(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = hw * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kronrod *= hw;
    gauss *= hw;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<Interval> queue;
    queue.push(evaluate(f, a, b));
    double total = queue.top().value;
    double total_err = queue.top().error;
    int count = 1;
    while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (count >= opt.max_intervals)
            throw QuadratureFailure("integrate: subdivision budget exhausted");
        const Interval worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureFailure("integrate: interval no longer splittable");
        const Interval left = evaluate(f, worst.a, mid);
        const Interval right = evaluate(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++count;
    }
    if (!std::isfinite(total)) throw QuadratureFailure("integrate: non-finite result");
    return sign * total;
}

double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> breakpoints, const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    double total = 0.0;
    double prev = a;
    for (double x : breakpoints) {
        if (x <= prev || x > b) continue;
        total += integrate(f, prev, std::min(x, b), opt);
        prev = x;
    }
    if (prev < b) total += integrate(f, prev, b, opt);
    return sign * total;
}

}  // namespace expnls
