#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace roughp {

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0.
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-square statistic with the given degrees of freedom.
double chi_square_p_value(double chi2, unsigned dof);

struct Interval {
    double lo;
    double hi;
};

// 95% Wilson score interval for a binomial proportion.
Interval wilson95(uint64_t successes, uint64_t trials);

// Least-squares slope of log(y) against log(x); points with x <= 0 or y <= 0
// are skipped. Needs at least two usable points with distinct x.
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace roughp
