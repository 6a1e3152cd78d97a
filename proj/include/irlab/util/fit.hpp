#ifndef IRLAB_UTIL_FIT_HPP
#define IRLAB_UTIL_FIT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "irlab/util/errors.hpp"

namespace irlab::util {

// Ordinary least squares y = intercept + slope * x with the usual R^2.
struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double r_squared = 1.0;
    // max |y_i - fit(x_i)| / max|y| ; a scale-free misfit measure
    double max_relative_residual = 0.0;
};

inline LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ArgumentError("fit_line: need at least two points with matching sizes");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw ArgumentError("fit_line: degenerate abscissae");
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;

    const double ymean = sy / n;
    double ss_res = 0, ss_tot = 0, max_res = 0, max_y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double fi = f.intercept + f.slope * x[i];
        ss_res += (y[i] - fi) * (y[i] - fi);
        ss_tot += (y[i] - ymean) * (y[i] - ymean);
        max_res = std::max(max_res, std::abs(y[i] - fi));
        max_y = std::max(max_y, std::abs(y[i]));
    }
    f.r_squared = (ss_tot > 0) ? 1.0 - ss_res / ss_tot : 1.0;
    f.max_relative_residual = (max_y > 0) ? max_res / max_y : max_res;
    return f;
}

// Slope of log|y| against log x, for power-law exponents.
inline LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] == 0)
            throw ArgumentError("fit_loglog: requires positive x and nonzero y");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(std::abs(y[i]));
    }
    return fit_line(lx, ly);
}

} // namespace irlab::util

#endif
