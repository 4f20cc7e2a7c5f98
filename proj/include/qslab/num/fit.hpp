#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace qslab::num {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;          // coefficient of determination
    double max_residual = 0.0;  // max of (y_i - fit(x_i)), signed
};

/// Ordinary least squares y = slope*x + intercept.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: need >= 2 paired samples");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0, worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
        if (r > worst) worst = r;
    }
    f.max_residual = worst;
    f.r2 = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

}  // namespace qslab::num
