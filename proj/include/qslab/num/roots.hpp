#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qslab::num {

/// Safeguarded Newton iteration for a strictly increasing f on [lo, hi],
/// solving f(u) = target. Falls back to bisection whenever the Newton step
/// leaves the current bracket. Tolerance is on the argument.
template <class F, class DF>
double newton_increasing(F f, DF df, double target, double lo, double hi, double guess,
                         double tol = 1e-12, int max_iter = 80) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo > 0.0 || fhi < 0.0) throw std::domain_error("newton_increasing: target not bracketed");
    double u = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        const double fu = f(u) - target;
        if (fu == 0.0) return u;
        if (fu > 0.0) hi = u; else lo = u;
        const double d = df(u);
        double next = (d != 0.0) ? u - fu / d : lo - 1.0;  // force bisection when flat
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - u) <= tol * (1.0 + std::abs(u))) return next;
        u = next;
    }
    return u;
}

/// Bisection to tolerance `tol` on the argument; f increasing on [lo, hi].
template <class F>
double bisect_increasing(F f, double target, double lo, double hi, double tol = 1e-14,
                         int max_iter = 200) {
    if (f(lo) - target > 0.0 || f(hi) - target < 0.0)
        throw std::domain_error("bisect_increasing: target not bracketed");
    for (int it = 0; it < max_iter && (hi - lo) > tol * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) - target >= 0.0) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace qslab::num
