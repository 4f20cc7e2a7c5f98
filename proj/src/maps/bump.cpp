#include "qslab/maps/bump.hpp"

#include <algorithm>

namespace qslab::maps {

namespace {

double flat_exp(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
double flat_exp_d1(double t) {
    if (t <= 0.0) return 0.0;
    const double e = std::exp(-1.0 / t);
    return e / (t * t);
}

}  // namespace

double smooth_transition(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    const double f = flat_exp(s);
    const double g = flat_exp(1.0 - s);
    return f / (f + g);
}

double smooth_transition_d1(double s) {
    if (s <= 0.0 || s >= 1.0) return 0.0;
    const double f = flat_exp(s), g = flat_exp(1.0 - s);
    const double fp = flat_exp_d1(s), gp = -flat_exp_d1(1.0 - s);
    const double den = f + g;
    return (fp * g - f * gp) / (den * den);
}

Bump::Bump(BumpSpec spec) : spec_(spec) {
    spec_.validate();
    c_.fill(0.0);
    c_[0] = 1.0;  // plateau value
    // Bound caches by dense scan over the transition zones.
    auto scan = [&](double lo, double hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) return;
        const int kNodes = 2048;
        for (int i = 0; i <= kNodes; ++i) {
            const double x = lo + (hi - lo) * double(i) / kNodes;
            for (int l = 1; l <= 4; ++l)
                c_[l] = std::max(c_[l], std::abs(derivative(l, x)));
        }
    };
    scan(spec_.support_lo, spec_.plateau_lo);
    scan(spec_.plateau_hi, spec_.support_hi);
}

double Bump::operator()(double x) const {
    double v = 1.0;
    if (std::isfinite(spec_.support_lo))
        v *= smooth_transition((x - spec_.support_lo) / (spec_.plateau_lo - spec_.support_lo));
    if (std::isfinite(spec_.support_hi))
        v *= smooth_transition((spec_.support_hi - x) / (spec_.support_hi - spec_.plateau_hi));
    return v;
}

double Bump::derivative(int order, double x) const {
    if (order == 0) return (*this)(x);
    if (order == 1) {
        double rise = 1.0, fall = 1.0, d_rise = 0.0, d_fall = 0.0;
        if (std::isfinite(spec_.support_lo)) {
            const double w = spec_.plateau_lo - spec_.support_lo;
            const double s = (x - spec_.support_lo) / w;
            rise = smooth_transition(s);
            d_rise = smooth_transition_d1(s) / w;
        }
        if (std::isfinite(spec_.support_hi)) {
            const double w = spec_.support_hi - spec_.plateau_hi;
            const double s = (spec_.support_hi - x) / w;
            fall = smooth_transition(s);
            d_fall = -smooth_transition_d1(s) / w;
        }
        return d_rise * fall + rise * d_fall;
    }
    if (order > 4) throw std::invalid_argument("bump derivative order must be <= 4");
    // central differences on the first derivative
    const double h = 1e-4;
    auto lower = [&](double y) { return derivative(order - 1, y); };
    return (-lower(x + 2 * h) + 8 * lower(x + h) - 8 * lower(x - h) + lower(x - 2 * h)) /
           (12 * h);
}

double Bump::max_abs_derivative(int order) const {
    if (order < 0 || order > 4) throw std::invalid_argument("bump bound order must be <= 4");
    return c_[order];
}

}  // namespace qslab::maps
