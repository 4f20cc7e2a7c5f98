#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qslab::maps {

/// The standard flat transition built from t -> exp(-1/t):
/// rises smoothly from 0 at s <= 0 to 1 at s >= 1, flat at both joints.
double smooth_transition(double s);
double smooth_transition_d1(double s);

/// Smooth bump profile: exactly 0 outside (support_lo, support_hi),
/// exactly 1 on [plateau_lo, plateau_hi], monotone on each transition.
/// Either side may be one-sided (infinite support and plateau edge) to
/// model monotone staircase cutoffs.
struct BumpSpec {
    double support_lo = -1.0;
    double plateau_lo = -0.5;
    double plateau_hi = 0.5;
    double support_hi = 1.0;

    void validate() const {
        if (!(support_lo < plateau_lo) && std::isfinite(support_lo))
            throw std::invalid_argument("bump: plateau must sit strictly inside support");
        if (!(plateau_hi < support_hi) && std::isfinite(support_hi))
            throw std::invalid_argument("bump: plateau must sit strictly inside support");
        if (!(plateau_lo <= plateau_hi)) throw std::invalid_argument("bump: empty plateau");
    }

    static BumpSpec standard(double support_half, double plateau_half) {
        return {-support_half, -plateau_half, plateau_half, support_half};
    }

    /// Monotone rise from 0 (u <= lo) to 1 (u >= hi).
    static BumpSpec rising(double lo, double hi) {
        return {lo, hi, std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
};

class Bump {
public:
    explicit Bump(BumpSpec spec);

    const BumpSpec& spec() const { return spec_; }

    double operator()(double x) const;

    /// Exact first derivative; central differences for orders 2..4.
    double derivative(int order, double x) const;

    /// Cached C_l = max |bump^(l)| over the support, l <= 4.
    double max_abs_derivative(int order) const;

private:
    BumpSpec spec_;
    std::array<double, 5> c_;  // derivative bound cache
};

}  // namespace qslab::maps
