#pragma once

#include <vector>

#include "qslab/geometry/domain.hpp"
#include "qslab/maps/bump.hpp"
#include "qslab/maps/plane_map.hpp"

namespace qslab::maps {

struct CuspMapRecord {
    std::vector<double> p;  // polynomial coefficients, lowest degree first
    double M = 0.0;         // smallest admissible threshold on the 1/2-step ladder
    int degree = 0;
    double lambda = 0.0;  // degree-1 case: p(u) = mu + lambda*u
    double mu = 0.0;
};

/// Diffeomorphism from the exponential cusp
///   Omega = { 0 < u, 0 < v < exp(-p(u)) }
/// onto the one-sided strip S = { x > 1, 0 < y < 1 }, blending
///   phi_1(u,v) = (((e^p(M)-1)/M) u + 1, v e^p(u))     for u <= M
///   phi_2(u,v) = (e^p(u), v e^p(u))                   for u >= 2M
/// with a smooth monotone cutoff chi on [M, 2M]. The inverse is exact on
/// both flat ranges (tail first coordinate p^{-1}(log x) by safeguarded
/// Newton, second coordinate y/x) and bracketed bisection on the blend.
class CuspMap final : public PlaneMap {
public:
    explicit CuspMap(std::vector<double> poly);

    std::string family() const override { return "cusp"; }
    Complex eval(Complex z) const override;
    Complex inverse(Complex w) const override;
    int max_exact_order() const override { return 1; }
    bool exact_partial(const MultiIndex2& k, Point2 p,
                       std::array<double, 2>& out) const override;

    const CuspMapRecord& record() const { return rec_; }
    const geom::CuspDomain& domain() const { return dom_; }

    /// b(u) = e^p(u) - (((e^p(M)-1)/M) u + 1); b(M) = 0 and b > 0 on
    /// (M, 2M) is what makes the blended first coordinate increasing.
    double b(double u) const;

    /// Blended first coordinate a(u) and its derivative.
    double a(double u) const;
    double a_prime(double u) const;

    /// Exact first partials: { dx/du, dx/dv, dy/du, dy/dv }.
    std::array<double, 4> jacobian(Point2 p) const;
    double jacobian_det(Point2 p) const;

    /// Tail inverse first coordinate g(x) = p^{-1}(log x) for x >= e^p(2M).
    double tail_inverse_u(double x) const;

private:
    double chi(double u) const;
    double chi_d1(double u) const;

    geom::CuspDomain dom_;
    CuspMapRecord rec_;
    Bump chi_;
    double ep_m_;   // e^p(M)
    double slope_;  // (e^p(M) - 1) / M
};

/// Selects the smallest admissible M on the ladder {0.5, 1.0, 1.5, ...}:
/// p(M) > 1 and p' > 0 beyond M always; additionally M > 1/lambda for
/// degree 1, and M > 1 with p' > 1 beyond M for degree >= 2.
std::shared_ptr<const CuspMap> make_cusp_map(std::vector<double> poly);

}  // namespace qslab::maps
