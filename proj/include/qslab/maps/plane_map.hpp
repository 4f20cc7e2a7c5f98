#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "qslab/geometry/curve.hpp"
#include "qslab/geometry/point.hpp"
#include "qslab/num/fd.hpp"

namespace qslab::maps {

using geom::Complex;
using geom::Point2;
using MultiIndex2 = num::MultiIndex<2>;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct BranchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A planar diffeomorphism fixture: evaluable, invertible where a closed
/// form exists, with exact complex derivatives for the holomorphic
/// families.
class PlaneMap {
public:
    virtual ~PlaneMap() = default;

    virtual std::string family() const = 0;
    virtual Complex eval(Complex z) const = 0;
    virtual Complex inverse(Complex w) const = 0;
    virtual bool has_exact_inverse() const { return true; }

    /// Largest derivative order available in closed form (0 = none).
    virtual int max_exact_order() const { return 0; }
    virtual bool is_holomorphic() const { return false; }

    /// n-th complex derivative for holomorphic families.
    virtual Complex complex_derivative(int /*order*/, Complex /*z*/) const {
        throw std::logic_error("complex_derivative: not available for " + family());
    }

    /// Exact partial of (phi_1, phi_2) when the family provides it for
    /// this multi-index; returns false otherwise.
    virtual bool exact_partial(const MultiIndex2& k, Point2 p, std::array<double, 2>& out) const;

    Point2 eval(Point2 p) const { return Point2(eval(p.cx())); }
    Point2 inverse(Point2 p) const { return Point2(inverse(p.cx())); }
};

using PlaneMapPtr = std::shared_ptr<const PlaneMap>;

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// z -> (az + b) / (cz + d), ad - bc != 0. All derivative orders exact;
/// for A = 1/z the n-th derivative modulus is n!/|z|^(n+1).
PlaneMapPtr make_mobius(Complex a, Complex b, Complex c, Complex d);

/// z -> z^2 (no global inverse).
PlaneMapPtr make_square();

/// Continuous square-root branch on the plane cut along the ray from the
/// origin at angle `cut_angle`, pinned by a base point/value pair with
/// base_value^2 = base_point. Evaluation on the cut raises BranchError.
PlaneMapPtr make_sqrt_branch(double cut_angle, Complex base_point, Complex base_value);

/// (x, y) -> (e^x cos y, e^x sin y); inverse is the principal logarithm.
PlaneMapPtr make_planar_exp();

/// Pipeline composition: maps are applied in list order, the inverse in
/// reverse order; derivatives of the composite come from finite
/// differences.
PlaneMapPtr compose(std::vector<PlaneMapPtr> maps);

/// View of a map with eval and inverse swapped.
PlaneMapPtr inverse_map(PlaneMapPtr m);

/// Preimage of a windowed arc anchored at the origin under z -> z^2: both
/// square-root branches of the polyline, continued along the curve and
/// stitched into one symmetric polyline through 0. Feeding the result to
/// the arc-condition scan tests the square-root preimage construction at
/// desk scale.
geom::ClosedCurve sqrt_preimage_curve(const geom::ClosedCurve& arc);

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

struct MapDerivative {
    std::array<double, 2> value{0.0, 0.0};  // partials of both components
    double step = 0.0;                      // 0 for closed forms
    bool exact = false;
    bool step_warning = false;
};

/// Partial derivative of the map's component functions for multi-index k
/// (|k| <= 6). Closed form when the family provides it, otherwise nested
/// central differences with the boundary-aware step rule; the step used is
/// reported.
MapDerivative map_derivative(const PlaneMap& map, const MultiIndex2& k, Point2 p,
                             double dist_to_boundary = std::numeric_limits<double>::infinity());

}  // namespace qslab::maps
