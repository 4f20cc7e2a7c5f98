#pragma once

#include <vector>

#include "qslab/geometry/domain.hpp"

namespace qslab::geom {

/// Log-exact membership test: the strip half-heights exp(-exp(n^2))/2 are
/// compared against |y| in log space, never exponentiated.
bool nazarov_contains(const NazarovDomain& dom, Point2 p);

/// Exact signed distance by case analysis over the union's boundary
/// pieces: circle arcs cut where neighbouring discs or strips swallow
/// them, strip wall segments clipped against the discs, and the far end
/// cap. Distances at strip-height scale are produced in log space.
OraclePtr make_nazarov_oracle(const NazarovDomain& dom);

/// Boundary primitives discretized at resolution h (unfiltered; callers
/// remove points interior to the union).
std::vector<Point2> nazarov_boundary_points(const NazarovDomain& dom, double h);

}  // namespace qslab::geom
