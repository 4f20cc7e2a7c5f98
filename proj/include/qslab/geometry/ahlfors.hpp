#pragma once

#include <cstddef>
#include <utility>

#include "qslab/geometry/curve.hpp"

namespace qslab::geom {

struct AhlforsResult {
    double constant = 1.0;
    std::size_t i = 0;  // witness vertex pair, i < j
    std::size_t j = 0;
};

/// Three-point / arc condition constant of a polyline curve: the maximum
/// over vertex pairs (x, y) of
///     min(diam(arc1), diam(arc2)) / |x - y|,
/// where arc1 and arc2 are the two sub-polylines cut by the pair. Both
/// arcs keep their endpoints, so the constant is >= 1 for every simple
/// curve, and it equals 1 for circles and straight lines.
///
/// For open (windowed) curves only the middle sub-polyline enters: the two
/// end pieces stand in for arcs through infinity.
///
/// Sub-polyline diameters are exact (max pairwise vertex distance; a
/// polyline's diameter is attained at vertices). Incremental forward and
/// backward scans give O(n^3) worst case, fine at fixture sizes (<= 2048
/// vertices). A convex-hull rotating-calipers pass would drop this to
/// O(n^2 log n) if ever needed.
AhlforsResult ahlfors_constant(const ClosedCurve& curve);

}  // namespace qslab::geom
