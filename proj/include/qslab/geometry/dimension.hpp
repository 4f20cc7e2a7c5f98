#pragma once

#include <vector>

#include "qslab/geometry/point.hpp"

namespace qslab::geom {

struct DimensionReport {
    std::vector<double> scales;       // strictly decreasing box sizes
    std::vector<std::size_t> counts;  // occupied boxes per scale
    double slope = 0.0;               // fitted box-counting dimension
    double fit_quality = 0.0;         // R^2 of the log-log fit
};

/// Box-counting dimension of a point set: grid anchored at the origin,
/// geometric scale ladder of ratio 1/2 from `scale_max` down through
/// `n_scales` rungs, slope of log(count) against log(1/scale) by ordinary
/// least squares.
///
/// Requires at least 4 scales spanning at least 2 decades, and the point
/// sampler must resolve the set finer than the smallest scale (pass
/// `sampler_resolution` so the precondition can be enforced).
DimensionReport box_counting_dimension(const std::vector<Point2>& points, double scale_max,
                                       int n_scales, double sampler_resolution);

}  // namespace qslab::geom
