#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qslab/geometry/point.hpp"

namespace qslab::geom {

/// Polyline model of a Jordan curve (closed) or of a windowed arc whose
/// true object continues to infinity (open, with the truncation window
/// recorded so every report stays a windowed claim).
struct ClosedCurve {
    std::vector<Point2> vertices;
    bool closed = true;
    std::optional<std::pair<double, double>> unbounded_window;

    std::size_t size() const { return vertices.size(); }

    void validate() const;
};

/// Koch snowflake boundary after `iterations` refinements of an
/// equilateral triangle of side 1; 3*4^k edges, spikes outward.
ClosedCurve build_koch_snowflake(int iterations);

/// Regular n-gon inscribed in the unit circle (circle stand-in fixture).
ClosedCurve regular_polygon(int n);

/// Straight segment from a to b sampled with n vertices, as an open
/// windowed curve.
ClosedCurve segment_curve(Point2 a, Point2 b, int n);

/// Graph of y = f(x) over [x0, x1] sampled with n vertices (open curve,
/// window recorded).
template <class F>
ClosedCurve graph_curve(F f, double x0, double x1, int n) {
    ClosedCurve c;
    c.closed = false;
    c.unbounded_window = {x0, x1};
    c.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = x0 + (x1 - x0) * double(i) / double(n - 1);
        c.vertices.emplace_back(x, f(x));
    }
    return c;
}

double polyline_length(const ClosedCurve& c);

/// Points on the curve at spacing <= `spacing` (vertices always included).
std::vector<Point2> sample_curve_points(const ClosedCurve& c, double spacing);

}  // namespace qslab::geom
