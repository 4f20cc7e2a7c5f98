#include "qslab/geometry/curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qslab::geom {

void ClosedCurve::validate() const {
    if (closed && vertices.size() < 3)
        throw std::invalid_argument("closed curve needs at least 3 vertices");
    if (!closed && vertices.size() < 2)
        throw std::invalid_argument("open curve needs at least 2 vertices");
    const std::size_t n = vertices.size();
    const std::size_t edges = closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        if (vertices[i] == vertices[(i + 1) % n])
            throw std::invalid_argument("consecutive curve vertices must be distinct");
    }
}

ClosedCurve build_koch_snowflake(int iterations) {
    if (iterations < 0 || iterations > 8)
        throw std::invalid_argument("koch iterations must be in [0, 8]");
    // Counterclockwise equilateral triangle of side 1; the replacement
    // rotates each edge's middle third by -60 degrees so spikes point
    // outward.
    std::vector<Point2> v = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    const double c = 0.5, s = -std::sqrt(3.0) / 2.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Point2> next;
        next.reserve(v.size() * 4);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2 a = v[i];
            const Point2 b = v[(i + 1) % v.size()];
            const Point2 d{(b.x - a.x) / 3.0, (b.y - a.y) / 3.0};
            const Point2 p1 = a + d;
            const Point2 p2{a.x + 2.0 * d.x, a.y + 2.0 * d.y};
            const Point2 apex{p1.x + c * d.x - s * d.y, p1.y + s * d.x + c * d.y};
            next.push_back(a);
            next.push_back(p1);
            next.push_back(apex);
            next.push_back(p2);
        }
        v = std::move(next);
    }
    ClosedCurve out;
    out.vertices = std::move(v);
    out.closed = true;
    return out;
}

ClosedCurve regular_polygon(int n) {
    if (n < 3) throw std::invalid_argument("regular_polygon: need n >= 3");
    ClosedCurve out;
    out.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * double(i) / double(n);
        out.vertices.emplace_back(std::cos(t), std::sin(t));
    }
    out.closed = true;
    return out;
}

ClosedCurve segment_curve(Point2 a, Point2 b, int n) {
    if (n < 2) throw std::invalid_argument("segment_curve: need n >= 2");
    ClosedCurve out;
    out.closed = false;
    out.unbounded_window = {0.0, 1.0};
    out.vertices.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = double(i) / double(n - 1);
        out.vertices.push_back(a + t * (b - a));
    }
    return out;
}

double polyline_length(const ClosedCurve& c) {
    double len = 0.0;
    const std::size_t n = c.vertices.size();
    const std::size_t edges = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) len += dist(c.vertices[i], c.vertices[(i + 1) % n]);
    return len;
}

std::vector<Point2> sample_curve_points(const ClosedCurve& c, double spacing) {
    if (spacing <= 0.0) throw std::invalid_argument("sample_curve_points: spacing must be > 0");
    std::vector<Point2> pts;
    const std::size_t n = c.vertices.size();
    const std::size_t edges = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const Point2 a = c.vertices[i];
        const Point2 b = c.vertices[(i + 1) % n];
        const double len = dist(a, b);
        const int steps = std::max(1, int(std::ceil(len / spacing)));
        for (int k = 0; k < steps; ++k) {
            const double t = double(k) / double(steps);
            pts.push_back(a + t * (b - a));
        }
    }
    if (!c.closed) pts.push_back(c.vertices.back());
    return pts;
}

}  // namespace qslab::geom
