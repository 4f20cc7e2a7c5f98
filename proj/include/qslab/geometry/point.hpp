#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qslab::geom {

using Complex = std::complex<double>;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py))
            throw std::invalid_argument("Point2: coordinates must be finite");
    }
    explicit Point2(Complex z) : Point2(z.real(), z.imag()) {}

    Complex cx() const { return {x, y}; }

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm2(Point2 p) { return p.x * p.x + p.y * p.y; }
inline double abs(Point2 p) { return std::hypot(p.x, p.y); }
inline double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double dist2(Point2 a, Point2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Distance from p to the closed segment [a, b].
inline double dist_to_segment(Point2 p, Point2 a, Point2 b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

}  // namespace qslab::geom
