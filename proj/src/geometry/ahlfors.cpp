#include "qslab/geometry/ahlfors.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qslab::geom {

namespace {

/// Squared diameter increase from appending vertex `w` to an arc.
inline double grow(const std::vector<Point2>& v, std::size_t first, std::size_t count,
                   std::size_t n, Point2 w, double diam2) {
    for (std::size_t s = 0; s < count; ++s) {
        const Point2 q = v[(first + s) % n];
        const double d2 = dist2(w, q);
        if (d2 > diam2) diam2 = d2;
    }
    return diam2;
}

}  // namespace

AhlforsResult ahlfors_constant(const ClosedCurve& curve) {
    curve.validate();
    const auto& v = curve.vertices;
    const std::size_t n = v.size();

    AhlforsResult best;
    best.constant = 0.0;
    auto offer = [&](double ratio, std::size_t i, std::size_t j) {
        if (ratio > best.constant) {
            best.constant = ratio;
            best.i = std::min(i, j);
            best.j = std::max(i, j);
        }
    };

    if (!curve.closed) {
        // Windowed arc of an unbounded curve: the pieces beyond the pair
        // run to infinity, so only the middle sub-polyline counts.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double diam2 = 0.0;
            for (std::size_t j = i + 1; j < n; ++j) {
                diam2 = grow(v, i, j - i, n, v[j], diam2);
                const double chord2 = dist2(v[i], v[j]);
                if (chord2 > 0.0) offer(std::sqrt(diam2 / chord2), i, j);
            }
        }
        if (best.constant == 0.0) throw std::invalid_argument("degenerate curve");
        return best;
    }

    // Closed curve: for each split pair both arcs matter. Forward pass
    // grows arc1 = v[i..j]; backward pass grows arc2 = v[j..i+n].
    std::vector<double> fwd(n, 0.0);  // fwd[j - i] = diam^2 of v[i..j]
    for (std::size_t i = 0; i < n; ++i) {
        double diam2 = 0.0;
        for (std::size_t k = 1; k < n; ++k) {
            diam2 = grow(v, i, k, n, v[(i + k) % n], diam2);
            fwd[k] = diam2;
        }
        double back2 = 0.0;  // diam^2 of v[j..i] as j walks down
        for (std::size_t k = n - 1; k >= 1; --k) {
            const std::size_t j = (i + k) % n;
            // arc v[j..i+n] gains vertex v[j] relative to v[j+1..i+n]
            back2 = grow(v, j + 1, n - k - 1 + 1, n, v[j], back2);
            const double chord2 = dist2(v[i], v[j]);
            if (chord2 == 0.0) throw std::invalid_argument("degenerate curve: repeated vertices");
            const double m2 = std::min(fwd[k], back2);
            offer(std::sqrt(m2 / chord2), i, j);
        }
    }
    return best;
}

}  // namespace qslab::geom
