#include "qslab/geometry/dimension.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "qslab/num/fit.hpp"

namespace qslab::geom {

DimensionReport box_counting_dimension(const std::vector<Point2>& points, double scale_max,
                                       int n_scales, double sampler_resolution) {
    if (points.empty()) throw std::invalid_argument("box counting: no points");
    if (n_scales < 4) throw std::invalid_argument("box counting: need at least 4 scales");
    const double scale_min = scale_max * std::pow(0.5, n_scales - 1);
    if (scale_max / scale_min < 100.0)
        throw std::invalid_argument("box counting: scales must span at least 2 decades");
    if (sampler_resolution > scale_min)
        throw std::invalid_argument("box counting: sampler coarser than smallest scale");

    DimensionReport rep;
    rep.scales.reserve(n_scales);
    rep.counts.reserve(n_scales);
    double s = scale_max;
    for (int level = 0; level < n_scales; ++level, s *= 0.5) {
        std::unordered_set<std::uint64_t> boxes;
        boxes.reserve(points.size());
        for (const Point2& p : points) {
            // grid anchored at the origin
            const auto ix = std::int64_t(std::floor(p.x / s));
            const auto iy = std::int64_t(std::floor(p.y / s));
            boxes.insert((std::uint64_t(std::uint32_t(ix)) << 32) ^ std::uint64_t(std::uint32_t(iy)));
        }
        rep.scales.push_back(s);
        rep.counts.push_back(boxes.size());
    }
    // The coarsest rungs carry O(1) occupancy offsets that bias the slope;
    // fit on rungs with at least 8 boxes when enough of them exist.
    std::vector<double> lx, ly;
    for (int level = 0; level < n_scales; ++level) {
        if (rep.counts[level] < 8 && n_scales - level > 4) continue;
        lx.push_back(std::log(1.0 / rep.scales[level]));
        ly.push_back(std::log(double(rep.counts[level])));
    }
    if (lx.size() < 4) {
        lx.clear();
        ly.clear();
        for (int level = 0; level < n_scales; ++level) {
            lx.push_back(std::log(1.0 / rep.scales[level]));
            ly.push_back(std::log(double(rep.counts[level])));
        }
    }
    const auto fit = num::fit_line(lx, ly);
    rep.slope = fit.slope;
    rep.fit_quality = fit.r2;
    return rep;
}

}  // namespace qslab::geom
